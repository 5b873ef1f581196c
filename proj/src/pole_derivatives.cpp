#include <cmath>
#include <vector>

#include "mwave/errors.hpp"
#include "mwave/rational.hpp"
#include "mwave/sphere.hpp"

namespace mwave {

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

RatPoly poly_scale(const RatPoly& a, Rat s) {
  RatPoly r = a;
  for (auto& c : r) c = c * s;
  return r;
}

RatPoly poly_derivative(const RatPoly& a) {
  if (a.size() <= 1) return {};
  RatPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * Rat(static_cast<std::int64_t>(i));
  return r;
}

Rat poly_eval(const RatPoly& a, Rat x) {
  Rat r;
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

namespace {

// State of D^m u as coefficient polynomials: coeff[j] multiplies u^{(j)},
// j = 1..2m.  Applying D = n x d/dx - (1 - x^2) d^2/dx^2 once:
//   D(p u^{(j)}) = n x (p' u^{(j)} + p u^{(j+1)})
//                  - (1-x^2)(p'' u^{(j)} + 2 p' u^{(j+1)} + p u^{(j+2)}).
std::vector<RatPoly> apply_radial_laplacian(const std::vector<RatPoly>& coeff,
                                            int n) {
  const RatPoly nx = {Rat(0), Rat(n)};                 // n x
  const RatPoly w = {Rat(1), Rat(0), Rat(-1)};         // 1 - x^2
  std::vector<RatPoly> out(coeff.size() + 2);
  for (size_t j = 0; j < coeff.size(); ++j) {
    const RatPoly& p = coeff[j];
    if (p.empty()) continue;
    RatPoly dp = poly_derivative(p);
    RatPoly ddp = poly_derivative(dp);
    out[j] = poly_add(out[j],
                      poly_add(poly_mul(nx, dp),
                               poly_scale(poly_mul(w, ddp), Rat(-1))));
    out[j + 1] =
        poly_add(out[j + 1],
                 poly_add(poly_mul(nx, p),
                          poly_scale(poly_mul(w, dp), Rat(-2))));
    out[j + 2] = poly_add(out[j + 2], poly_scale(poly_mul(w, p), Rat(-1)));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rat>> pole_triangle(int m, int n) {
  if (m < 1 || m > 6) throw ConfigError("pole_triangle supports 1 <= m <= 6");
  if (n < 1) throw ConfigError("pole_triangle requires n >= 1");
  std::vector<std::vector<Rat>> tri(m, std::vector<Rat>(m));
  // coeff[j] is the polynomial multiplying u^{(j)}; start from D^0 u = u.
  std::vector<RatPoly> coeff(1);
  coeff[0] = {Rat(1)};
  for (int i = 1; i <= m; ++i) {
    coeff = apply_radial_laplacian(coeff, n);
    // At x = 1 the factors (1 - x^2)^{j-i} kill all u^{(j)}, j > i.
    for (int j = 1; j <= m; ++j) {
      tri[i - 1][j - 1] = (j < static_cast<int>(coeff.size()))
                              ? poly_eval(coeff[j], Rat(1))
                              : Rat(0);
    }
    if (tri[i - 1][i - 1].is_zero())
      throw SingularTriangle("diagonal entry p_m(1) vanished");
  }
  return tri;
}

double pole_even_derivative(int m, std::span<const double> delta_powers,
                            int n) {
  if (static_cast<int>(delta_powers.size()) < m)
    throw ConfigError("delta_powers must supply m values");
  auto tri_n = pole_triangle(m, n);
  auto tri_1 = pole_triangle(m, 1);
  for (int i = 0; i < m; ++i) {
    if (std::fabs(tri_n[i][i].to_double()) < 1e-12)
      throw SingularTriangle("near-singular diagonal");
  }
  // Forward-substitute the lower... the triangle is upper in the sense that
  // (D^i u)(1) depends on u'(1)..u^{(i)}(1): solve for v = derivatives of u
  // at 1 from w = (Delta^i U)(N).
  std::vector<double> v(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double acc = delta_powers[i];
    for (int j = 0; j < i; ++j) acc -= tri_n[i][j].to_double() * v[j];
    v[i] = acc / tri_n[i][i].to_double();
  }
  // On S^1, Delta = -d^2/dtheta^2, so the 2m-th theta-derivative is
  // (-1)^m (D_1^m u)(1).
  double result = 0.0;
  for (int j = 0; j < m; ++j) result += tri_1[m - 1][j].to_double() * v[j];
  return (m % 2 == 0 ? 1.0 : -1.0) * result;
}

}  // namespace mwave
