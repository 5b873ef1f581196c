#include "mwave/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "mwave/errors.hpp"
#include "mwave/kahan.hpp"

namespace mwave {

namespace {

constexpr int kDepthCap = 40;

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& g, double a, double b,
             double fa, double fm, double fb, double whole, double tol,
             int depth) {
  if (depth > kDepthCap)
    throw QuadratureFailure("adaptive Simpson exceeded depth cap");
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = g(lm), frm = g(rm);
  double left = simpson(a, m, fa, flm, fm);
  double right = simpson(m, b, fm, frm, fb);
  double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adapt(g, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adapt(g, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

// Adaptive Simpson of g over [a, b] with absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double tol) {
  double m = 0.5 * (a + b);
  double fa = g(a), fm = g(m), fb = g(b);
  double whole = simpson(a, b, fa, fm, fb);
  return adapt(g, a, b, fa, fm, fb, whole, tol, 0);
}

// int_eps^N |f(t)|^2 dt/t on the log axis (u = log t).
double log_axis_energy(const SymbolFunction& f, double eps, double N,
                       double tol_abs) {
  auto integrand = [&](double u) {
    double v = f(std::exp(u));
    return v * v;
  };
  return adaptive_simpson(integrand, std::log(eps), std::log(N), tol_abs);
}

}  // namespace

double TruncationConstants::band_bound(double eps, double N) const {
  return c_L * std::pow(eps, 2 * l) + C_eta / std::pow(N, 2 * J);
}

double TruncationConstants::sum_bound(double a, int M, int N) const {
  return c_L_prime / std::pow(a, 4.0 * M * l) +
         C_eta_prime / std::pow(a, 4.0 * N * J);
}

ScaleGrid ScaleGrid::log_uniform(double t_min, double t_max,
                                 int nodes_per_decade) {
  ScaleGrid g;
  double u0 = std::log(t_min), u1 = std::log(t_max);
  int n = std::max(2, static_cast<int>(std::ceil(
                          (u1 - u0) / std::numbers::ln10 * nodes_per_decade)) +
                          1);
  double du = (u1 - u0) / (n - 1);
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = std::exp(u0 + i * du);
    g.weights[i] = (i == 0 || i == n - 1) ? 0.5 * du : du;
  }
  g.ratio = 0.0;
  return g;
}

ScaleGrid ScaleGrid::geometric(double a, int M, int N) {
  ScaleGrid g;
  double lna2 = 2.0 * std::log(a);
  for (int j = -M; j <= N; ++j) {
    g.nodes.push_back(std::exp(j * lna2));
    g.weights.push_back(lna2);
  }
  g.ratio = a * a;
  return g;
}

double calderon_constant(const SymbolFunction& f, double rel_tol) {
  if (f.vanishing_order < 1)
    throw NonAdmissible("calderon_constant requires vanishing order >= 1");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
    throw ConfigError("rel_tol out of range (0, 1e-3]");
  // Probe for a nontrivial symbol.
  double probe = 0.0;
  for (int i = 0; i < 64; ++i) {
    double s = std::pow(10.0, -6.0 + 10.0 * i / 63.0);
    probe = std::max(probe, std::fabs(f(s)));
  }
  if (probe == 0.0) throw NonAdmissible("symbol vanishes on the probe grid");

  // Coarse pass fixes the absolute tolerance for the adaptive pass.
  double coarse = 0.0;
  {
    KahanSum acc;
    const int n = 2000;
    double u0 = std::log(1e-8), u1 = std::log(SymbolFunction::s_max);
    double du = (u1 - u0) / n;
    for (int i = 0; i <= n; ++i) {
      double v = f(std::exp(u0 + i * du));
      acc.add((i == 0 || i == n ? 0.5 : 1.0) * v * v * du);
    }
    coarse = acc.value();
  }
  double c = log_axis_energy(f, 1e-8, SymbolFunction::s_max,
                             0.1 * rel_tol * std::max(coarse, 1e-300));
  if (!(c > 0.0)) throw NonAdmissible("Calderon constant is not positive");
  return c;
}

double band_integral(const SymbolFunction& f, double eps, double N,
                     double lambda) {
  if (!(eps > 0.0 && eps < N)) throw ConfigError("need 0 < eps < N");
  if (lambda < 0.0) throw ConfigError("lambda must be nonnegative");
  if (lambda == 0.0) return 0.0;
  auto integrand = [&](double u) {
    double v = f(lambda * std::exp(u));
    return v * v;
  };
  return adaptive_simpson(integrand, std::log(eps), std::log(N), 1e-14);
}

double discrete_sum(const SymbolFunction& f, double a, int M, int N,
                    double lambda) {
  if (!(a > 1.0)) throw ConfigError("discrete_sum requires a > 1");
  if (lambda < 0.0) throw ConfigError("lambda must be nonnegative");
  if (lambda == 0.0) return 0.0;
  // Descending magnitude: collect, sort, then compensated-sum.
  std::vector<double> terms;
  terms.reserve(M + N + 1);
  for (int j = -M; j <= N; ++j) {
    double s = std::pow(a, 2.0 * j) * lambda;
    double v = f(s);  // s > s_max shortcut handled inside
    terms.push_back(v * v);
  }
  std::sort(terms.begin(), terms.end(), std::greater<>());
  KahanSum acc;
  for (double v : terms) acc.add(v);
  return acc.value();
}

std::pair<double, double> daubechies_bounds(
    const SymbolFunction& f, double a, std::span<const double> lambda_grid) {
  if (!(a > 1.0)) throw ConfigError("daubechies_bounds requires a > 1");
  if (lambda_grid.empty()) throw ConfigError("empty lambda grid");
  double A = std::numeric_limits<double>::infinity();
  double B = 0.0;
  // 400 terms each way more than converges any Schwartz-decay symbol at
  // desk-scale lambda; the s_max shortcut zeroes the far tail.
  for (double lam : lambda_grid) {
    double h = discrete_sum(f, a, 400, 400, lam);
    A = std::min(A, h);
    B = std::max(B, h);
  }
  if (A < 1e-14)
    throw DegenerateSymbol("lower frame bound below 1e-14");
  return {A, B};
}

TruncationConstants truncation_constants(const SymbolFunction& f, double eta,
                                         double L, int J, double a) {
  if (!(0.0 < eta && eta < L)) throw ConfigError("need 0 < eta < L");
  if (J < 1) throw ConfigError("need J >= 1");
  if (!(a > 1.0)) throw ConfigError("need a > 1");
  TruncationConstants tc;
  tc.eta = eta;
  tc.L = L;
  tc.J = J;
  tc.l = f.vanishing_order;
  const int l = f.vanishing_order;
  const double MJ = decay_moment(f, J);
  const double sup2 = f.f0_sup * f.f0_sup;
  tc.c_L = std::pow(L, 2 * l) * sup2 / (2.0 * l);
  tc.C_eta = MJ * MJ / (2.0 * J * std::pow(eta, 2 * J));
  tc.c_L_prime = std::pow(L, 2 * l) * sup2 / (std::pow(a, 4 * l) - 1.0);
  tc.C_eta_prime =
      MJ * MJ / ((std::pow(a, 4 * J) - 1.0) * std::pow(eta, 2 * J));
  return tc;
}

}  // namespace mwave
