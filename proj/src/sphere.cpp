#include "mwave/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mwave/errors.hpp"
#include "mwave/kahan.hpp"

namespace mwave {

namespace {
using std::numbers::pi;
}

double gegenbauer(int l, double lambda, double tau) {
  if (l < 0) throw ConfigError("gegenbauer requires l >= 0");
  if (l == 0) return 1.0;
  double pm1 = 1.0;
  double p = 2.0 * lambda * tau;
  for (int k = 2; k <= l; ++k) {
    double next =
        (2.0 * (k + lambda - 1.0) * tau * p - (k + 2.0 * lambda - 2.0) * pm1) /
        k;
    pm1 = p;
    p = next;
  }
  return p;
}

double sphere_surface_area(int n) {
  if (n < 1) throw ConfigError("sphere_surface_area requires n >= 1");
  return 2.0 * std::pow(pi, (n + 1) / 2.0) / std::tgamma((n + 1) / 2.0);
}

double harmonic_dimension(int n, int l) {
  if (l == 0) return 1.0;
  auto binom = [](double a, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= (a - k + i) / i;
    return r;
  };
  return binom(n + l, n) - binom(n + l - 2, n);
}

double zonal_coefficient(int n, int l) {
  if (n < 2) throw ConfigError("zonal_coefficient requires n >= 2");
  return (n + 2.0 * l - 1.0) / (sphere_surface_area(n) * (n - 1.0));
}

double sphere_kernel_series(const SymbolFunction& f, double t, double cos_theta,
                            int n, int L_max) {
  if (!(t > 0.0)) throw ConfigError("sphere_kernel_series requires t > 0");
  if (cos_theta < -1.0 || cos_theta > 1.0)
    throw ConfigError("cos_theta must lie in [-1, 1]");
  if (n < 2) throw ConfigError("sphere_kernel_series requires n >= 2");
  int L = L_max > 0 ? L_max : static_cast<int>(std::ceil(12.0 / t)) + 16;
  const double lambda = (n - 1) / 2.0;

  // Inline upward Gegenbauer recurrence alongside the sum.
  KahanSum acc;
  double running_max = 0.0;
  double last_abs = 0.0;
  double pm1 = 0.0, p = 0.0;
  for (int l = 0; l <= L; ++l) {
    if (l == 0) {
      p = 1.0;
    } else if (l == 1) {
      pm1 = p;
      p = 2.0 * lambda * cos_theta;
    } else {
      double next = (2.0 * (l + lambda - 1.0) * cos_theta * p -
                     (l + 2.0 * lambda - 2.0) * pm1) /
                    l;
      pm1 = p;
      p = next;
    }
    double term =
        zonal_coefficient(n, l) * f(t * t * l * (l + n - 1.0)) * p;
    acc.add(term);
    last_abs = std::fabs(term);
    running_max = std::max(running_max, last_abs);
  }
  if (running_max > 0.0 && last_abs > 1e-12 * running_max)
    throw TruncationWarning("zonal series truncated before decay");
  return acc.value();
}

double heat_trace(double s, const HeatTraceSeries& series) {
  if (!(s > 0.0)) throw ConfigError("heat_trace requires s > 0");
  KahanSum acc;
  double sk = 1.0 / s;
  for (double c : series.coeffs) {
    acc.add(c * sk);
    sk *= s;
  }
  return acc.value();
}

MaclaurinApprox MaclaurinApprox::from_heat_trace(const HeatTraceSeries& series) {
  MaclaurinApprox m;
  m.a = series.coeffs;  // A(s) = s tr(e^{-s Delta}): same table, shifted power
  m.a_prime.resize(m.a.size() > 1 ? m.a.size() - 1 : 0);
  for (size_t k = 1; k < m.a.size(); ++k) m.a_prime[k - 1] = k * m.a[k];
  m.a_second.resize(m.a_prime.size() > 1 ? m.a_prime.size() - 1 : 0);
  for (size_t k = 1; k < m.a_prime.size(); ++k)
    m.a_second[k - 1] = k * m.a_prime[k];
  return m;
}

namespace {

double poly_at(const std::vector<double>& c, double s) {
  double r = 0.0;
  for (size_t k = c.size(); k-- > 0;) r = r * s + c[k];
  return r;
}

const MaclaurinApprox& default_maclaurin() {
  static const MaclaurinApprox m = MaclaurinApprox::from_heat_trace();
  return m;
}

}  // namespace

double MaclaurinApprox::p(double s, double theta) const {
  return poly_at(a, s) + theta * theta / 4.0 * poly_at(a_prime, s);
}

double MaclaurinApprox::q(double s, double theta) const {
  return poly_at(a_prime, s) + theta * theta / 4.0 * poly_at(a_second, s);
}

double gt_approx(double t, double theta) {
  if (!(t > 0.0)) throw ConfigError("gt_approx requires t > 0");
  const double s = t * t;
  const auto& m = default_maclaurin();
  return std::exp(-theta * theta / (4.0 * s)) / s * m.p(s, theta);
}

double ht_approx(double t, double theta, bool use_low_order_bracket) {
  if (!(t > 0.0)) throw ConfigError("ht_approx requires t > 0");
  const double s = t * t;
  const double th2 = theta * theta;
  const auto& m = default_maclaurin();
  if (use_low_order_bracket) {
    // Directly expanded bracket: -(1/s)[s^2 T' + (theta^2/4)(s^2 T'' + s T')]
    // with T = tr(e^{-s Delta}).
    HeatTraceSeries ht;
    const auto& c = ht.coeffs;
    double Tp = -c[0] / (s * s);
    double Tpp = 2.0 * c[0] / (s * s * s);
    double sk = 1.0;
    for (size_t k = 2; k < c.size(); ++k) {
      Tp += (k - 1.0) * c[k] * sk;           // d/ds of c_k s^{k-1}
      if (k >= 3) Tpp += (k - 1.0) * (k - 2.0) * c[k] * sk / s;
      sk *= s;
    }
    double bracket = s * s * Tp + th2 / 4.0 * (s * s * Tpp + s * Tp);
    return -std::exp(-th2 / (4.0 * s)) / s * bracket;
  }
  return std::exp(-th2 / (4.0 * s)) / s *
         ((1.0 - th2 / (4.0 * s)) * m.p(s, theta) - s * m.q(s, theta));
}

double sphere_distance(const std::array<double, 3>& x,
                       const std::array<double, 3>& y) {
  auto norm2 = [](const std::array<double, 3>& v) {
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  };
  if (std::fabs(norm2(x) - 1.0) > 2e-12 || std::fabs(norm2(y) - 1.0) > 2e-12)
    throw NotUnitVector("sphere_distance requires unit vectors");
  double dot = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  dot = std::clamp(dot, -1.0, 1.0);
  return std::acos(dot);
}

}  // namespace mwave
