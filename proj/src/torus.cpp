#include "mwave/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mwave/errors.hpp"
#include "mwave/kahan.hpp"

namespace mwave {

namespace {

using std::numbers::pi;

// Gaussian tails fall below 1e-16 at ~6 standard widths.
int eigen_cutoff(double t) { return static_cast<int>(std::ceil(6.0 / t)) + 8; }
int poisson_cutoff(double t) { return static_cast<int>(std::ceil(6.0 * t)) + 8; }

SeriesMode pick_mode(double t, SeriesMode mode) {
  if (mode != SeriesMode::Auto) return mode;
  return t >= 1.0 ? SeriesMode::Eigen : SeriesMode::Poisson;
}

// Sum terms largest-magnitude first with compensation.
double sorted_kahan(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::fabs(a) > std::fabs(b); });
  KahanSum acc;
  for (double v : terms) acc.add(v);
  return acc.value();
}

}  // namespace

TorusPoint TorusPoint::reduced(std::vector<double> raw) {
  for (double& r : raw) {
    r -= std::floor(r);      // [0, 1)
    if (r > 0.5) r -= 1.0;   // (-1/2, 1/2]
  }
  return TorusPoint{std::move(raw)};
}

double torus_eigenvalue(std::span<const int> m) {
  double n2 = 0.0;
  for (int mi : m) n2 += static_cast<double>(mi) * mi;
  return 4.0 * pi * pi * n2;
}

double theta_u(double t, double x, SeriesMode mode) {
  if (!(t > 0.0)) throw ConfigError("theta_u requires t > 0");
  std::vector<double> terms;
  if (pick_mode(t, mode) == SeriesMode::Eigen) {
    int N = eigen_cutoff(t);
    terms.push_back(1.0);
    for (int n = 1; n <= N; ++n)
      terms.push_back(2.0 * std::exp(-pi * t * t * n * n) *
                      std::cos(2.0 * pi * n * x));
  } else {
    int N = poisson_cutoff(t);
    for (int n = -N; n <= N; ++n) {
      double d = (n + x) / t;
      terms.push_back(std::exp(-pi * d * d) / t);
    }
  }
  return sorted_kahan(terms);
}

double theta_v(double t, double y, SeriesMode mode) {
  if (!(t > 0.0)) throw ConfigError("theta_v requires t > 0");
  std::vector<double> terms;
  if (pick_mode(t, mode) == SeriesMode::Eigen) {
    int N = eigen_cutoff(t);
    for (int n = 1; n <= N; ++n)
      terms.push_back(2.0 * (n * t) * (n * t) * std::exp(-pi * t * t * n * n) *
                      std::cos(2.0 * pi * n * y));
  } else {
    int N = poisson_cutoff(t);
    for (int n = -N; n <= N; ++n) {
      double d = (n + y) / t;
      terms.push_back((1.0 / (2.0 * pi) - d * d) * std::exp(-pi * d * d) / t);
    }
  }
  return sorted_kahan(terms);
}

double mexican_hat_t2(double t, double s1, double s2, SeriesMode mode) {
  return theta_u(t, s1, mode) * theta_v(t, s2, mode) +
         theta_u(t, s2, mode) * theta_v(t, s1, mode);
}

double torus_kernel(const SymbolFunction& f, double t, const TorusPoint& p,
                    int bandlimit) {
  if (!(t > 0.0)) throw ConfigError("torus_kernel requires t > 0");
  const int n = p.dim();
  if (n < 1 || n > 3) throw DimensionMismatch("torus_kernel supports n in 1..3");
  int B = bandlimit > 0 ? bandlimit
                        : static_cast<int>(std::ceil(8.0 / t));
  if (B < 1) throw ConfigError("bandlimit must be >= 1");

  std::vector<double> terms;
  double shell_abs = 0.0;
  std::vector<int> m(n, -B);
  const double B2 = static_cast<double>(B) * B;
  const double Bin2 = static_cast<double>(B - 1) * (B - 1);
  while (true) {
    double norm2 = 0.0;
    double phase = 0.0;
    for (int i = 0; i < n; ++i) {
      norm2 += static_cast<double>(m[i]) * m[i];
      phase += m[i] * p.coords[i];
    }
    if (norm2 <= B2) {
      double term = f(4.0 * pi * pi * t * t * norm2) * std::cos(2.0 * pi * phase);
      terms.push_back(term);
      if (norm2 > Bin2) shell_abs += std::fabs(term);
    }
    int i = 0;
    for (; i < n; ++i) {
      if (++m[i] <= B) break;
      m[i] = -B;
    }
    if (i == n) break;
  }
  double total_abs = 0.0;
  for (double v : terms) total_abs += std::fabs(v);
  double sum = sorted_kahan(terms);
  if (shell_abs > 1e-12 * std::max(total_abs, 1e-300))
    throw TruncationWarning("boundary lattice shell is not negligible");
  return sum;
}

double torus_distance(const TorusPoint& p, const TorusPoint& q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("torus_distance: dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    double d = std::fabs(p.coords[i] - q.coords[i]);
    d -= std::floor(d);
    d = std::min(d, 1.0 - d);
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace mwave
