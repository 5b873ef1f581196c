#pragma once

#include <span>
#include <vector>

#include "mwave/symbol.hpp"

namespace mwave {

// Point on T^n with unit-circumference coordinates reduced into (-1/2, 1/2].
struct TorusPoint {
  std::vector<double> coords;

  static TorusPoint reduced(std::vector<double> raw);
  int dim() const { return static_cast<int>(coords.size()); }
};

enum class SeriesMode { Auto, Eigen, Poisson };

// Eigenvalue of the mode e^{2 pi i m.r}: 4 pi^2 |m|^2.
double torus_eigenvalue(std::span<const int> m);

// Theta building blocks: eigen series converges fast for t >= 1, the
// Poisson-summed Gaussian series for t < 1; both are valid everywhere.
double theta_u(double t, double x, SeriesMode mode = SeriesMode::Auto);
double theta_v(double t, double y, SeriesMode mode = SeriesMode::Auto);

// Mexican hat on T^2: h_t(s1, s2) = U_t(s1) V_t(s2) + U_t(s2) V_t(s1),
// the kernel of f(t^2 Delta) at offset (s1, s2) for f(u) = u e^{-u/4pi}/4pi^2.
double mexican_hat_t2(double t, double s1, double s2,
                      SeriesMode mode = SeriesMode::Auto);

// Generic-f kernel by truncated lattice sum over |m| <= bandlimit.
// bandlimit = 0 picks the default ceil(8/t).
double torus_kernel(const SymbolFunction& f, double t, const TorusPoint& p,
                    int bandlimit = 0);

// Wrap-around Euclidean metric on T^n.
double torus_distance(const TorusPoint& p, const TorusPoint& q);

}  // namespace mwave
