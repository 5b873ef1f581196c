#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mwave/symbol.hpp"

namespace mwave {

// Explicit constants bounding the truncation error of the band integral
// g_{eps,N} and the discrete sum h_{M,N} on the spectral band [eta, L].
struct TruncationConstants {
  double c_L = 0.0;
  double C_eta = 0.0;
  double c_L_prime = 0.0;
  double C_eta_prime = 0.0;
  double eta = 0.0;
  double L = 0.0;
  int J = 1;
  int l = 1;

  double band_bound(double eps, double N) const;       // c_L eps^2l + C_eta/N^2J
  double sum_bound(double a, int M, int N) const;      // c'_L/a^4Ml + C'_eta/a^4NJ
};

// Logarithmic scale nodes with trapezoid weights for dt/t integrals.
struct ScaleGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double ratio = 0.0;  // geometric ratio, 0 if not geometric

  static ScaleGrid log_uniform(double t_min, double t_max,
                               int nodes_per_decade = 400);
  static ScaleGrid geometric(double a, int M, int N);
};

// c = int_0^inf |f(t)|^2 dt/t, by adaptive Simpson on the log axis.
double calderon_constant(const SymbolFunction& f, double rel_tol = 1e-10);

// g_{eps,N}(lambda) = int_eps^N |f(t lambda)|^2 dt/t.
double band_integral(const SymbolFunction& f, double eps, double N,
                     double lambda);

// h_{M,N}(lambda) = sum_{j=-M}^{N} |f(a^{2j} lambda)|^2.
double discrete_sum(const SymbolFunction& f, double a, int M, int N,
                    double lambda);

// Two-sided frame bounds (A_a, B_a) of the converged bilateral sum over a
// lambda grid covering one multiplicative period [lambda0, a^2 lambda0].
std::pair<double, double> daubechies_bounds(const SymbolFunction& f, double a,
                                            std::span<const double> lambda_grid);

TruncationConstants truncation_constants(const SymbolFunction& f, double eta,
                                         double L, int J, double a);

}  // namespace mwave
