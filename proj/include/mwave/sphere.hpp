#pragma once

#include <array>
#include <span>
#include <vector>

#include "mwave/rational.hpp"
#include "mwave/symbol.hpp"

namespace mwave {

// Gegenbauer (ultraspherical) polynomial P_l^lambda(tau) by upward
// three-term recurrence; lambda = 1/2 gives Legendre.
double gegenbauer(int l, double lambda, double tau);

// Surface area omega_n of S^n (omega_2 = 4 pi).
double sphere_surface_area(int n);

// dim H_l, the space of degree-l spherical harmonics on S^n.
double harmonic_dimension(int n, int l);

// c_l = (n + 2l - 1) / (omega_n (n - 1)) in Z_l = c_l P_l^lambda.
double zonal_coefficient(int n, int l);

// K_t(N, y) = sum_l c_l f(t^2 l(l+n-1)) P_l^lambda(cos theta).
// L_max = 0 picks the default ceil(12/t) + 16.
double sphere_kernel_series(const SymbolFunction& f, double t, double cos_theta,
                            int n = 2, int L_max = 0);

// Small-s expansion of tr(e^{-s Delta}) on S^2: coeffs[k] is the
// coefficient of s^{k-1}.
struct HeatTraceSeries {
  std::vector<double> coeffs = {1.0, 1.0 / 3.0, 1.0 / 15.0, 4.0 / 315.0,
                                1.0 / 315.0};
};

double heat_trace(double s, const HeatTraceSeries& series = {});

// Polynomial brackets of the small-t closed forms, derived from the heat
// trace: with A(s) = s * tr(e^{-s Delta}) truncated,
//   4pi g_t ~ e^{-theta^2/4s}/s [A + (theta^2/4) A']
//   4pi h_t ~ e^{-theta^2/4s}/s [(1 - theta^2/4s) p - s q],
// p = A + (theta^2/4) A', q = A' + (theta^2/4) A''.
struct MaclaurinApprox {
  std::vector<double> a;        // A(s)
  std::vector<double> a_prime;  // A'(s)
  std::vector<double> a_second; // A''(s)

  static MaclaurinApprox from_heat_trace(const HeatTraceSeries& series = {});
  double p(double s, double theta) const;
  double q(double s, double theta) const;
};

// Closed-form small-t approximations of 4pi g_t(cos theta) and
// 4pi h_t(cos theta) on S^2 (s = t^2).
double gt_approx(double t, double theta);
// use_low_order_bracket selects the directly expanded bracket instead of the
// s-differentiated form; the two differ at fourth order in theta.
double ht_approx(double t, double theta, bool use_low_order_bracket = false);

// Geodesic distance on S^2 embedded in R^3.
double sphere_distance(const std::array<double, 3>& x,
                       const std::array<double, 3>& y);

// Pole derivatives: the coefficient-polynomial triangle of the radial
// operator D = n x d/dx - (1 - x^2) d^2/dx^2.
// triangle(m, n)[i][j] (1-based logical indices stored 0-based) is the exact
// value p_{i+1,j+1}(1) in (D^{i+1} u)(1) = sum_j p_{i+1,j+1}(1) u^{(j+1)}(1).
std::vector<std::vector<Rat>> pole_triangle(int m, int n);

// d^{2m}/dtheta^{2m} [u(cos theta)] |_{theta=0} from the values
// delta_powers[i-1] = (Delta^i U)(N), i = 1..m, on S^n.
double pole_even_derivative(int m, std::span<const double> delta_powers, int n);

}  // namespace mwave
