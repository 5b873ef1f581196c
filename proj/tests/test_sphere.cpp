#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "mwave/errors.hpp"
#include "mwave/sphere.hpp"
#include "mwave/wavelet.hpp"

using namespace mwave;
using std::numbers::pi;

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("gegenbauer endpoint values") {
  // P_l^lambda(1) = binom(n + l - 2, l) with lambda = (n-1)/2.
  for (int n : {2, 3, 4}) {
    double lambda = (n - 1) / 2.0;
    for (int l = 0; l <= 60; ++l) {
      CHECK(gegenbauer(l, lambda, 1.0) ==
            doctest::Approx(binom(n + l - 2, l)).epsilon(1e-11));
    }
  }
}

TEST_CASE("gegenbauer generating function") {
  // (1 - 2 tau r + r^2)^{-lambda} = sum_l P_l^lambda(tau) r^l.
  const double tau = 0.3, r = 0.7;
  for (double lambda : {0.5, 1.0, 1.5}) {
    double sum = 0.0, rp = 1.0;
    for (int l = 0; l <= 400; ++l) {
      sum += gegenbauer(l, lambda, tau) * rp;
      rp *= r;
    }
    double closed = std::pow(1.0 - 2.0 * tau * r + r * r, -lambda);
    CHECK(sum == doctest::Approx(closed).epsilon(1e-10));
  }
}

TEST_CASE("gegenbauer parity") {
  for (int l = 0; l <= 12; ++l) {
    double sign = (l % 2 == 0) ? 1.0 : -1.0;
    CHECK(gegenbauer(l, 0.5, -0.37) ==
          doctest::Approx(sign * gegenbauer(l, 0.5, 0.37)).epsilon(1e-13));
  }
}

TEST_CASE("surface area, harmonic dimension, zonal coefficient") {
  CHECK(sphere_surface_area(2) == doctest::Approx(4.0 * pi).epsilon(1e-14));
  CHECK(sphere_surface_area(3) ==
        doctest::Approx(2.0 * pi * pi).epsilon(1e-14));
  for (int l = 0; l <= 10; ++l) {
    CHECK(harmonic_dimension(2, l) == doctest::Approx(2.0 * l + 1.0));
    CHECK(zonal_coefficient(2, l) ==
          doctest::Approx((2.0 * l + 1.0) / (4.0 * pi)).epsilon(1e-14));
  }
  // dim H_l on S^3 is (l+1)^2.
  for (int l = 0; l <= 10; ++l)
    CHECK(harmonic_dimension(3, l) == doctest::Approx((l + 1.0) * (l + 1.0)));
}

TEST_CASE("kernel series mean vanishes for admissible symbols") {
  SymbolFunction f = make_mexican(1);
  const double t = 0.15;
  std::vector<double> nodes, weights;
  gauss_legendre(512, nodes, weights);
  double mean = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i)
    mean += 2.0 * pi * weights[i] * sphere_kernel_series(f, t, nodes[i]);
  CHECK(std::fabs(mean) <= 1e-10);
}

TEST_CASE("kernel diagonal trace identity") {
  // integral of K_t(y, y) over S^2 equals sum_l (2l+1) f(t^2 l(l+1)).
  SymbolFunction f = make_mexican(1);
  const double t = 0.4;
  double trace = 0.0;
  for (int l = 0; l <= 400; ++l)
    trace += (2.0 * l + 1.0) * f(t * t * l * (l + 1.0));
  CHECK(4.0 * pi * sphere_kernel_series(f, t, 1.0) ==
        doctest::Approx(trace).epsilon(1e-12));
}

TEST_CASE("mexican kernel is -s d/ds of the heat kernel") {
  // s = t^2; series with f(s) = s e^{-s} equals -s dg/ds pointwise.
  const double s = 0.25, theta = 0.8;
  const double t = std::sqrt(s);
  const double h = 1e-5;
  SymbolFunction gauss = make_gauss();
  double gp = sphere_kernel_series(gauss, std::sqrt(s + h), std::cos(theta));
  double gm = sphere_kernel_series(gauss, std::sqrt(s - h), std::cos(theta));
  double expect = -s * (gp - gm) / (2.0 * h);
  CHECK(sphere_kernel_series(make_mexican(1), t, std::cos(theta)) ==
        doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("kernel series is stable under cutoff doubling") {
  SymbolFunction f = make_mexican(1);
  const double t = 0.07;
  int L = static_cast<int>(std::ceil(12.0 / t)) + 16;
  CHECK(sphere_kernel_series(f, t, 0.3, 2, L) ==
        doctest::Approx(sphere_kernel_series(f, t, 0.3, 2, 2 * L))
            .epsilon(1e-12));
}

TEST_CASE("heat trace against the converged eigenvalue sum") {
  for (auto [s, tol] : {std::pair{0.01, 1e-6}, {0.1, 1e-3}}) {
    double exact = 0.0;
    for (int l = 2000; l >= 0; --l)
      exact += (2.0 * l + 1.0) * std::exp(-s * l * (l + 1.0));
    CHECK(std::fabs(heat_trace(s) - exact) / exact <= tol);
  }
}

TEST_CASE("maclaurin bracket coefficients") {
  MaclaurinApprox m = MaclaurinApprox::from_heat_trace();
  const std::vector<double> a = {1.0, 1.0 / 3.0, 1.0 / 15.0, 4.0 / 315.0,
                                 1.0 / 315.0};
  const std::vector<double> ap = {1.0 / 3.0, 2.0 / 15.0, 4.0 / 105.0,
                                  4.0 / 315.0};
  const std::vector<double> as = {2.0 / 15.0, 8.0 / 105.0, 4.0 / 105.0};
  REQUIRE(m.a.size() == a.size());
  REQUIRE(m.a_prime.size() == ap.size());
  REQUIRE(m.a_second.size() == as.size());
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(m.a[i] == doctest::Approx(a[i]).epsilon(1e-15));
  for (size_t i = 0; i < ap.size(); ++i)
    CHECK(m.a_prime[i] == doctest::Approx(ap[i]).epsilon(1e-15));
  for (size_t i = 0; i < as.size(); ++i)
    CHECK(m.a_second[i] == doctest::Approx(as[i]).epsilon(1e-15));
}

TEST_CASE("closed-form approximations track the exact series") {
  const double t = 0.1;
  for (double theta : {0.05, 0.2, 0.5, 1.0, 2.0, 3.0}) {
    double g_series =
        4.0 * pi * sphere_kernel_series(make_gauss(), t, std::cos(theta), 2,
                                        2000);
    CHECK(std::fabs(gt_approx(t, theta) - g_series) <= 1e-3);
    double h_series =
        4.0 * pi * sphere_kernel_series(make_mexican(1), t, std::cos(theta),
                                        2, 2000);
    CHECK(std::fabs(ht_approx(t, theta) - h_series) <= 1.2e-3);
  }
}

TEST_CASE("approximation spot values") {
  CHECK(gt_approx(0.1, 0.3) == doctest::Approx(10.655).epsilon(0.002));
  CHECK(ht_approx(0.1, 0.4) == doctest::Approx(-5.593).epsilon(0.004));
}

TEST_CASE("low-order bracket differs at fourth order in theta") {
  const double t = 0.3;
  double d_small =
      std::fabs(ht_approx(t, 0.05, true) - ht_approx(t, 0.05, false));
  double d_large =
      std::fabs(ht_approx(t, 0.4, true) - ht_approx(t, 0.4, false));
  CHECK(d_small < d_large);
}

TEST_CASE("sphere distance") {
  std::array<double, 3> np = {0.0, 0.0, 1.0};
  std::array<double, 3> sp = {0.0, 0.0, -1.0};
  std::array<double, 3> eq = {1.0, 0.0, 0.0};
  CHECK(sphere_distance(np, sp) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(sphere_distance(np, eq) == doctest::Approx(pi / 2.0).epsilon(1e-14));
  CHECK(sphere_distance(np, np) == 0.0);
  std::array<double, 3> bad = {0.0, 0.0, 1.5};
  CHECK_THROWS_AS(sphere_distance(np, bad), NotUnitVector);
}

TEST_CASE("pole triangle first row") {
  // (D u)(1) = n u'(1), so p_{1,1}(1) = n.
  for (int n : {1, 2, 3, 5}) {
    auto tri = pole_triangle(1, n);
    REQUIRE(tri.size() == 1);
    CHECK(tri[0][0] == Rat(n));
  }
}

TEST_CASE("pole second derivative of a degree-1 zonal harmonic") {
  // u(cos theta) = cos theta: d^2/dtheta^2 at 0 is -1; (Delta U)(N) = n.
  for (int n : {2, 3, 4}) {
    const double w[] = {static_cast<double>(n)};
    CHECK(pole_even_derivative(1, w, n) ==
          doctest::Approx(-1.0).epsilon(1e-13));
  }
}

TEST_CASE("pole fourth derivative of P_2 on S^2") {
  // Legendre P_2: eigenvalue 6, so (Delta U, Delta^2 U)(N) = (6, 36);
  // d^4/dtheta^4 [P_2(cos theta)] at 0 is 12.
  const double w[] = {6.0, 36.0};
  CHECK(pole_even_derivative(2, w, 2) == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("pole derivatives match a finite-difference oracle") {
  // u = P_3 on S^2: eigenvalue 12. Oracle: high-order central differences of
  // theta -> P_3(cos theta).
  auto u = [](double theta) {
    double x = std::cos(theta);
    return 0.5 * (5.0 * x * x * x - 3.0 * x);
  };
  const double h = 0.02;
  double d4 = 0.0;
  // Sixth-order accurate fourth-derivative stencil.
  const double c[] = {-(1.0 / 6.0), 2.0, -(13.0 / 2.0), 28.0 / 3.0,
                      -(13.0 / 2.0), 2.0, -(1.0 / 6.0)};
  for (int k = -3; k <= 3; ++k) d4 += c[k + 3] * u(k * h);
  d4 /= h * h * h * h;
  const double w[] = {12.0, 144.0};
  CHECK(pole_even_derivative(2, w, 2) == doctest::Approx(d4).epsilon(1e-6));
}
