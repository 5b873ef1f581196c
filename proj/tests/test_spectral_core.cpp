#include <cmath>
#include <vector>

#include "doctest.h"
#include "mwave/errors.hpp"
#include "mwave/spectral_core.hpp"
#include "mwave/symbol.hpp"

using namespace mwave;

namespace {

// Independent oracle: plain trapezoid on a dense log grid.
double calderon_trapezoid(const SymbolFunction& f) {
  const int n = 400000;
  const double lo = std::log(1e-9), hi = std::log(1e4);
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    double u = lo + (hi - lo) * i / n;
    double v = f(std::exp(u));
    double w = (i == 0 || i == n) ? 0.5 : 1.0;
    sum += w * v * v;
  }
  return sum * (hi - lo) / n;
}

// Closed-form antiderivative of u e^{-2u}: -(u/2 + 1/4) e^{-2u}.
double mexican1_band_oracle(double eps, double N, double lambda) {
  auto F = [](double x) { return -(x / 2.0 + 0.25) * std::exp(-2.0 * x); };
  return F(N * lambda) - F(eps * lambda);
}

}  // namespace

TEST_CASE("calderon constant closed forms") {
  CHECK(calderon_constant(make_mexican(1)) ==
        doctest::Approx(0.25).epsilon(1e-9));
  CHECK(calderon_constant(make_mexican(2)) ==
        doctest::Approx(0.375).epsilon(1e-9));
}

TEST_CASE("calderon constant matches trapezoid oracle") {
  SymbolFunction f = make_paper_torus();
  double oracle = calderon_trapezoid(f);
  CHECK(calderon_constant(f) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("calderon constant is dilation invariant") {
  SymbolFunction f = make_mexican(1);
  double c = calderon_constant(f);
  for (double sigma : {0.5, 1.0, 7.0}) {
    CHECK(calderon_constant(dilate(f, sigma)) ==
          doctest::Approx(c).epsilon(1e-8));
  }
}

TEST_CASE("non-admissible symbol is rejected") {
  CHECK_THROWS_AS(calderon_constant(make_gauss()), NonAdmissible);
}

TEST_CASE("band integral against closed form") {
  SymbolFunction f = make_mexican(1);
  for (double lambda : {0.5, 1.0, 4.0, 40.0}) {
    double got = band_integral(f, 0.01, 10.0, lambda);
    CHECK(got ==
          doctest::Approx(mexican1_band_oracle(0.01, 10.0, lambda))
              .epsilon(1e-8));
  }
  CHECK(band_integral(f, 0.01, 10.0, 0.0) == 0.0);
}

TEST_CASE("band integral increases with window") {
  SymbolFunction f = make_mexican(2);
  double narrow = band_integral(f, 0.1, 1.0, 1.0);
  double wide = band_integral(f, 0.01, 10.0, 1.0);
  CHECK(narrow < wide);
  CHECK(wide < calderon_constant(f));
}

TEST_CASE("truncation bound dominates the band-integral error") {
  SymbolFunction f = make_mexican(1);
  const double eta = 2.0, L = 30.0;
  TruncationConstants tc = truncation_constants(f, eta, L, 2, 2.0);
  double c = calderon_constant(f);
  const double eps = 1e-3, N = 50.0;
  for (int i = 0; i < 100; ++i) {
    double lambda = eta + (L - eta) * i / 99.0;
    double err = c - band_integral(f, eps, N, lambda);
    CHECK(err >= 0.0);
    CHECK(err <= tc.band_bound(eps, N) * (1.0 + 1e-9));
  }
}

TEST_CASE("truncation constants closed forms for mexican:1") {
  // l = 1, f0 = e^{-s} so sup|f0| = 1: c_L = L^2 / 2.
  TruncationConstants tc = truncation_constants(make_mexican(1), 0.5, 1.0, 2,
                                                2.0);
  CHECK(tc.c_L == doctest::Approx(0.5).epsilon(1e-6));
  // M_2 = max r^3 e^{-r} = 27 e^{-3}; C_eta = M_2^2 / (2 J eta^{2J}) with
  // J = 2, eta = 1/2.
  double m2 = 27.0 * std::exp(-3.0);
  CHECK(tc.C_eta == doctest::Approx(4.0 * m2 * m2).epsilon(1e-6));
}

TEST_CASE("c_L scales as L^{2l}") {
  SymbolFunction f = make_mexican(1);
  TruncationConstants t1 = truncation_constants(f, 0.5, 1.0, 2, 2.0);
  TruncationConstants t2 = truncation_constants(f, 0.5, 2.0, 2, 2.0);
  CHECK(t2.c_L / t1.c_L == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("discrete sum matches direct loop") {
  SymbolFunction f = make_mexican(1);
  const double a = 2.0, lambda = 1.3;
  double direct = 0.0;
  for (int j = -20; j <= 20; ++j) {
    double v = f(std::pow(a, 2.0 * j) * lambda);
    direct += v * v;
  }
  CHECK(discrete_sum(f, a, 20, 20, lambda) ==
        doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("discrete sum is periodic in log lambda") {
  SymbolFunction f = make_mexican(1);
  const double a = std::sqrt(2.0);
  for (double lambda : {0.7, 1.0, 2.9}) {
    CHECK(discrete_sum(f, a, 400, 400, lambda) ==
          doctest::Approx(discrete_sum(f, a, 400, 400, a * a * lambda))
              .epsilon(1e-10));
  }
}

TEST_CASE("frame bounds tighten as the lattice refines") {
  SymbolFunction f = make_mexican(1);
  double prev_ratio = 1e300;
  for (double a : {4.0, 2.0, std::sqrt(2.0), std::pow(2.0, 0.25)}) {
    // One multiplicative period [1, a^2], log spaced.
    std::vector<double> grid;
    for (int i = 0; i < 256; ++i)
      grid.push_back(std::pow(a, 2.0 * i / 256.0));
    auto [A, B] = daubechies_bounds(f, a, grid);
    CHECK(A > 0.0);
    CHECK(B >= A);
    double ratio = B / A;
    CHECK(ratio < prev_ratio);
    prev_ratio = ratio;
  }
  // Finest lattice is nearly tight.
  CHECK(prev_ratio == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("log-uniform scale grid integrates dt/t exactly") {
  ScaleGrid g = ScaleGrid::log_uniform(1e-3, 1e1, 100);
  double total = 0.0;
  for (double w : g.weights) total += w;
  CHECK(total == doctest::Approx(std::log(1e1 / 1e-3)).epsilon(1e-12));
  CHECK(g.nodes.front() == doctest::Approx(1e-3));
  CHECK(g.nodes.back() == doctest::Approx(1e1));
}

TEST_CASE("geometric scale grid has constant ratio a^2") {
  ScaleGrid g = ScaleGrid::geometric(2.0, 3, 4);
  REQUIRE(g.nodes.size() == 8);
  CHECK(g.ratio == doctest::Approx(4.0));
  for (size_t i = 1; i < g.nodes.size(); ++i)
    CHECK(g.nodes[i] / g.nodes[i - 1] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("symbol grammar") {
  CHECK(parse_symbol("mexican:3").vanishing_order == 3);
  CHECK(parse_symbol("paper-torus").vanishing_order == 1);
  CHECK(parse_symbol("gauss").vanishing_order == 0);
  CHECK_THROWS_AS(parse_symbol("mexican:0"), NonAdmissible);
  CHECK_THROWS_AS(parse_symbol("nope"), ConfigError);
}

TEST_CASE("decay moment closed form") {
  // max_r r^2 . r e^{-r} = 27 e^{-3}.
  CHECK(decay_moment(make_mexican(1), 2) ==
        doctest::Approx(27.0 * std::exp(-3.0)).epsilon(1e-8));
}
