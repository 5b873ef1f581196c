#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mwave/errors.hpp"
#include "mwave/wavelet.hpp"

using namespace mwave;
using std::numbers::pi;

namespace {

SpectralField small_torus1_field() {
  SpectralField F;
  F.manifold = Manifold::Torus1;
  F.modes = {{{0, 0}, 0.4}, {{1, 0}, 1.0}, {{-1, 0}, 1.0},
             {{3, 0}, -0.5}, {{-3, 0}, -0.5}};
  F.bandlimit = 3;
  return F;
}

}  // namespace

TEST_CASE("mode eigenvalues") {
  CHECK(mode_eigenvalue(Manifold::Torus1, {1, 0}) ==
        doctest::Approx(4.0 * pi * pi));
  CHECK(mode_eigenvalue(Manifold::Torus2, {3, 4}) ==
        doctest::Approx(100.0 * pi * pi));
  CHECK(mode_eigenvalue(Manifold::Sphere2, {5, 0}) == doctest::Approx(30.0));
}

TEST_CASE("apply_wavelet scales a single mode by f(t^2 lambda)") {
  SpectralField F;
  F.manifold = Manifold::Torus1;
  F.modes = {{{1, 0}, 1.0}};
  F.bandlimit = 1;
  SymbolFunction f = make_mexican(1);
  SpectralField T = apply_wavelet(F, f, 0.5);
  // t^2 lambda = 0.25 * 4 pi^2 = pi^2.
  CHECK(T.modes[0].coeff ==
        doctest::Approx(pi * pi * std::exp(-pi * pi)).epsilon(1e-14));
}

TEST_CASE("apply_wavelet annihilates the constant mode exactly") {
  SpectralField F = small_torus1_field();
  SpectralField T = apply_wavelet(F, make_mexican(1), 0.3);
  CHECK(T.modes[0].coeff == 0.0);
}

TEST_CASE("apply_wavelet is linear") {
  SymbolFunction f = make_mexican(2);
  SpectralField F = small_torus1_field();
  SpectralField G = F;
  for (Mode& m : G.modes) m.coeff *= -2.5;
  SpectralField TF = apply_wavelet(F, f, 0.7);
  SpectralField TG = apply_wavelet(G, f, 0.7);
  for (size_t i = 0; i < TF.modes.size(); ++i)
    CHECK(TG.modes[i].coeff ==
          doctest::Approx(-2.5 * TF.modes[i].coeff).epsilon(1e-14));
}

TEST_CASE("grid synthesis satisfies Parseval on the torus") {
  SpectralField F = small_torus1_field();
  GridField g = GridField::synthesize(F, 64);
  CHECK(g.weight_total() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.norm2() == doctest::Approx(F.parseval_norm2()).epsilon(1e-10));
}

TEST_CASE("grid synthesis satisfies Parseval on the sphere") {
  SpectralField F;
  F.manifold = Manifold::Sphere2;
  F.modes = {{{0, 0}, 0.3}, {{2, 0}, 1.2}, {{5, 0}, -0.8}};
  F.bandlimit = 5;
  GridField g = GridField::synthesize(F, 64);
  CHECK(g.weight_total() == doctest::Approx(4.0 * pi).epsilon(1e-10));
  CHECK(g.norm2() == doctest::Approx(F.parseval_norm2()).epsilon(1e-10));
}

TEST_CASE("sup norm of a single torus mode") {
  SpectralField F;
  F.manifold = Manifold::Torus1;
  F.modes = {{{2, 0}, 1.0}};
  F.bandlimit = 2;
  SymbolFunction f = make_mexican(1);
  const double t = 0.1;
  double lam = mode_eigenvalue(Manifold::Torus1, {2, 0});
  CHECK(sup_norm(F, t, f, 64) ==
        doctest::Approx(std::fabs(f(t * t * lam))).epsilon(1e-12));
}

TEST_CASE("sup norm rejects under-resolved grids") {
  SpectralField F = small_torus1_field();
  CHECK_THROWS_AS(sup_norm(F, 0.1, make_mexican(1), 8), AliasWarning);
}

TEST_CASE("calderon identity holds over a wide scale grid") {
  SpectralField F = small_torus1_field();
  SymbolFunction f = make_mexican(1);
  ScaleGrid grid = ScaleGrid::log_uniform(1e-5, 1e2, 400);
  CalderonCheck chk = calderon_identity_check(F, f, grid);
  CHECK(chk.rel_err <= 1e-8);
}

TEST_CASE("calderon identity rejects narrow grids") {
  SpectralField F = small_torus1_field();
  ScaleGrid grid = ScaleGrid::log_uniform(0.5, 1.0, 400);
  CHECK_THROWS_AS(calderon_identity_check(F, make_mexican(1), grid),
                  GridTooNarrow);
}

TEST_CASE("reconstruction recovers the non-constant part") {
  SpectralField F = small_torus1_field();
  SymbolFunction f = make_mexican(1);
  const double eta = 4.0 * pi * pi;       // lambda of |m| = 1
  const double L = 9.0 * 4.0 * pi * pi;   // lambda of |m| = 3
  const double target = 1e-6;
  ScaleGrid grid = choose_scale_grid(f, eta, L, target);
  double predicted = predicted_reconstruction_error(f, eta, L,
                                                    grid.nodes.front(),
                                                    grid.nodes.back());
  CHECK(predicted <= target);
  SpectralField R = reconstruct(F, f, grid);
  CHECK(R.modes[0].coeff == 0.0);  // constant mode maps to zero
  for (size_t i = 1; i < F.modes.size(); ++i) {
    CHECK(std::fabs(R.modes[i].coeff - F.modes[i].coeff) <=
          2.0 * target * std::fabs(F.modes[i].coeff));
  }
}

TEST_CASE("predicted error shrinks as the grid widens") {
  SymbolFunction f = make_mexican(1);
  const double eta = 1.0, L = 100.0;
  double narrow = predicted_reconstruction_error(f, eta, L, 0.05, 2.0);
  double wide = predicted_reconstruction_error(f, eta, L, 0.005, 20.0);
  CHECK(wide < narrow);
}

TEST_CASE("holder fit recovers an exact power law") {
  std::vector<std::pair<double, double>> curve;
  for (int i = 0; i < 12; ++i) {
    double t = 1e-3 * std::pow(100.0, i / 11.0);
    curve.push_back({t, 3.0 * std::pow(t, 0.5)});
  }
  HolderFit fit = holder_fit(curve, 1e-3, 1e-1);
  CHECK(fit.alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.C == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("holder fit scale factor moves C only") {
  std::vector<std::pair<double, double>> curve, scaled;
  for (int i = 0; i < 12; ++i) {
    double t = 1e-3 * std::pow(100.0, i / 11.0);
    double v = 2.0 * std::pow(t, 0.37);
    curve.push_back({t, v});
    scaled.push_back({t, 10.0 * v});
  }
  HolderFit a = holder_fit(curve, 1e-3, 1e-1);
  HolderFit b = holder_fit(scaled, 1e-3, 1e-1);
  CHECK(b.alpha == doctest::Approx(a.alpha).epsilon(1e-12));
  CHECK(b.C == doctest::Approx(10.0 * a.C).epsilon(1e-10));
}

TEST_CASE("holder fit rejects degenerate windows") {
  std::vector<std::pair<double, double>> curve = {{1e-3, 1.0}, {1e-2, 2.0}};
  CHECK_THROWS_AS(holder_fit(curve, 1e-3, 1e-2), DegenerateFit);
}

TEST_CASE("sqrt-sin field reproduces the target function") {
  SpectralField F = sqrt_sin_field(256);
  // Oracle: direct trapezoid for the mean and one interior sample.
  const int n = 200000;
  double mean = 0.0;
  for (int i = 0; i < n; ++i)
    mean += std::sqrt(std::fabs(std::sin(pi * i / static_cast<double>(n))));
  mean /= n;
  CHECK(F.mean_coeff() == doctest::Approx(mean).epsilon(1e-6));

  // Pointwise resynthesis at r = 0.3 is close away from the cusps.
  double val = 0.0;
  for (const Mode& m : F.modes)
    val += m.coeff * std::cos(2.0 * pi * m.index[0] * 0.3);
  CHECK(val ==
        doctest::Approx(std::sqrt(std::sin(pi * 0.3))).epsilon(2e-2));
}

TEST_CASE("random field round trip through grid synthesis") {
  std::mt19937 rng(2718);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SpectralField F;
  F.manifold = Manifold::Torus2;
  for (int m1 = -3; m1 <= 3; ++m1)
    for (int m2 = -3; m2 <= 3; ++m2)
      F.modes.push_back({{m1, m2}, gauss(rng)});
  F.bandlimit = 3;
  GridField g = GridField::synthesize(F, 32);
  CHECK(g.norm2() == doctest::Approx(F.parseval_norm2()).epsilon(1e-10));
}
