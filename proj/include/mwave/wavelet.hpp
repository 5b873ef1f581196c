#pragma once

#include <array>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "mwave/spectral_core.hpp"
#include "mwave/symbol.hpp"

namespace mwave {

enum class Manifold { Torus1, Torus2, Sphere2 };

// One eigenbasis coefficient.  Torus: index = lattice mode m (second entry 0
// on T^1), basis e^{2 pi i m.r}.  Sphere: index = (l, 0), normalized zonal
// basis sqrt((2l+1)/4pi) P_l(cos theta).
struct Mode {
  std::array<int, 2> index{0, 0};
  double coeff = 0.0;
};

struct SpectralField {
  Manifold manifold = Manifold::Torus1;
  std::vector<Mode> modes;
  int bandlimit = 0;

  double parseval_norm2() const;     // sum of squared coefficients
  double mean_coeff() const;         // zero-mode coefficient
  double nonconstant_norm2() const;  // ||(I-P)F||^2
};

double mode_eigenvalue(Manifold m, const std::array<int, 2>& index);

// Uniform torus grid or Gauss-Legendre (in cos theta) sphere grid with
// quadrature weights summing to the manifold volume.
struct GridField {
  Manifold manifold = Manifold::Torus1;
  std::vector<std::array<double, 2>> points;  // torus coords or (theta, -)
  std::vector<double> weights;
  std::vector<std::complex<double>> values;

  static GridField synthesize(const SpectralField& field, int resolution);
  double weight_total() const;
  double norm2() const;   // quadrature of |F|^2
  double sup() const;     // max |F|
};

// Spectral multiplier coeff -> f(t^2 lambda) coeff.
SpectralField apply_wavelet(const SpectralField& F, const SymbolFunction& f,
                            double t);

struct CalderonCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;
};

// Quadrature of int ||T_t F||^2 dt/t over the grid against (c/2)||(I-P)F||^2.
CalderonCheck calderon_identity_check(const SpectralField& F,
                                      const SymbolFunction& f,
                                      const ScaleGrid& grid);

// (2/c) int T_t^* T_t F dt/t, per mode; the constant-mode component is
// unrecoverable and mapped to zero.
SpectralField reconstruct(const SpectralField& F, const SymbolFunction& f,
                          const ScaleGrid& grid);

// Scale-grid endpoints chosen from the truncation constants so the predicted
// per-mode relative error over the spectral band [eta, L] is <= target.
ScaleGrid choose_scale_grid(const SymbolFunction& f, double eta, double L,
                            double target_rel_err, int nodes_per_decade = 400);

// Predicted relative reconstruction error bound for the given grid endpoints.
double predicted_reconstruction_error(const SymbolFunction& f, double eta,
                                      double L, double t_min, double t_max);

// max |T_t F| over a synthesis grid of the given resolution.
double sup_norm(const SpectralField& F, double t, const SymbolFunction& f,
                int grid_resolution);

struct HolderFit {
  double alpha = 0.0;
  double C = 0.0;
  double r2 = 0.0;
};

// Least-squares fit log||T_t F|| ~ log C + alpha log t over t in the window.
HolderFit holder_fit(std::span<const std::pair<double, double>> sup_curve,
                     double t_lo, double t_hi);

struct LocalizationRow {
  double t = 0.0;
  double weighted_sup = 0.0;  // sup over the grid of t^n (1 + d/t)^N |K_t|
};

std::vector<LocalizationRow> localization_report(const SymbolFunction& f,
                                                 Manifold manifold,
                                                 std::span<const double> t_list,
                                                 int N);

// Fourier approximation (bandlimit modes each side) of |sin(pi r)|^{1/2} on
// T^1, the Holder-1/2 test field.
SpectralField sqrt_sin_field(int bandlimit = 256);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace mwave
