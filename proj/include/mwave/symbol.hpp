#pragma once

#include <functional>
#include <string>

namespace mwave {

// Admissible multiplier f(s) = s^l f0(s), l >= 1, with rapid decay.
// All spectral operators act through one of these.
struct SymbolFunction {
  std::function<double(double)> evaluate;
  int vanishing_order = 1;  // l in f(s) = s^l f0(s)
  std::string name;
  double f0_sup = 0.0;  // sampled sup of |f0| on the probe grid

  // Evaluation cutoff: beyond s_max the decay witness makes terms
  // numerically zero, so they are dropped outright.
  static constexpr double s_max = 1e4;

  double operator()(double s) const {
    if (s > s_max) return 0.0;
    return evaluate(s);
  }
};

// f_m(s) = s^m e^{-s}, the (generalized) Mexican hat family.
SymbolFunction make_mexican(int m);

// f(u) = u e^{-u/4pi} / 4pi^2, the torus normalization whose kernel factors
// through the theta pair U_t, V_t.
SymbolFunction make_paper_torus();

// f(s) = e^{-s}: heat multiplier; not admissible (f(0) != 0), usable only
// for kernel evaluation and validation.
SymbolFunction make_gauss();

// Dilation f(sigma * .), same vanishing order; used by invariance checks.
SymbolFunction dilate(const SymbolFunction& f, double sigma);

// Grammar: "mexican:m" | "paper-torus" | "gauss".
SymbolFunction parse_symbol(const std::string& spec);

// M_J = max_{r>0} |r^J f(r)|, estimated on a log grid and refined by
// golden-section search.
double decay_moment(const SymbolFunction& f, int J);

// Sampled sup of |f0| = |f(s)/s^l| over the probe grid, golden-refined.
double sampled_f0_sup(const std::function<double(double)>& evaluate, int l);

}  // namespace mwave
