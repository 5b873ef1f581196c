#include "mwave/symbol.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mwave/errors.hpp"

namespace mwave {

namespace {

constexpr double kGridLo = 1e-8;
constexpr double kGridHi = 1e4;
constexpr int kGridPts = 10000;

// Maximize |g| on a log grid, then golden-section around the best node.
double log_grid_max(const std::function<double(double)>& g) {
  const double ulo = std::log(kGridLo), uhi = std::log(kGridHi);
  const double du = (uhi - ulo) / (kGridPts - 1);
  double best = 0.0;
  int best_i = 0;
  for (int i = 0; i < kGridPts; ++i) {
    double v = std::fabs(g(std::exp(ulo + i * du)));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // Golden-section refinement on the bracketing interval (in log coordinate).
  double a = ulo + std::max(0, best_i - 1) * du;
  double b = ulo + std::min(kGridPts - 1, best_i + 1) * du;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = std::fabs(g(std::exp(c))), fd = std::fabs(g(std::exp(d)));
  for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = std::fabs(g(std::exp(c)));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = std::fabs(g(std::exp(d)));
    }
  }
  return std::max({best, fc, fd});
}

}  // namespace

double sampled_f0_sup(const std::function<double(double)>& evaluate, int l) {
  return log_grid_max(
      [&](double s) { return evaluate(s) / std::pow(s, l); });
}

double decay_moment(const SymbolFunction& f, int J) {
  return log_grid_max(
      [&](double r) { return std::pow(r, J) * f.evaluate(r); });
}

SymbolFunction make_mexican(int m) {
  if (m < 1) throw NonAdmissible("mexican:m requires m >= 1");
  SymbolFunction f;
  f.evaluate = [m](double s) { return std::pow(s, m) * std::exp(-s); };
  f.vanishing_order = m;
  f.name = "mexican:" + std::to_string(m);
  f.f0_sup = sampled_f0_sup(f.evaluate, m);
  return f;
}

SymbolFunction make_paper_torus() {
  SymbolFunction f;
  const double fourpi = 4.0 * std::numbers::pi;
  f.evaluate = [fourpi](double u) {
    return u * std::exp(-u / fourpi) / (fourpi * std::numbers::pi);
  };
  f.vanishing_order = 1;
  f.name = "paper-torus";
  f.f0_sup = sampled_f0_sup(f.evaluate, 1);
  return f;
}

SymbolFunction make_gauss() {
  SymbolFunction f;
  f.evaluate = [](double s) { return std::exp(-s); };
  f.vanishing_order = 0;
  f.name = "gauss";
  f.f0_sup = 1.0;
  return f;
}

SymbolFunction dilate(const SymbolFunction& f, double sigma) {
  SymbolFunction g;
  auto base = f.evaluate;
  g.evaluate = [base, sigma](double s) { return base(sigma * s); };
  g.vanishing_order = f.vanishing_order;
  g.name = f.name + "@" + std::to_string(sigma);
  g.f0_sup = f.vanishing_order > 0
                 ? sampled_f0_sup(g.evaluate, f.vanishing_order)
                 : f.f0_sup;
  return g;
}

SymbolFunction parse_symbol(const std::string& spec) {
  if (spec == "paper-torus") return make_paper_torus();
  if (spec == "gauss") return make_gauss();
  if (spec.rfind("mexican:", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(spec.substr(8));
    } catch (const std::exception&) {
      throw ConfigError("bad symbol spec: " + spec);
    }
    return make_mexican(m);
  }
  throw ConfigError("unknown symbol spec: " + spec);
}

}  // namespace mwave
