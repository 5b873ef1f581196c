#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "mwave/errors.hpp"

namespace mwave {

// Exact rational arithmetic for the pole-derivative triangle (depth <= 6,
// coefficients stay well inside 64 bits).
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rat operator+(Rat a, Rat b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(Rat a, Rat b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
  friend bool operator==(Rat a, Rat b) {
    return a.num == b.num && a.den == b.den;
  }
  double to_double() const { return static_cast<double>(num) / den; }
  bool is_zero() const { return num == 0; }
};

// Dense polynomial with rational coefficients, coeffs[k] * x^k.
using RatPoly = std::vector<Rat>;

RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_scale(const RatPoly& a, Rat s);
RatPoly poly_derivative(const RatPoly& a);
Rat poly_eval(const RatPoly& a, Rat x);

}  // namespace mwave
