#pragma once

#include <string>
#include <vector>

#include "rootpoly/ints.hpp"

namespace rootpoly {

// Integer polynomial in one variable; trailing zero coefficients are trimmed.
struct Polynomial {
  std::vector<Int> coeffs;  // coeffs[i] is the coefficient of x^i

  Polynomial() = default;
  static Polynomial from_coeffs(std::vector<Int> c);
  static Polynomial constant(Int c) { return from_coeffs({c}); }

  Int at(size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  int degree() const { return (int)coeffs.size() - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return coeffs.empty(); }
  Int sum() const;  // value at 1

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }

  // x^deg * p(1/x); requires degree() <= deg.
  Polynomial reversed(int deg) const;

  std::string str() const;
};

// a <= b coefficientwise, shorter side zero-padded.
bool coefficientwise_leq(const Polynomial& a, const Polynomial& b);

}  // namespace rootpoly
