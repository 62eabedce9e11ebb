#include "rootpoly/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootpoly {

Polynomial Polynomial::from_coeffs(std::vector<Int> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  Polynomial p;
  p.coeffs = std::move(c);
  return p;
}

Int Polynomial::sum() const {
  Int s = 0;
  for (Int c : coeffs) s = checked_add(s, c);
  return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Int> c(std::max(coeffs.size(), o.coeffs.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = checked_add(at(i), o.at(i));
  return from_coeffs(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> c(coeffs.size() + o.coeffs.size() - 1, 0);
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < o.coeffs.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(coeffs[i], o.coeffs[j]));
  return from_coeffs(std::move(c));
}

Polynomial Polynomial::reversed(int deg) const {
  if (degree() > deg) throw std::invalid_argument("reversed: degree too small");
  std::vector<Int> c(deg + 1, 0);
  for (int i = 0; i <= deg; ++i) c[deg - i] = at(i);
  return from_coeffs(std::move(c));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Int c = coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Int a = c < 0 ? -c : c;
    if (a != 1 || i == 0) s += std::to_string(a);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

bool coefficientwise_leq(const Polynomial& a, const Polynomial& b) {
  size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (size_t i = 0; i < n; ++i)
    if (a.at(i) > b.at(i)) return false;
  return true;
}

}  // namespace rootpoly
