// Exact univariate polynomials over arbitrary-precision rationals:
// construction, Newton interpolation, Horner evaluation (negative arguments
// included), arithmetic and exact equality.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "chromix/error.hpp"
#include "chromix/rational.hpp"

namespace chromix {

/// Coefficients ascending: coefficients()[i] multiplies k^i. Canonical form
/// trims trailing zeros; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  static Polynomial constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
  }
  /// The monomial k.
  static Polynomial variable() {
    return Polynomial(std::vector<Rational>{0, 1});
  }

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  /// Exact evaluation by Horner's rule.
  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }
  Rational at(long k) const { return (*this)(Rational(k)); }

  Polynomial operator+(const Polynomial& other) const {
    std::vector<Rational> out(std::max(coefficients_.size(),
                                       other.coefficients_.size()),
                              Rational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
      out[i] += other.coefficients_[i];
    return Polynomial(std::move(out));
  }
  Polynomial operator-() const {
    std::vector<Rational> out = coefficients_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  Polynomial operator-(const Polynomial& other) const { return *this + (-other); }
  Polynomial operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<Rational> out(coefficients_.size() + other.coefficients_.size() - 1,
                              Rational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
      for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
        out[i + j] += coefficients_[i] * other.coefficients_[j];
    return Polynomial(std::move(out));
  }

  /// Coefficient-wise equality on canonical forms.
  bool operator==(const Polynomial& other) const {
    return coefficients_ == other.coefficients_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0)
      coefficients_.pop_back();
  }
  std::vector<Rational> coefficients_;
};

/// Unique polynomial of degree < #points through all points, by Newton
/// divided differences in exact arithmetic. Abscissas must be distinct.
inline Polynomial interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.empty()) throw Error("interpolation needs at least one point");
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (points[i].first == points[j].first)
        throw Error("duplicate abscissa in interpolation: " +
                    to_string(points[i].first));
  std::vector<Rational> diff(m);
  for (std::size_t i = 0; i < m; ++i) diff[i] = points[i].second;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i)
      diff[i] = (diff[i] - diff[i - 1]) / (points[i].first - points[i - j].first);
  Polynomial result;
  Polynomial basis = Polynomial::constant(1);
  for (std::size_t i = 0; i < m; ++i) {
    result = result + Polynomial(std::vector<Rational>{diff[i]}) * basis;
    basis = basis * Polynomial(std::vector<Rational>{-points[i].first, 1});
  }
  return result;
}

/// Display form in decreasing degree with exact rational coefficients,
/// e.g. "1/6*k^3 + 1/2*k^2 - 2/3*k"; the zero polynomial prints "0".
inline std::string to_display_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& coeff = c[d];
    if (coeff == 0) continue;
    const bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (d == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += d == 1 ? "k" : "k^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace chromix
