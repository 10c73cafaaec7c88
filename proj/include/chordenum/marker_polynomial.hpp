#pragma once

#include <map>
#include <string>
#include <utility>

#include "chordenum/count.hpp"

namespace chordenum {

// Polynomial in the markers z and x with rational coefficients. Terms are
// keyed by (degree in z, degree in x); zero coefficients are never stored.
class MarkerPolynomial {
 public:
  using Exponents = std::pair<int, int>;

  MarkerPolynomial() = default;
  MarkerPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MarkerPolynomial(long constant) : MarkerPolynomial(Rational(constant)) {}  // NOLINT

  static MarkerPolynomial z();
  static MarkerPolynomial x();
  static MarkerPolynomial monomial(int z_degree, int x_degree, const Rational& coefficient = 1);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coefficient(int z_degree, int x_degree) const;
  Rational constant_term() const { return coefficient(0, 0); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational evaluate(const Rational& z_value, const Rational& x_value) const;
  MarkerPolynomial d_dz() const;
  MarkerPolynomial d_dx() const;

  MarkerPolynomial& operator+=(const MarkerPolynomial& other);
  MarkerPolynomial& operator-=(const MarkerPolynomial& other);
  MarkerPolynomial& operator*=(const Rational& scalar);
  MarkerPolynomial& operator/=(const Rational& scalar);

  friend MarkerPolynomial operator+(MarkerPolynomial a, const MarkerPolynomial& b) { return a += b; }
  friend MarkerPolynomial operator-(MarkerPolynomial a, const MarkerPolynomial& b) { return a -= b; }
  friend MarkerPolynomial operator-(const MarkerPolynomial& a);
  friend MarkerPolynomial operator*(const MarkerPolynomial& a, const MarkerPolynomial& b);
  friend MarkerPolynomial operator/(MarkerPolynomial a, const Rational& s) { return a /= s; }

  bool operator==(const MarkerPolynomial& other) const { return terms_ == other.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& value);
  std::map<Exponents, Rational> terms_;
};

}  // namespace chordenum
