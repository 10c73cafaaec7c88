#include "chordenum/marker_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace chordenum {

MarkerPolynomial::MarkerPolynomial(const Rational& constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

MarkerPolynomial MarkerPolynomial::z() { return monomial(1, 0); }
MarkerPolynomial MarkerPolynomial::x() { return monomial(0, 1); }

MarkerPolynomial MarkerPolynomial::monomial(int z_degree, int x_degree, const Rational& coefficient) {
  if (z_degree < 0 || x_degree < 0) throw std::invalid_argument("negative marker degree");
  MarkerPolynomial out;
  out.add_term({z_degree, x_degree}, coefficient);
  return out;
}

Rational MarkerPolynomial::coefficient(int z_degree, int x_degree) const {
  auto it = terms_.find({z_degree, x_degree});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MarkerPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

void MarkerPolynomial::add_term(const Exponents& e, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, value);
  if (inserted) return;
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

Rational MarkerPolynomial::evaluate(const Rational& z_value, const Rational& x_value) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < e.first; ++i) term *= z_value;
    for (int i = 0; i < e.second; ++i) term *= x_value;
    total += term;
  }
  return total;
}

MarkerPolynomial MarkerPolynomial::d_dz() const {
  MarkerPolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term({e.first - 1, e.second}, c * e.first);
  }
  return out;
}

MarkerPolynomial MarkerPolynomial::d_dx() const {
  MarkerPolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.add_term({e.first, e.second - 1}, c * e.second);
  }
  return out;
}

MarkerPolynomial& MarkerPolynomial::operator+=(const MarkerPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MarkerPolynomial& MarkerPolynomial::operator-=(const MarkerPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MarkerPolynomial& MarkerPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MarkerPolynomial& MarkerPolynomial::operator/=(const Rational& scalar) {
  if (scalar == 0) throw std::domain_error("division of marker polynomial by zero");
  for (auto& [e, c] : terms_) c /= scalar;
  return *this;
}

MarkerPolynomial operator-(const MarkerPolynomial& a) {
  MarkerPolynomial out = a;
  out *= Rational(-1);
  return out;
}

MarkerPolynomial operator*(const MarkerPolynomial& a, const MarkerPolynomial& b) {
  MarkerPolynomial out;
  Rational product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term({ea.first + eb.first, ea.second + eb.second}, product);
    }
  }
  return out;
}

std::string MarkerPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    if (e.first > 0) out << "*z" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second > 0) out << "*x" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return out.str();
}

}  // namespace chordenum
