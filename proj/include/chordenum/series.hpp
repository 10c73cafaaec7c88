#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordenum/count.hpp"
#include "chordenum/marker_polynomial.hpp"

namespace chordenum {

// What the series engine needs from a coefficient ring beyond + - * and
// division by a rational.
template <typename Ring>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static bool is_unit(const Rational& a) { return a != 0; }
  static Rational inverse(const Rational& a) { return 1 / a; }
};

template <>
struct RingTraits<MarkerPolynomial> {
  static bool is_zero(const MarkerPolynomial& a) { return a.is_zero(); }
  static bool is_one(const MarkerPolynomial& a) { return a.is_constant() && a.constant_term() == 1; }
  // Only non-zero constants are invertible in the polynomial ring.
  static bool is_unit(const MarkerPolynomial& a) { return a.is_constant() && !a.is_zero(); }
  static MarkerPolynomial inverse(const MarkerPolynomial& a) {
    return MarkerPolynomial(1 / a.constant_term());
  }
};

// Power series in t truncated after t^order; arithmetic is exact modulo
// t^(order+1). Binary operations on series of different order keep the
// smaller order.
template <typename Ring>
class Series {
 public:
  using Traits = RingTraits<Ring>;

  explicit Series(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1, Ring(0L)) {}
  Series(int order, std::vector<Ring> coeffs) : Series(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  static Series constant(int order, const Ring& value) {
    Series out(order);
    out.coeffs_[0] = value;
    return out;
  }
  // The series t.
  static Series variable(int order) {
    Series out(order);
    if (order >= 1) out.coeffs_[1] = Ring(1L);
    return out;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Ring& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Ring& coeff(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Ring>& coefficients() const { return coeffs_; }

  Series truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return Series(order, std::vector<Ring>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  template <typename F>
  Series map(F f) const {
    Series out(order());
    for (int n = 0; n <= order(); ++n) out.coeff(n) = f(coeffs_[static_cast<std::size_t>(n)]);
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out.coeff(n) = a[n] + b[n];
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out.coeff(n) = a[n] - b[n];
    return out;
  }
  friend Series operator-(const Series& a) { return Series(a.order()) - a; }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      if (Traits::is_zero(a[i])) continue;
      for (int j = 0; i + j <= out.order(); ++j) {
        if (Traits::is_zero(b[j])) continue;
        out.coeff(i + j) += a[i] * b[j];
      }
    }
    return out;
  }
  friend Series operator*(const Ring& s, const Series& a) {
    return a.map([&](const Ring& c) -> Ring { return s * c; });
  }

  bool operator==(const Series& other) const = default;

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Ring& c) { return Traits::is_zero(c); });
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return order;
  }
  std::vector<Ring> coeffs_;
};

template <typename Ring>
Series<Ring> reciprocal(const Series<Ring>& a) {
  using Traits = RingTraits<Ring>;
  if (!Traits::is_unit(a[0])) throw std::domain_error("reciprocal: constant term is not invertible");
  Series<Ring> out(a.order());
  const Ring inv = Traits::inverse(a[0]);
  out.coeff(0) = inv;
  for (int n = 1; n <= a.order(); ++n) {
    Ring sum(0L);
    for (int k = 1; k <= n; ++k) {
      if (!Traits::is_zero(a[k])) sum += a[k] * out[n - k];
    }
    out.coeff(n) = -(inv * sum);
  }
  return out;
}

// Square root of a series with constant term 1.
template <typename Ring>
Series<Ring> sqrt(const Series<Ring>& a) {
  if (!RingTraits<Ring>::is_one(a[0])) throw std::domain_error("sqrt: constant term must be 1");
  Series<Ring> out(a.order());
  out.coeff(0) = Ring(1L);
  for (int n = 1; n <= a.order(); ++n) {
    Ring sum = a[n];
    for (int k = 1; k < n; ++k) sum -= out[k] * out[n - k];
    out.coeff(n) = sum / Rational(2);
  }
  return out;
}

// exp(g) for g with zero constant term, from f' = g' f:
// n f_n = sum_{k=1..n} k g_k f_{n-k}.
template <typename Ring>
Series<Ring> exp(const Series<Ring>& g) {
  using Traits = RingTraits<Ring>;
  if (!Traits::is_zero(g[0])) throw std::domain_error("exp: constant term must be 0");
  Series<Ring> out(g.order());
  out.coeff(0) = Ring(1L);
  for (int n = 1; n <= g.order(); ++n) {
    Ring sum(0L);
    for (int k = 1; k <= n; ++k) {
      if (Traits::is_zero(g[k])) continue;
      sum += Ring(Rational(k)) * g[k] * out[n - k];
    }
    out.coeff(n) = sum / Rational(n);
  }
  return out;
}

// d/dt; the result is exact to one order less.
template <typename Ring>
Series<Ring> derivative(const Series<Ring>& a) {
  if (a.order() < 1) throw std::domain_error("derivative: needs order >= 1");
  Series<Ring> out(a.order() - 1);
  for (int n = 0; n <= out.order(); ++n) out.coeff(n) = Ring(Rational(n + 1)) * a[n + 1];
  return out;
}

// Integral from 0; the result is exact to one order more.
template <typename Ring>
Series<Ring> antiderivative(const Series<Ring>& a) {
  Series<Ring> out(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) out.coeff(n + 1) = a[n] / Rational(n + 1);
  return out;
}

}  // namespace chordenum
