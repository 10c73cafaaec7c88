#include "chordenum/generating_functions.hpp"

#include <stdexcept>

namespace chordenum::gf {

namespace {

RationalSeries root(int order) {
  // 1 - 2t
  RationalSeries base = RationalSeries::constant(order, 1);
  if (order >= 1) base.coeff(1) = -2;
  return sqrt(base);
}

RationalSeries t_series(int order) { return RationalSeries::variable(order); }
RationalSeries one(int order) { return RationalSeries::constant(order, 1); }

MarkerSeries lift(const RationalSeries& s) {
  MarkerSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) out.coeff(n) = MarkerPolynomial(s[n]);
  return out;
}

Count integerize(const Rational& c, int n) {
  Rational scaled = c * Rational(factorial(n));
  scaled.canonicalize();
  if (scaled.get_den() != 1) {
    throw std::logic_error("n!*c_n is not an integer at n=" + std::to_string(n) + ": " + scaled.get_str());
  }
  return scaled.get_num();
}

}  // namespace

RationalSeries all_matchings(int order) { return reciprocal(root(order)); }

RationalSeries loopless_linear(int order) {
  const auto s = root(order);
  return exp(s - one(order)) * reciprocal(s);
}

RationalSeries loopless_chord(int order) {
  const auto s = root(order);
  const auto e = exp(s - one(order));
  return e * (one(order) + reciprocal(s)) - RationalSeries::constant(order, 2) + t_series(order);
}

RationalSeries loopless_shifted(int order) {
  const auto s = root(order);
  return one(order) - t_series(order) - exp(s - one(order));
}

MarkerSeries linear_by_loops(int order) {
  const auto s = lift(root(order));
  const MarkerSeries z_minus_one = MarkerSeries::constant(order, MarkerPolynomial::z() - MarkerPolynomial(1L));
  // (-1+S)(1-z) = (1-S)(z-1)
  const MarkerSeries exponent = (MarkerSeries::constant(order, MarkerPolynomial(1L)) - s) * z_minus_one;
  return exp(exponent) * reciprocal(s);
}

MarkerSeries linear_by_loops_and_parallels(int order) {
  const auto s = lift(root(order));
  const auto t = lift(t_series(order));
  const MarkerPolynomial z1 = MarkerPolynomial::z() - MarkerPolynomial(1L);
  const MarkerPolynomial x1 = MarkerPolynomial::x() - MarkerPolynomial(1L);
  const MarkerSeries unit = MarkerSeries::constant(order, MarkerPolynomial(1L));
  const MarkerSeries prefactor = z1 * s + unit;
  const MarkerSeries inv_s3 = reciprocal(s * s * s);
  // (z-1)(1-S) - t(1-x) = (z-1)(1-S) + t(x-1)
  const MarkerSeries exponent = z1 * (unit - s) + x1 * t;
  return prefactor * inv_s3 * exp(exponent);
}

MarkerSeries linear_by_parallels(int order) {
  const auto s = lift(root(order));
  const auto t = lift(t_series(order));
  const MarkerPolynomial x1 = MarkerPolynomial::x() - MarkerPolynomial(1L);
  return reciprocal(s * s * s) * exp(x1 * t);
}

RationalSeries simple_linear(int order) {
  const auto s = root(order);
  const auto t = t_series(order);
  return (one(order) - s) * reciprocal(s * s * s) * exp(s - one(order) - t);
}

RationalSeries simple_chord(int order) {
  const auto s = root(order);
  const auto t = t_series(order);
  const auto first = exp(s - one(order) - t) * reciprocal(s) * (one(order) + s);
  const auto second = (RationalSeries::constant(order, 2) - t) * exp(-t);
  return first - second;
}

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = {"b", "phi", "psi", "chi", "w_zt",
                                                 "w_tzx", "w_tilde", "W", "U"};
  return names;
}

NamedSeries named_series(const std::string& name, int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (name == "b") return all_matchings(order);
  if (name == "phi") return loopless_linear(order);
  if (name == "psi") return loopless_chord(order);
  if (name == "chi") return loopless_shifted(order);
  if (name == "w_zt") return linear_by_loops(order);
  if (name == "w_tzx") {
    auto w = linear_by_loops_and_parallels(order);
    if (!(w[0] == MarkerPolynomial::z())) throw std::logic_error("w(0,z,x) must equal z");
    return w;
  }
  if (name == "w_tilde") return linear_by_parallels(order);
  if (name == "W") return simple_linear(order);
  if (name == "U") return simple_chord(order);
  throw std::invalid_argument("unknown series '" + name + "'");
}

std::vector<Count> integer_coeffs(const RationalSeries& series) {
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(series.order()) + 1);
  for (int n = 0; n <= series.order(); ++n) out.push_back(integerize(series[n], n));
  return out;
}

RationalSeries substitute(const MarkerSeries& series, MarkerAssignment at) {
  RationalSeries out(series.order());
  for (int n = 0; n <= series.order(); ++n) out.coeff(n) = series[n].evaluate(at.z, at.x);
  return out;
}

std::vector<Count> integer_coeffs(const MarkerSeries& series, MarkerAssignment at) {
  return integer_coeffs(substitute(series, at));
}

TriangleTable integer_coeff_table(const MarkerSeries& series, const std::string& name) {
  TriangleTable table{name, 3, {}};
  for (int n = 0; n <= series.order(); ++n) {
    for (const auto& [e, c] : series[n].terms()) {
      table.set({n, e.first, e.second}, integerize(c, n));
    }
  }
  return table;
}

}  // namespace chordenum::gf
