#include <random>

#include "chordenum/generating_functions.hpp"
#include "doctest.h"

using namespace chordenum;
using namespace chordenum::gf;

namespace {

std::vector<Count> ints(std::initializer_list<long> values) {
  std::vector<Count> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<Count> head(const std::vector<Count>& v, std::size_t n) {
  return std::vector<Count>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
}

RationalSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  RationalSeries s(order);
  for (int n = 0; n <= order; ++n) s.coeff(n) = Rational(num(rng), den(rng));
  s.coeff(0) = zero_constant ? Rational(0) : Rational(1);
  for (int n = 0; n <= order; ++n) s.coeff(n).canonicalize();
  return s;
}

}  // namespace

TEST_CASE("sqrt(1-2t) and exp basics") {
  RationalSeries base = RationalSeries::constant(5, 1);
  base.coeff(1) = -2;
  const auto s = sqrt(base);
  CHECK(s[0] == 1);
  CHECK(s[1] == -1);
  CHECK(s[2] == Rational(-1, 2));
  CHECK(s[3] == Rational(-1, 2));
  CHECK(s * s == base);
  CHECK(exp(RationalSeries(6)) == RationalSeries::constant(6, 1));
  CHECK_THROWS_AS(exp(RationalSeries::constant(3, 1)), std::domain_error);
  CHECK_THROWS_AS(sqrt(RationalSeries::constant(3, 4)), std::domain_error);
  CHECK_THROWS_AS(reciprocal(RationalSeries(3)), std::domain_error);
  CHECK_THROWS_AS(derivative(RationalSeries(0)), std::domain_error);
  CHECK_THROWS_AS(RationalSeries(-1), std::invalid_argument);
}

TEST_CASE("reciprocal of sqrt(1-2t) gives (2n-1)!!") {
  const auto b = integer_coeffs(all_matchings(20));
  for (int n = 0; n <= 20; ++n) CHECK(b[static_cast<std::size_t>(n)] == double_factorial_odd(n));
}

TEST_CASE("closed forms give the known leading coefficients") {
  CHECK(head(integer_coeffs(loopless_linear(10)), 6) == ints({1, 0, 1, 5, 36, 329}));
  CHECK(head(integer_coeffs(loopless_chord(10)), 7) == ints({0, 0, 1, 4, 31, 293, 3326}));
  CHECK(head(integer_coeffs(simple_chord(10)), 7) == ints({0, 0, 1, 1, 21, 168, 1968}));
  CHECK(head(integer_coeffs(simple_linear(10)), 5) == ints({0, 1, 3, 24, 211}));
  CHECK(head(integer_coeffs(linear_by_loops_and_parallels(8), {0, 0}), 6) == ints({0, 1, 3, 24, 211, 2325}));
}

TEST_CASE("w(1,1;t) counts all linear diagrams with n+1 chords") {
  const auto w = integer_coeffs(linear_by_loops_and_parallels(12), {1, 1});
  for (int n = 0; n <= 12; ++n) CHECK(w[static_cast<std::size_t>(n)] == double_factorial_odd(n + 1));
  const auto wz = integer_coeffs(linear_by_loops(12), {1, 0});
  for (int n = 0; n <= 12; ++n) CHECK(wz[static_cast<std::size_t>(n)] == double_factorial_odd(n));
}

TEST_CASE("w(z,t) satisfies (1-2t) w_t = z w + (1-z) w_z") {
  const int order = 20;
  const auto w = linear_by_loops(order);
  const auto wt = derivative(w);
  const auto t = MarkerSeries::variable(order - 1);
  const auto one = MarkerSeries::constant(order - 1, MarkerPolynomial(1L));
  const auto z = MarkerPolynomial::z();
  const auto lhs = (one - MarkerPolynomial(2L) * t) * wt;
  const auto wz = w.map([](const MarkerPolynomial& p) { return p.d_dz(); });
  const auto rhs = z * w + (MarkerPolynomial(1L) - z) * wz;
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("w(t,z,x) satisfies (1-2t) w_t = (z+x+1) w + (1-z) w_z + 2(1-x) w_x") {
  const int order = 15;
  const auto w = linear_by_loops_and_parallels(order);
  CHECK(w[0] == MarkerPolynomial::z());
  const auto t = MarkerSeries::variable(order - 1);
  const auto one = MarkerSeries::constant(order - 1, MarkerPolynomial(1L));
  const auto z = MarkerPolynomial::z();
  const auto x = MarkerPolynomial::x();
  const auto lhs = (one - MarkerPolynomial(2L) * t) * derivative(w);
  const auto wz = w.map([](const MarkerPolynomial& p) { return p.d_dz(); });
  const auto wx = w.map([](const MarkerPolynomial& p) { return p.d_dx(); });
  const auto rhs = (z + x + MarkerPolynomial(1L)) * w + (MarkerPolynomial(1L) - z) * wz +
                   MarkerPolynomial(2L) * (MarkerPolynomial(1L) - x) * wx;
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("psi' = phi' - phi + 1 and chi = integral(phi) - t") {
  const int order = 25;
  const auto phi = loopless_linear(order);
  const auto psi = loopless_chord(order);
  const auto one = RationalSeries::constant(order - 1, 1);
  CHECK(derivative(psi) == derivative(phi) - phi.truncated(order - 1) + one);
  const auto chi = loopless_shifted(order);
  CHECK(chi == (antiderivative(phi) - RationalSeries::variable(order + 1)).truncated(order));
}

TEST_CASE("all closed forms have non-negative integer coefficients") {
  for (const auto& name : series_names()) {
    const auto s = named_series(name, 14);
    if (const auto* r = std::get_if<RationalSeries>(&s)) {
      for (const auto& c : integer_coeffs(*r)) CHECK(c >= 0);
    } else {
      const auto table = integer_coeff_table(std::get<MarkerSeries>(s), name);
      for (const auto& [key, value] : table.cells) CHECK(value > 0);
    }
  }
  CHECK_THROWS_AS(named_series("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(integer_coeffs(RationalSeries::constant(2, Rational(1, 2))), std::logic_error);
}

TEST_CASE("randomised ring identities") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const int order = 8;
    const auto a = random_series(rng, order, true);
    const auto b = random_series(rng, order, true);
    const auto u = random_series(rng, order, false);
    CHECK(exp(a + b) == exp(a) * exp(b));
    CHECK(reciprocal(u) * u == RationalSeries::constant(order, 1));
    CHECK(sqrt(u) * sqrt(u) == u);
    CHECK(derivative(antiderivative(u)) == u);
    CHECK(derivative(exp(a)) == derivative(a) * exp(a).truncated(order - 1));
    CHECK(a * (b + u) == a * b + a * u);
  }
}

TEST_CASE("marker polynomial arithmetic") {
  const auto z = MarkerPolynomial::z();
  const auto x = MarkerPolynomial::x();
  const auto p = (z + x) * (z - x);
  CHECK(p == z * z - x * x);
  CHECK(p.coefficient(2, 0) == 1);
  CHECK(p.coefficient(1, 1) == 0);
  CHECK(p.evaluate(3, 2) == 5);
  CHECK(p.d_dz() == MarkerPolynomial(2L) * z);
  CHECK((p - p).is_zero());
  CHECK(MarkerPolynomial(Rational(3, 2)).is_constant());
  CHECK(!z.is_constant());
}
