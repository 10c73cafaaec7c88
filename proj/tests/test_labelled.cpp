#include "chordenum/generating_functions.hpp"
#include "chordenum/labelled.hpp"
#include "chordenum/oracle.hpp"
#include "doctest.h"

using namespace chordenum;
using namespace chordenum::labelled;

TEST_CASE("loopless linear triangle") {
  const auto t = loopless_linear_triangle(20);
  CHECK(t.at({2, 0}) == 1);
  CHECK(t.at({5, 0}) == 329);
  CHECK(t.at({1, 1}) == 1);
  for (int n = 0; n <= 20; ++n) CHECK(t.row_sum(n) == double_factorial_odd(n));
}

TEST_CASE("loopless linear and chord sequences") {
  const auto a = loopless_linear(20);
  CHECK(a[6] == 3655);
  CHECK(a[20] == from_decimal("116160936719430292078411"));
  const auto tri = loopless_linear_triangle(20);
  const auto bin = loopless_linear_binomial(20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(a[static_cast<std::size_t>(n)] == tri.at({n, 0}));
    CHECK(a[static_cast<std::size_t>(n)] == bin[static_cast<std::size_t>(n)]);
  }
  const auto b = loopless_chord(20);
  CHECK(b[0] == 0);
  CHECK(b[1] == 0);
  CHECK(b[2] == 1);
  CHECK(b[6] == 3326);
}

TEST_CASE("recurrences agree with the closed forms to order 25") {
  const int order = 25;
  CHECK(gf::integer_coeffs(gf::loopless_linear(order)) == loopless_linear(order).values);
  CHECK(gf::integer_coeffs(gf::loopless_chord(order)) == loopless_chord(order).values);
  const auto chain = simple_labelled_chain(order + 1);
  const auto w = gf::integer_coeffs(gf::simple_linear(order));
  for (int n = 0; n <= order; ++n) CHECK(w[static_cast<std::size_t>(n)] == chain.linear[static_cast<std::size_t>(n + 1)]);
  const auto u = gf::integer_coeffs(gf::simple_chord(order));
  for (int n = 0; n <= order; ++n) CHECK(u[static_cast<std::size_t>(n)] == chain.chord[static_cast<std::size_t>(n)]);
  const auto wz = gf::integer_coeff_table(gf::linear_by_loops(order), "w");
  const auto tri = loopless_linear_triangle(order);
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(wz.at({n, k, 0}) == tri.at({n, k}));
  }
}

TEST_CASE("simple triangle, index offset") {
  const auto t = simple_triangle(12);
  // a_{1,1,1}: two chords, one loop, one parallel pair, the diagram 1-2,3-4.
  CHECK(t.at({2, 1, 1}) == 1);
  CHECK(t.at({5, 0, 0}) == 211);
  CHECK(t.at({1, 1, 0}) == 1);
  CHECK(t.at({1, 0, 0}) == 0);
  for (int c = 1; c <= 12; ++c) CHECK(t.row_sum(c) == double_factorial_odd(c));
}

TEST_CASE("simple triangle matches w(t,z,x) for n <= 12") {
  const auto t = simple_triangle(13);
  const auto w = gf::integer_coeff_table(gf::linear_by_loops_and_parallels(12), "w");
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      for (int l = 0; l <= n + 1; ++l) CHECK(t.at({n + 1, k, l}) == w.at({n, k, l}));
    }
  }
}

TEST_CASE("parallel-pair triangle") {
  const auto t = parallel_triangle(13);
  CHECK(t.at({2, 0}) == 2);
  CHECK(t.at({2, 1}) == 1);
  for (int c = 1; c <= 13; ++c) CHECK(t.row_sum(c) == double_factorial_odd(c));
  const auto w = gf::integer_coeff_table(gf::linear_by_parallels(12), "w");
  for (int n = 0; n <= 12; ++n) {
    for (int l = 0; l <= n + 1; ++l) CHECK(t.at({n + 1, l}) == w.at({n, 0, l}));
  }
}

TEST_CASE("simple chain") {
  const auto chain = simple_labelled_chain(9);
  CHECK(chain.linear[4] == 24);
  CHECK(chain.chord[8] == 398653);
  CHECK(chain.chord[0] == 0);
  CHECK_THROWS_AS(simple_labelled_chain(0), std::invalid_argument);
}

TEST_CASE("labelled recurrences agree with the oracle for n <= 7") {
  using oracle::Family;
  const auto lin = loopless_linear(7);
  const auto chord = loopless_chord(7);
  const auto chain = simple_labelled_chain(7);
  const auto tri = loopless_linear_triangle(7);
  const auto simple = simple_triangle(7);
  const auto par = parallel_triangle(7);
  for (int n = 1; n <= 7; ++n) {
    const auto i = static_cast<std::size_t>(n);
    CHECK(lin[i] == oracle::count_labelled(n, Topology::linear(), Family::loopless));
    CHECK(chord[i] == oracle::count_labelled(n, Topology::circular(), Family::loopless));
    CHECK(chain.linear[i] == oracle::count_labelled(n, Topology::linear(), Family::simple));
    CHECK(chain.chord[i] == oracle::count_labelled(n, Topology::circular(), Family::simple));
    const auto cells = oracle::classify_table(n, Topology::linear());
    std::map<int, Count> by_loops;
    std::map<int, Count> by_pairs;
    for (const auto& [key, value] : cells) {
      CHECK(simple.at({n, key.first, key.second}) == value);
      by_loops[key.first] += value;
      by_pairs[key.second] += value;
    }
    for (const auto& [k, value] : by_loops) CHECK(tri.at({n, k}) == value);
    for (const auto& [l, value] : by_pairs) CHECK(par.at({n, l}) == value);
  }
}
