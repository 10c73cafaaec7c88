#include "chordenum/labelled.hpp"
#include "chordenum/symmetry.hpp"
#include "doctest.h"

using namespace chordenum;
using namespace chordenum::symmetry;
using oracle::Family;

namespace {

std::vector<Count> ints(std::initializer_list<long> values) {
  std::vector<Count> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

void check_all(const std::vector<CheckResult>& checks) {
  CHECK(!checks.empty());
  for (const auto& c : checks) {
    INFO(format_check(c));
    CHECK(c.ok);
  }
}

}  // namespace

TEST_CASE("loopless d-symmetric columns") {
  CHECK(loopless_dsym(3, 2)[2] == 2);
  CHECK(loopless_dsym(2, 10).values == ints({1, 1, 2, 5, 17, 56, 223, 883, 3966, 17927, 88655}));
  CHECK(loopless_dsym(4, 5).values == ints({1, 1, 4, 11, 59, 232}));
  const auto three = loopless_dsym(3, 6);
  CHECK(three[4] == 19);
  CHECK(three[6] == 287);
  const auto one = loopless_dsym(1, 20);
  const auto a = labelled::loopless_linear(10);
  for (int c = 0; c <= 10; ++c) CHECK(one[static_cast<std::size_t>(2 * c)] == a[static_cast<std::size_t>(c)]);
}

TEST_CASE("expanded loopless recurrence agrees for m <= 12, d <= 5") {
  for (int d = 1; d <= 5; ++d) CHECK(loopless_dsym_expanded(d, 12).values == loopless_dsym(d, 12).values);
}

TEST_CASE("loopless fixed counts") {
  const auto f4 = loopless_fixed(4);
  CHECK(f4.by_divisor == std::map<int, Count>{{1, 31}, {2, 15}, {4, 3}, {8, 1}});
  CHECK(loopless_fixed(1).by_divisor.at(1) == 0);
  const auto f6 = loopless_fixed(6);
  CHECK(f6.by_divisor.at(2) == 206);
  CHECK(f6.by_divisor.at(3) == 17);
  CHECK(f6.by_divisor.at(4) == 10);
  CHECK(f6.by_divisor.at(6) == 5);
  CHECK(f6.by_divisor.at(12) == 1);
  const auto b = labelled::loopless_chord(10);
  for (int n = 1; n <= 10; ++n) CHECK(loopless_fixed(n).by_divisor.at(1) == b[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS(loopless_fixed(0), std::invalid_argument);
}

TEST_CASE("loopless cyclic counts") {
  const auto t = loopless_cyclic(7);
  CHECK(t[2] == 1);
  CHECK(t[4] == 7);
  CHECK(t[5] == 36);
  CHECK(t[7] == 3218);
}

TEST_CASE("simple d-symmetric columns") {
  CHECK(simple_dsym(3, 2)[2] == 2);
  const auto split = simple_dsym_even(2, 6);
  CHECK(split.at({4, 0}) == 4);
  CHECK(split.at({4, 2}) == 4);
  CHECK(split.at({4, 4}) == 1);
  CHECK(split.row_sum(4) == 9);
  CHECK(split.at({5, 1}) == 21);
  CHECK(split.at({5, 3}) == 9);
  CHECK(split.at({5, 5}) == 1);
  CHECK(split.at({6, 0}) == 32);
  CHECK(split.at({6, 2}) == 69);
  CHECK(split.at({6, 4}) == 16);
  CHECK(split.at({6, 6}) == 1);
  CHECK(simple_dsym(4, 5).values == ints({1, 1, 3, 8, 43, 171}));
  const auto three = simple_dsym(3, 6);
  CHECK(three[4] == 17);
  CHECK(three[6] == 251);
  const auto one = simple_dsym(1, 20);
  const auto chain = labelled::simple_labelled_chain(11);
  for (int c = 1; c <= 10; ++c) CHECK(one[static_cast<std::size_t>(2 * c)] == chain.linear[static_cast<std::size_t>(c)]);
}

TEST_CASE("the printed even-d coefficient gives 8 where the oracle gives 9") {
  CHECK(simple_dsym_even(2, 4, printed_even_simple_terms()).row_sum(4) == 8);
  CHECK(simple_dsym_even(2, 4).row_sum(4) == 9);
  CHECK(!all_ok(check_even_terms_against_oracle(2, {8, Execution::parallel}, printed_even_simple_terms())));
}

TEST_CASE("even-d summands reproduce every oracle row one step at a time") {
  check_all(check_even_terms_against_oracle(2, {8, Execution::parallel}));
  check_all(check_even_terms_against_oracle(4, {8, Execution::parallel}));
}

TEST_CASE("d-symmetric columns match the oracle") {
  for (int d : {1, 2, 3, 4, 6}) {
    check_all(check_dsym_against_oracle(Family::loopless, d, {7, Execution::parallel}));
    check_all(check_dsym_against_oracle(Family::simple, d, {7, Execution::parallel}));
  }
}

TEST_CASE("simple fixed counts") {
  CHECK(simple_fixed(4).by_divisor == std::map<int, Count>{{1, 21}, {2, 5}, {4, 1}, {8, 1}});
  CHECK(simple_fixed(2).by_divisor.at(2) == 1);
  const auto f6 = simple_fixed(6);
  CHECK(f6.by_divisor.at(2) == 96);
  CHECK(f6.by_divisor.at(3) == 15);
  CHECK(f6.by_divisor.at(4) == 4);
  CHECK(f6.by_divisor.at(6) == 3);
  CHECK(f6.by_divisor.at(12) == 1);
  const auto p = simple_pbar(4);
  const auto q = simple_qbar(2, 4);
  CHECK(simple_fixed(4).by_divisor.at(2) == p[4] - simple_fixed(2).by_divisor.at(2) - q[3] + p[3]);
}

TEST_CASE("simple cyclic counts") {
  const auto t = simple_cyclic(6);
  CHECK(t[2] == 1);
  CHECK(t[4] == 4);
  CHECK(t[6] == 176);
}

TEST_CASE("fixed counts match the oracle for n <= 6") { check_all(check_fixed_against_oracle(6)); }

TEST_CASE("fixed counts never exceed the column they come from") {
  for (int d = 1; d <= 8; ++d) {
    const auto a = loopless_dsym(d, 16);
    const auto f = loopless_fixed_column(d, 16);
    const auto sa = simple_dsym(d, 16);
    const auto sf = simple_fixed_column(d, 16);
    for (int m = 0; m <= 16; ++m) {
      const auto i = static_cast<std::size_t>(m);
      CHECK(f[i] >= 0);
      CHECK(f[i] <= a[i]);
      CHECK(sf[i] >= 0);
      if (d > 1) CHECK(sf[i] <= sa[i]);
      CHECK(sf[i] <= f[i]);
    }
  }
}

TEST_CASE("cyclic Burnside sums stay integral up to n = 40") {
  CHECK_NOTHROW(loopless_cyclic(40));
  CHECK_NOTHROW(simple_cyclic(40));
}
