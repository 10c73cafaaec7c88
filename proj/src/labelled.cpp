#include "chordenum/labelled.hpp"

#include <stdexcept>

namespace chordenum::labelled {

namespace {

void require_non_negative(int n) {
  if (n < 0) throw std::invalid_argument("table size must be non-negative");
}

}  // namespace

TriangleTable loopless_linear_triangle(int n_max) {
  require_non_negative(n_max);
  TriangleTable t{"a_nk", 2, {}};
  t.set({0, 0}, 1);
  for (int n = 0; n < n_max; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      Count v = t.at({n, k - 1}) + Count(2 * n - k) * t.at({n, k}) + Count(k + 1) * t.at({n, k + 1});
      t.set({n + 1, k}, v);
    }
  }
  return t;
}

SequenceTable loopless_linear(int n_max) {
  require_non_negative(n_max);
  SequenceTable s{"loopless-linear", {1}};
  if (n_max >= 1) s.values.push_back(0);
  for (int n = 1; n + 1 <= n_max; ++n) {
    s.values.push_back(Count(2 * n + 1) * s[static_cast<std::size_t>(n)] + s[static_cast<std::size_t>(n - 1)]);
  }
  return s;
}

SequenceTable loopless_linear_binomial(int n_max) {
  require_non_negative(n_max);
  SequenceTable s{"loopless-linear-binomial", {1}};
  for (int n = 0; n + 1 <= n_max; ++n) {
    Count next = Count(2 * n) * s[static_cast<std::size_t>(n)];
    for (int k = 1; k <= n; ++k) {
      next += binomial(n, k) * double_factorial_odd(k - 1) * s[static_cast<std::size_t>(n - k)];
    }
    s.values.push_back(next);
  }
  return s;
}

SequenceTable loopless_chord(int n_max) {
  require_non_negative(n_max);
  const auto a = loopless_linear(n_max);
  SequenceTable b{"loopless-chord", {0}};
  if (n_max >= 1) b.values.push_back(0);
  for (int n = 2; n <= n_max; ++n) {
    b.values.push_back(a[static_cast<std::size_t>(n)] - a[static_cast<std::size_t>(n - 1)]);
  }
  return b;
}

TriangleTable simple_triangle(int max_chords) {
  require_non_negative(max_chords);
  TriangleTable t{"a_nkl", 3, {}};
  if (max_chords >= 1) t.set({1, 1, 0}, 1);
  // Cells are keyed by chord count c = n + 1.
  for (int n = 0; n + 2 <= max_chords; ++n) {
    const int c = n + 1;
    for (int k = 0; k <= n + 2; ++k) {
      for (int l = 0; l <= n + 1; ++l) {
        Count v = t.at({c, k - 1, l}) + Count(2 * n + 1 - k - 2 * l) * t.at({c, k, l}) +
                  Count(k + 1) * t.at({c, k + 1, l}) + Count(2 * (l + 1)) * t.at({c, k, l + 1}) +
                  t.at({c, k, l - 1});
        t.set({c + 1, k, l}, v);
      }
    }
  }
  return t;
}

TriangleTable parallel_triangle(int max_chords) {
  require_non_negative(max_chords);
  TriangleTable t{"ahat_nl", 2, {}};
  // ahat_{0,0} = 1: the single chord.
  if (max_chords >= 1) t.set({1, 0}, 1);
  for (int n = 0; n + 2 <= max_chords; ++n) {
    const int c = n + 1;
    for (int l = 0; l <= n + 1; ++l) {
      Count v = t.at({c, l - 1}) + Count(2 * n + 2 - 2 * l) * t.at({c, l}) + Count(2 * (l + 1)) * t.at({c, l + 1});
      t.set({c + 1, l}, v);
    }
  }
  return t;
}

SimpleChain simple_labelled_chain(int max_chords) {
  if (max_chords < 1) throw std::invalid_argument("simple chain needs at least one chord");
  // abar_n for n = 0..max_chords-1, with abar_n = 0 for n <= 0.
  std::vector<Count> abar(static_cast<std::size_t>(max_chords), 0);
  auto at = [&](int n) -> Count { return n <= 0 ? Count(0) : abar[static_cast<std::size_t>(n)]; };
  if (max_chords >= 2) abar[1] = 1;
  for (int n = 2; n < max_chords; ++n) {
    abar[static_cast<std::size_t>(n)] = Count(2 * n - 1) * at(n - 1) + Count(4 * n - 3) * at(n - 2) +
                                        Count(2 * n - 4) * at(n - 3);
  }
  SimpleChain chain;
  chain.linear = {"simple-linear", {0}};
  chain.no_outer_chord = {"simple-no-outer-chord", {0}};
  chain.chord = {"simple-chord", {0}};
  for (int c = 1; c <= max_chords; ++c) {
    const auto prev = static_cast<std::size_t>(c - 1);
    chain.linear.values.push_back(at(c - 1));
    chain.no_outer_chord.values.push_back(at(c - 1) - chain.no_outer_chord[prev]);
    chain.chord.values.push_back(chain.no_outer_chord.values.back() - chain.chord[prev]);
  }
  return chain;
}

}  // namespace chordenum::labelled
