#include "chordenum/symmetry.hpp"

#include <stdexcept>

#include "chordenum/labelled.hpp"

namespace chordenum::symmetry {

namespace {

void require_d(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
}

void require_m(int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
}

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

Count c(long v) { return Count(v); }

// Evaluate the even-d triangle cell (m, k) from the lower rows of `rows`.
template <typename Lookup>
Count even_step(int m, int k, int d, const std::vector<EvenTerm>& terms, Lookup lookup) {
  Count v = 0;
  for (const auto& term : terms) {
    const int sm = m - term.dm;
    const int sk = k + term.dk;
    if (sm < 0 || sk < 0 || sk > sm) continue;
    v += term.coefficient(m, k, d) * lookup(sm, sk);
  }
  return v;
}

std::map<int, SequenceTable> columns(int n_max, SequenceTable (*column)(int, int)) {
  std::map<int, SequenceTable> out;
  for (int d = 1; d <= 2 * n_max; ++d) out.emplace(d, column(d, 2 * n_max / d));
  return out;
}

FixedCountVector fixed_vector(int n, SequenceTable (*column)(int, int)) {
  require_n(n);
  FixedCountVector v{n, {}};
  for (int d : divisors(2 * n)) v.by_divisor[d] = column(d, 2 * n / d)[static_cast<std::size_t>(2 * n / d)];
  return v;
}

SequenceTable sums(int n_max, SequenceTable (*column)(int, int), const std::string& name) {
  require_m(n_max);
  const auto cols = columns(n_max, column);
  SequenceTable out{name, {0}};
  for (int n = 1; n <= n_max; ++n) {
    FixedCountVector v{n, {}};
    for (int d : divisors(2 * n)) v.by_divisor[d] = cols.at(d)[static_cast<std::size_t>(2 * n / d)];
    out.values.push_back(totient_weighted_sum(v));
  }
  return out;
}

SequenceTable cyclic(int n_max, SequenceTable (*column)(int, int), const std::string& name) {
  auto out = sums(n_max, column, name);
  for (int n = 1; n <= n_max; ++n) {
    Count& sum = out.values[static_cast<std::size_t>(n)];
    if (sum % (2 * n) != 0) {
      throw std::logic_error(name + ": Burnside sum " + to_decimal(sum) + " not divisible by " +
                             std::to_string(2 * n));
    }
    sum /= 2 * n;
  }
  return out;
}

}  // namespace

SequenceTable loopless_dsym(int d, int m_max) {
  require_d(d);
  require_m(m_max);
  const bool even = d % 2 == 0;
  SequenceTable a{"loopless-dsym-" + std::to_string(d), {}};
  for (int m = 0; m <= m_max; ++m) {
    Count v;
    if (m == 0) {
      v = 1;
    } else if (m == 1) {
      v = even ? 1 : 0;
    } else if (m == 2) {
      v = even ? d : d - 1;
    } else if (even) {
      v = a.at(m - 1) + c(d * (m - 1)) * a.at(m - 2) - a.at(m - 3) + a.at(m - 4);
    } else {
      v = c(d * (m - 1)) * a.at(m - 2) + a.at(m - 4);
    }
    a.values.push_back(v);
  }
  return a;
}

SequenceTable loopless_dsym_expanded(int d, int m_max) {
  require_d(d);
  require_m(m_max);
  const bool even = d % 2 == 0;
  SequenceTable a{"loopless-dsym-expanded-" + std::to_string(d), {}};
  for (int m = 0; m <= m_max; ++m) {
    if (m == 0) {
      a.values.emplace_back(1);
      continue;
    }
    Count v = even ? a.at(m - 1) : Count(0);
    v += c(d * (m - 1) - 1) * a.at(m - 2);
    for (int i = 1; i <= m / 2 - 1; ++i) v += c(d * (m - 1 - 2 * i)) * a.at(m - 2 - 2 * i);
    // Odd d has no diagram on an odd number of points.
    if (!even && m % 2 == 1) v = 0;
    a.values.push_back(v);
  }
  return a;
}

SequenceTable loopless_fixed_column(int d, int m_max) {
  const auto a = loopless_dsym(d, m_max);
  SequenceTable f{"loopless-fixed-" + std::to_string(d), {}};
  for (int m = 0; m <= m_max; ++m) {
    if (m * d == 2 || (m * d) % 2 == 1) {
      f.values.emplace_back(0);
    } else {
      f.values.push_back(a.at(m) - a.at(m - 2));
    }
  }
  return f;
}

FixedCountVector loopless_fixed(int n) { return fixed_vector(n, loopless_fixed_column); }

SequenceTable loopless_cyclic(int n_max) { return cyclic(n_max, loopless_fixed_column, "loopless-cyclic"); }

const std::vector<EvenTerm>& even_simple_terms() {
  static const std::vector<EvenTerm> terms = {
      {1, -1, [](int, int, int) { return Count(1); }, "1"},
      {2, 0, [](int m, int, int d) { return c((m - 1) * d - 3 + (m == 2 ? 1 : 0)); }, "(m-1)d-3+[m=2]"},
      {3, 1, [](int, int k, int d) { return c((k + 1) * d); }, "(k+1)d"},
      {4, 0, [](int m, int k, int d) { return c((2 * m + k - 7) * d); }, "(2m+k-7)d"},
      {5, 1, [](int, int k, int d) { return c((k + 1) * d); }, "(k+1)d"},
      {6, 0, [](int m, int k, int d) { return c((m + k - 6) * d); }, "(m+k-6)d"},
  };
  return terms;
}

const std::vector<EvenTerm>& printed_even_simple_terms() {
  static const std::vector<EvenTerm> terms = [] {
    auto t = even_simple_terms();
    t[3] = {4, 0, [](int m, int k, int) { return c(2 * m + k - 7); }, "(2m+k-7)"};
    return t;
  }();
  return terms;
}

TriangleTable simple_dsym_even(int d, int m_max, const std::vector<EvenTerm>& terms) {
  require_d(d);
  require_m(m_max);
  if (d % 2 != 0) throw std::invalid_argument("the diameter split needs even d");
  TriangleTable t{"simple-dsym-" + std::to_string(d), 2, {}};
  t.set({0, 0}, 1);
  for (int m = 1; m <= m_max; ++m) {
    for (int k = 0; k <= m; ++k) {
      t.set({m, k}, even_step(m, k, d, terms, [&](int sm, int sk) { return t.at({sm, sk}); }));
    }
  }
  return t;
}

SequenceTable simple_dsym(int d, int m_max) {
  require_d(d);
  require_m(m_max);
  SequenceTable a{"simple-dsym-" + std::to_string(d), {}};
  if (d % 2 == 0) {
    const auto t = simple_dsym_even(d, m_max);
    for (int m = 0; m <= m_max; ++m) a.values.push_back(t.row_sum(m));
    return a;
  }
  for (int m = 0; m <= m_max; ++m) {
    Count v;
    if (m == 0) {
      v = 1;
    } else if (m == 1) {
      v = 0;
    } else if (m == 2) {
      v = d - 1;
    } else {
      v = c((m - 1) * d - 2) * a.at(m - 2) + c((2 * m - 7) * d) * a.at(m - 4) + c((m - 6) * d) * a.at(m - 6);
    }
    a.values.push_back(v);
  }
  return a;
}

SequenceTable simple_qbar(int d, int m_max) {
  const auto a = simple_dsym(d, m_max);
  SequenceTable q{"simple-qbar-" + std::to_string(d), {}};
  for (int m = 0; m <= m_max; ++m) {
    if (m < 2) {
      q.values.emplace_back(d <= 2 ? 0 : 1);
    } else {
      q.values.push_back(a.at(m) - q.at(m - 2));
    }
  }
  return q;
}

SequenceTable simple_pbar(int m_max) {
  const auto q = simple_qbar(2, m_max);
  SequenceTable p{"simple-pbar", {}};
  for (int m = 0; m <= m_max; ++m) {
    if (m < 2) {
      p.values.emplace_back(m);
    } else {
      p.values.push_back(q.at(m) - p.at(m - 2) - q.at(m - 4));
    }
  }
  return p;
}

SequenceTable simple_fixed_column(int d, int m_max) {
  require_d(d);
  require_m(m_max);
  SequenceTable f{"simple-fixed-" + std::to_string(d), {}};
  if (d == 1) {
    const auto chain = labelled::simple_labelled_chain(m_max / 2 + 1);
    for (int m = 0; m <= m_max; ++m) f.values.push_back(m % 2 == 0 ? chain.chord[static_cast<std::size_t>(m / 2)] : Count(0));
    return f;
  }
  const auto q = simple_qbar(d, m_max);
  if (d == 2) {
    const auto p = simple_pbar(m_max);
    for (int m = 0; m <= m_max; ++m) {
      if (m < 2) {
        f.values.emplace_back(m == 0 ? 1 : 0);
      } else {
        f.values.push_back(p.at(m) - f.at(m - 2) - q.at(m - 1) + p.at(m - 1));
      }
    }
    return f;
  }
  for (int m = 0; m <= m_max; ++m) {
    if (m == 0) {
      f.values.emplace_back(0);
    } else if (d % 2 == 1) {
      f.values.push_back((m % 2 == 1) ? Count(0) : Count(q.at(m) - f.at(m - 2)));
    } else {
      f.values.push_back(q.at(m) - f.at(m - 2) - q.at(m - 2) - q.at(m - 3));
    }
  }
  return f;
}

FixedCountVector simple_fixed(int n) { return fixed_vector(n, simple_fixed_column); }

SequenceTable simple_cyclic(int n_max) { return cyclic(n_max, simple_fixed_column, "simple-cyclic"); }

Count totient_weighted_sum(const FixedCountVector& fixed) {
  Count sum = 0;
  for (const auto& [d, value] : fixed.by_divisor) sum += Count(static_cast<long>(euler_phi(d))) * value;
  return sum;
}

SequenceTable cyclic_sums(oracle::Family family, int n_max) {
  switch (family) {
    case oracle::Family::loopless:
      return sums(n_max, loopless_fixed_column, "loopless-cyclic-sum");
    case oracle::Family::simple:
      return sums(n_max, simple_fixed_column, "simple-cyclic-sum");
    default:
      throw std::invalid_argument("no recurrence for the unrestricted family");
  }
}

std::vector<CheckResult> check_dsym_against_oracle(oracle::Family family, int d, const oracle::Options& options) {
  require_d(d);
  if (family == oracle::Family::all) throw std::invalid_argument("no recurrence for the unrestricted family");
  const bool simple = family == oracle::Family::simple;
  const int m_max = 2 * options.cap / d;
  const std::string base = std::string(simple ? "simple" : "loopless") + "-dsym-" + std::to_string(d);
  std::vector<CheckResult> out;
  const auto column = simple ? simple_dsym(d, m_max) : loopless_dsym(d, m_max);
  TriangleTable split;
  if (simple && d % 2 == 0) split = simple_dsym_even(d, m_max);
  for (int m = 0; m <= m_max; ++m) {
    if ((m * d) % 2 == 1) continue;
    const int n = m * d / 2;
    const auto table = oracle::sectored_symmetric_table(n, d, family, options);
    Count total = 0;
    for (const auto& [diameters, value] : table) total += value;
    out.push_back(make_check(base + " m=" + std::to_string(m), n, total, column[static_cast<std::size_t>(m)]));
    if (simple && d % 2 == 0) {
      for (int k = 0; k <= m; ++k) {
        const auto it = table.find(k * d / 2);
        const Count expected = it == table.end() ? Count(0) : it->second;
        out.push_back(make_check(base + " m=" + std::to_string(m) + " k=" + std::to_string(k), n, expected,
                                 split.at({m, k})));
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_even_terms_against_oracle(int d, const oracle::Options& options,
                                                         const std::vector<EvenTerm>& terms) {
  require_d(d);
  if (d % 2 != 0) throw std::invalid_argument("even d expected");
  const int m_max = 2 * options.cap / d;
  TriangleTable truth{"oracle", 2, {}};
  for (int m = 0; m <= m_max; ++m) {
    for (const auto& [diameters, value] : oracle::sectored_symmetric_table(m * d / 2, d, oracle::Family::simple, options)) {
      truth.set({m, 2 * diameters / d}, value);
    }
  }
  std::vector<CheckResult> out;
  for (int m = 1; m <= m_max; ++m) {
    for (int k = 0; k <= m; ++k) {
      const Count predicted = even_step(m, k, d, terms, [&](int sm, int sk) { return truth.at({sm, sk}); });
      out.push_back(make_check("even-term-step d=" + std::to_string(d) + " m=" + std::to_string(m) +
                                   " k=" + std::to_string(k),
                               m * d / 2, truth.at({m, k}), predicted));
    }
  }
  return out;
}

std::vector<CheckResult> check_fixed_against_oracle(int n_max, const oracle::Options& options) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto loopless = loopless_fixed(n);
    const auto simple = simple_fixed(n);
    for (int d : divisors(2 * n)) {
      out.push_back(make_check("loopless-fixed d=" + std::to_string(d), n,
                               oracle::count_rotation_fixed(n, d, oracle::Family::loopless, options),
                               loopless.by_divisor.at(d)));
      out.push_back(make_check("simple-fixed d=" + std::to_string(d), n,
                               oracle::count_rotation_fixed(n, d, oracle::Family::simple, options),
                               simple.by_divisor.at(d)));
    }
  }
  return out;
}

}  // namespace chordenum::symmetry
