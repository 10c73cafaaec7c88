#include "chordenum/reflection.hpp"

#include <stdexcept>

#include "chordenum/symmetry.hpp"

namespace chordenum::reflection {

namespace {

void require_n_max(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
}

Count c(long v) { return Count(v); }

// Cells overridden after the recurrence.
bool is_boundary(int n, int k) { return (n == 0 && k == 0) || (n == 2 && k == 0); }

template <typename R, typename S>
Count rbar_step(int n, int k, R r, S s) {
  Count v = 0;
  for (const auto& term : rbar_terms()) {
    const int sn = n - term.dn;
    const int sk = k + term.dk;
    if (sn < 0 || sk < 0 || sk > sn) continue;
    v += term.coefficient(n, k) * (term.use_s ? s(sn, sk) : r(sn, sk));
  }
  return v;
}

SequenceTable dihedral(int n_max, const SequenceTable& cyclic_sum, const SequenceTable& vertex,
                       const SequenceTable& edge, const std::string& name) {
  SequenceTable out{name, {0}};
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Count sum = cyclic_sum[i] + c(n) * vertex[i] + c(n) * edge[i];
    if (sum % (4 * n) != 0) {
      throw std::logic_error(name + ": Burnside sum " + to_decimal(sum) + " not divisible by " +
                             std::to_string(4 * n));
    }
    out.values.push_back(sum / (4 * n));
  }
  return out;
}

}  // namespace

LooplessReflection loopless_reflection(int n_max) {
  require_n_max(n_max);
  const auto a = symmetry::loopless_dsym(2, n_max);
  LooplessReflection out{{"loopless-vertex-fixed", {}}, {"loopless-edge-fixed", {}}};
  for (int n = 0; n <= n_max; ++n) {
    if (n < 2) {
      out.vertex.values.emplace_back(0);
      out.edge.values.emplace_back(0);
    } else {
      out.vertex.values.push_back(a.at(n - 1));
      out.edge.values.push_back(a.at(n) - 2 * a.at(n - 1) + a.at(n - 2));
    }
  }
  return out;
}

SequenceTable loopless_dihedral(int n_max) {
  require_n_max(n_max);
  const auto refl = loopless_reflection(n_max);
  const auto sums = symmetry::cyclic_sums(oracle::Family::loopless, n_max);
  auto out = dihedral(n_max, sums, refl.vertex, refl.edge, "loopless-dihedral");
  const auto cyc = symmetry::loopless_cyclic(n_max);
  const auto a = symmetry::loopless_dsym(2, n_max);
  for (int n = 2; n <= n_max; ++n) {
    // 4 ctilde_n = 2 btilde_n + a_n - a_{n-1} + a_{n-2}
    const Count four_c = 2 * cyc.at(n) + a.at(n) - a.at(n - 1) + a.at(n - 2);
    if (four_c != 4 * out.at(n)) {
      throw std::logic_error("loopless-dihedral: closed form " + to_decimal(four_c) + "/4 disagrees with " +
                             to_decimal(out.at(n)) + " at n=" + std::to_string(n));
    }
  }
  return out;
}

const std::vector<RbarTerm>& rbar_terms() {
  static const std::vector<RbarTerm> terms = {
      {0, 0, true, [](int, int) { return c(1); }, "sbar_{n,k}"},
      {2, 0, false, [](int n, int) { return c(2 * (n - 2)); }, "2(n-2) rbar_{n-2,k}"},
      {2, 0, true, [](int, int) { return c(1); }, "sbar_{n-2,k}"},
      {4, 0, false, [](int n, int) { return c(2 * (n - 3)); }, "2(n-3) rbar_{n-4,k}"},
      {4, 0, false, [](int n, int k) { return c(2 * (n - k - 4)); }, "2(n-k-4) rbar_{n-4,k}"},
      {3, -1, false, [](int, int k) { return c(2 * (k - 1)); }, "2(k-1) rbar_{n-3,k-1}"},
      {5, -1, false, [](int, int k) { return c(2 * (k - 1)); }, "2(k-1) rbar_{n-5,k-1}"},
      {6, 0, false, [](int n, int k) { return c(2 * (n - k - 6)); }, "2(n-k-6) rbar_{n-6,k}"},
  };
  return terms;
}

ReflectionTable simple_reflection_tables(int n_max) {
  require_n_max(n_max);
  ReflectionTable t;
  t.r = {"rbar", 2, {}};
  t.s = {"sbar", 2, {}};
  auto r = [&](int n, int k) { return t.r.at({n, k}); };
  auto s = [&](int n, int k) { return t.s.at({n, k}); };
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (n > 0) t.s.set({n, k}, r(n - 1, k - 1) - s(n - 1, k - 1));
    }
    for (int k = 0; k <= n; ++k) {
      t.r.set({n, k}, is_boundary(n, k) ? Count(1) : rbar_step(n, k, r, s));
    }
  }
  t.r_sum = {"rbar-sum", {}};
  t.s_sum = {"sbar-sum", {}};
  for (int n = 0; n <= n_max; ++n) {
    t.r_sum.values.push_back(t.r.row_sum(n));
    t.s_sum.values.push_back(t.s.row_sum(n));
  }
  t.vertex = {"simple-vertex-fixed", {}};
  t.no_parallel = {"simple-no-parallel", {}};
  t.edge = {"simple-edge-fixed", {}};
  for (int n = 0; n <= n_max; ++n) {
    if (n < 2) {
      t.vertex.values.emplace_back(0);
      t.no_parallel.values.emplace_back(0);
    } else {
      t.vertex.values.push_back(t.r_sum.at(n - 1) - t.vertex.at(n - 2));
      t.no_parallel.values.push_back(t.r_sum.at(n) - 2 * t.s_sum.at(n) + t.no_parallel.at(n - 2));
    }
    t.edge.values.push_back(n == 0 ? Count(0) : Count(t.no_parallel.at(n) - t.vertex.at(n - 1)));
  }
  return t;
}

SequenceTable simple_dihedral(int n_max) {
  require_n_max(n_max);
  const auto t = simple_reflection_tables(n_max);
  const auto sums = symmetry::cyclic_sums(oracle::Family::simple, n_max);
  return dihedral(n_max, sums, t.vertex, t.edge, "simple-dihedral");
}

std::vector<CheckResult> check_mirror_against_oracle(const oracle::Options& options) {
  const int n_max = options.cap;
  const auto t = simple_reflection_tables(n_max);
  TriangleTable r_true{"rbar", 2, {}};
  TriangleTable s_true{"sbar", 2, {}};
  std::vector<CheckResult> out;
  for (int n = 0; n <= n_max; ++n) {
    const auto m = oracle::mirror_table(n, options);
    for (const auto& [k, v] : m.all) r_true.set({n, k}, v);
    for (const auto& [k, v] : m.with_outer_chord) s_true.set({n, k}, v);
    for (int k = 0; k <= n; ++k) {
      const std::string at = " k=" + std::to_string(k);
      out.push_back(make_check("rbar" + at, n, r_true.at({n, k}), t.r.at({n, k})));
      out.push_back(make_check("sbar" + at, n, s_true.at({n, k}), t.s.at({n, k})));
    }
  }
  auto r = [&](int n, int k) { return r_true.at({n, k}); };
  auto s = [&](int n, int k) { return s_true.at({n, k}); };
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const std::string at = " k=" + std::to_string(k);
      out.push_back(make_check("sbar-step" + at, n, s(n, k), r(n - 1, k - 1) - s(n - 1, k - 1)));
      if (!is_boundary(n, k)) out.push_back(make_check("rbar-step" + at, n, r(n, k), rbar_step(n, k, r, s)));
    }
  }
  return out;
}

std::vector<CheckResult> check_reflection_against_oracle(int n_max, const oracle::Options& options) {
  const auto loopless = loopless_reflection(n_max);
  const auto simple = simple_reflection_tables(n_max);
  using oracle::Axis;
  using oracle::Family;
  std::vector<CheckResult> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.push_back(make_check("loopless-vertex-fixed", n, oracle::count_reflection_fixed(n, Axis::vertex, Family::loopless, options),
                             loopless.vertex[i]));
    out.push_back(make_check("loopless-edge-fixed", n, oracle::count_reflection_fixed(n, Axis::edge, Family::loopless, options),
                             loopless.edge[i]));
    out.push_back(make_check("simple-vertex-fixed", n, oracle::count_reflection_fixed(n, Axis::vertex, Family::simple, options),
                             simple.vertex[i]));
    out.push_back(make_check("simple-edge-fixed", n, oracle::count_reflection_fixed(n, Axis::edge, Family::simple, options),
                             simple.edge[i]));
  }
  return out;
}

}  // namespace chordenum::reflection
