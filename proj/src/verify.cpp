#include "chordenum/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "chordenum/catalog.hpp"
#include "chordenum/generating_functions.hpp"
#include "chordenum/golden.hpp"
#include "chordenum/labelled.hpp"
#include "chordenum/octahedron.hpp"
#include "chordenum/reflection.hpp"
#include "chordenum/symmetry.hpp"

namespace chordenum::verify {

namespace {

using oracle::Family;

void append(std::vector<CheckResult>& out, const std::vector<CheckResult>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::vector<CheckResult> golden(const golden::GoldenTable& table, const std::vector<std::string>& families,
                                const std::string& prefix) {
  constexpr int rows = 20;
  std::vector<CheckResult> out;
  for (std::size_t col = 0; col < families.size(); ++col) {
    const auto seq = catalog::family_sequence(families[col], rows);
    for (int n = 1; n <= rows; ++n) {
      out.push_back(make_check(prefix + ":" + families[col], n,
                               from_decimal(table[static_cast<std::size_t>(n - 1)][col]),
                               seq[static_cast<std::size_t>(n)]));
    }
  }
  return out;
}

CheckResult flag(std::string name, int n, bool ok) {
  return make_check(std::move(name), n, Count(1), Count(ok ? 1 : 0));
}

}  // namespace

std::vector<CheckResult> golden_loopless() {
  return golden(golden::loopless_table(),
                {"loopless-linear", "loopless-chord", "loopless-cyclic", "loopless-dihedral"}, "table1");
}

std::vector<CheckResult> golden_simple() {
  return golden(golden::simple_table(), {"simple-linear", "simple-chord", "simple-cyclic", "simple-dihedral"},
                "table2");
}

std::vector<CheckResult> oracle_suite(int n_max, const oracle::Options& options) {
  oracle::check_cap(n_max, options);
  std::vector<CheckResult> out;
  const struct {
    const char* family;
    Topology topology;
    Family kind;
  } labelled_cases[] = {
      {"all", Topology::circular(), Family::all},
      {"loopless-linear", Topology::linear(), Family::loopless},
      {"loopless-chord", Topology::circular(), Family::loopless},
      {"simple-linear", Topology::linear(), Family::simple},
      {"simple-chord", Topology::circular(), Family::simple},
  };
  for (const auto& c : labelled_cases) {
    const auto seq = catalog::family_sequence(c.family, n_max);
    for (int n = 1; n <= n_max; ++n) {
      out.push_back(make_check(std::string("labelled:") + c.family, n,
                               oracle::count_labelled(n, c.topology, c.kind, options),
                               seq[static_cast<std::size_t>(n)]));
    }
  }
  const auto kl = labelled::simple_triangle(n_max);
  const auto k_only = labelled::loopless_linear_triangle(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::map<int, Count> by_loops;
    const auto table = oracle::classify_table(n, Topology::linear(), options);
    for (const auto& [key, value] : table) {
      by_loops[key.first] += value;
    }
    // Every cell the recurrence can reach, including the zero ones.
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        const auto it = table.find({k, l});
        const Count expected = it == table.end() ? Count(0) : it->second;
        out.push_back(make_check("cell:a_nkl k=" + std::to_string(k) + " l=" + std::to_string(l), n - 1, expected,
                                 kl.at({n, k, l})));
      }
      out.push_back(make_check("cell:a_nk k=" + std::to_string(k), n, by_loops[k], k_only.at({n, k})));
    }
  }
  for (int d : {1, 2, 3, 4, 6}) {
    oracle::Options capped = options;
    capped.cap = n_max;
    append(out, symmetry::check_dsym_against_oracle(Family::loopless, d, capped));
    append(out, symmetry::check_dsym_against_oracle(Family::simple, d, capped));
  }
  {
    oracle::Options capped = options;
    capped.cap = n_max;
    append(out, symmetry::check_even_terms_against_oracle(2, capped));
    append(out, symmetry::check_even_terms_against_oracle(4, capped));
    append(out, reflection::check_mirror_against_oracle(capped));
  }
  append(out, symmetry::check_fixed_against_oracle(n_max, options));
  append(out, reflection::check_reflection_against_oracle(n_max, options));
  const struct {
    const char* family;
    GroupKind group;
    Family kind;
  } orbit_cases[] = {
      {"loopless-cyclic", GroupKind::cyclic, Family::loopless},
      {"loopless-dihedral", GroupKind::dihedral, Family::loopless},
      {"simple-cyclic", GroupKind::cyclic, Family::simple},
      {"simple-dihedral", GroupKind::dihedral, Family::simple},
  };
  for (const auto& c : orbit_cases) {
    const auto seq = catalog::family_sequence(c.family, n_max);
    for (int n = 1; n <= n_max; ++n) {
      out.push_back(make_check(std::string("orbits:") + c.family, n,
                               oracle::count_orbits(n, c.group, c.kind, options).orbit_count,
                               seq[static_cast<std::size_t>(n)]));
    }
  }
  return out;
}

std::vector<CheckResult> series_suite() {
  constexpr int order = 25;
  std::vector<CheckResult> out;
  auto compare = [&](const std::string& name, const std::vector<Count>& series, const std::vector<Count>& rec,
                     int offset) {
    for (int n = 0; n <= order; ++n) {
      out.push_back(make_check("series:" + name, n, rec[static_cast<std::size_t>(n + offset)],
                               series[static_cast<std::size_t>(n)]));
    }
  };
  const auto chain = labelled::simple_labelled_chain(order + 1);
  std::vector<Count> all;
  for (int n = 0; n <= order; ++n) all.push_back(double_factorial_odd(n));
  compare("b", gf::integer_coeffs(gf::all_matchings(order)), all, 0);
  compare("phi", gf::integer_coeffs(gf::loopless_linear(order)), labelled::loopless_linear(order).values, 0);
  compare("psi", gf::integer_coeffs(gf::loopless_chord(order)), labelled::loopless_chord(order).values, 0);
  compare("W", gf::integer_coeffs(gf::simple_linear(order)), chain.linear.values, 1);
  compare("U", gf::integer_coeffs(gf::simple_chord(order)), chain.chord.values, 0);

  constexpr int w_order = 12;
  const auto w = gf::linear_by_loops_and_parallels(w_order);
  const auto w_table = gf::integer_coeff_table(w, "w");
  const auto kl = labelled::simple_triangle(w_order + 1);
  for (int n = 0; n <= w_order; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      for (int l = 0; l <= n + 1; ++l) {
        out.push_back(make_check("series:w_tzx k=" + std::to_string(k) + " l=" + std::to_string(l), n,
                                 kl.at({n + 1, k, l}), w_table.at({n, k, l})));
      }
    }
  }

  const auto z = MarkerPolynomial::z();
  const auto x = MarkerPolynomial::x();
  const MarkerPolynomial one(1L);
  auto residual_terms = [](const gf::MarkerSeries& r) {
    long nonzero = 0;
    for (const auto& c : r.coefficients()) nonzero += static_cast<long>(c.terms().size());
    return Count(nonzero);
  };
  {
    constexpr int pde_order = 20;
    const auto wz = gf::linear_by_loops(pde_order);
    const auto t = gf::MarkerSeries::variable(pde_order - 1);
    const auto unit = gf::MarkerSeries::constant(pde_order - 1, one);
    const auto lhs = (unit - MarkerPolynomial(2L) * t) * derivative(wz);
    const auto rhs = z * wz + (one - z) * wz.map([](const MarkerPolynomial& p) { return p.d_dz(); });
    out.push_back(make_check("series:pde w_zt residual terms", pde_order, 0, residual_terms(lhs - rhs)));
  }
  {
    constexpr int pde_order = 15;
    const auto wt = gf::linear_by_loops_and_parallels(pde_order);
    const auto t = gf::MarkerSeries::variable(pde_order - 1);
    const auto unit = gf::MarkerSeries::constant(pde_order - 1, one);
    const auto lhs = (unit - MarkerPolynomial(2L) * t) * derivative(wt);
    const auto rhs = (z + x + one) * wt + (one - z) * wt.map([](const MarkerPolynomial& p) { return p.d_dz(); }) +
                     MarkerPolynomial(2L) * (one - x) * wt.map([](const MarkerPolynomial& p) { return p.d_dx(); });
    out.push_back(make_check("series:pde w_tzx residual terms", pde_order, 0, residual_terms(lhs - rhs)));
  }
  return out;
}

std::vector<CheckResult> burnside_suite(int n_max, int orbit_max, const oracle::Options& options) {
  std::vector<CheckResult> out;
  const auto run = [&](const std::string& name, auto build) {
    bool ok = true;
    try {
      build();
    } catch (const std::logic_error&) {
      ok = false;
    }
    out.push_back(flag("burnside:" + name + " integral", n_max, ok));
  };
  run("loopless-cyclic", [&] { symmetry::loopless_cyclic(n_max); });
  run("simple-cyclic", [&] { symmetry::simple_cyclic(n_max); });
  run("loopless-dihedral", [&] { reflection::loopless_dihedral(n_max); });
  run("simple-dihedral", [&] { reflection::simple_dihedral(n_max); });
  for (int n = 1; n <= orbit_max; ++n) {
    for (auto group : {GroupKind::cyclic, GroupKind::dihedral}) {
      for (auto family : {Family::all, Family::loopless, Family::simple}) {
        const auto report = oracle::count_orbits(n, group, family, options);
        const std::string name = std::string("burnside:orbits ") + (group == GroupKind::cyclic ? "cyclic " : "dihedral ") +
                                 oracle::to_string(family);
        out.push_back(make_check(name, n, report.burnside_orbit_count, report.orbit_count));
      }
    }
  }
  return out;
}

std::vector<CheckResult> octahedron_suite(int n_max) {
  std::vector<CheckResult> out;
  const auto b = labelled::loopless_chord(n_max);
  const auto c = reflection::loopless_dihedral(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const auto got = octahedron::count_cycles(n, {std::max(n_max, 1), Execution::parallel});
    const auto i = static_cast<std::size_t>(n);
    out.push_back(make_check("octahedron:labelled*4n", n, b[i] * (Count(1) << n) * factorial(n), got.labelled * 4 * n));
    out.push_back(make_check("octahedron:orbits", n, c[i], got.orbits));
  }
  return out;
}

std::vector<CheckResult> identity_suite(int n_max) {
  std::vector<CheckResult> out;
  const auto three = labelled::loopless_linear(n_max);
  const auto binomial = labelled::loopless_linear_binomial(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.push_back(make_check("identity:three-term vs binomial", n, three[i], binomial[i]));
  }
  return out;
}

std::vector<std::pair<int, Count>> parse_bfile(const std::string& text) {
  std::vector<std::pair<int, Count>> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw std::runtime_error("b-file line " + std::to_string(line_no) + ": expected two fields");
    }
    try {
      std::size_t used = 0;
      const int n = std::stoi(index, &used);
      if (used != index.size()) throw std::invalid_argument(index);
      out.emplace_back(n, from_decimal(value));
    } catch (const std::exception&) {
      throw std::runtime_error("b-file line " + std::to_string(line_no) + ": not an integer pair");
    }
  }
  return out;
}

std::vector<std::pair<int, Count>> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read b-file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_bfile(text.str());
}

std::string detect_bfile_family(const std::string& path) {
  const auto name = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
  if (name.find("003436") != std::string::npos) return "loopless-chord";
  if (name.find("003437") != std::string::npos) return "loopless-dihedral";
  return "";
}

std::vector<CheckResult> bfile_suite(const std::vector<std::pair<int, Count>>& entries, const std::string& family) {
  int top = 0;
  for (const auto& [n, v] : entries) top = std::max(top, n);
  const auto seq = catalog::family_sequence(family, top);
  std::vector<CheckResult> out;
  for (const auto& [n, v] : entries) {
    if (n < 1) continue;
    out.push_back(make_check("bfile:" + family, n, v, seq[static_cast<std::size_t>(n)]));
    if (!out.back().ok) break;
  }
  return out;
}

}  // namespace chordenum::verify
