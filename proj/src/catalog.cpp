#include "chordenum/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "chordenum/labelled.hpp"
#include "chordenum/reflection.hpp"
#include "chordenum/symmetry.hpp"

namespace chordenum::catalog {

namespace {

TriangleTable shift_first(const TriangleTable& t, const std::string& name) {
  TriangleTable out{name, t.arity, {}};
  for (const auto& [key, value] : t.cells) {
    auto k = key;
    k[0] -= 1;
    out.set(k, value);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "loopless-linear", "loopless-chord", "loopless-cyclic", "loopless-dihedral", "simple-linear",
      "simple-chord",    "simple-cyclic",  "simple-dihedral", "all"};
  return names;
}

bool is_family(const std::string& name) {
  const auto& n = family_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SequenceTable family_sequence(const std::string& name, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  SequenceTable s;
  if (name == "loopless-linear") {
    s = labelled::loopless_linear(n_max);
  } else if (name == "loopless-chord") {
    s = labelled::loopless_chord(n_max);
  } else if (name == "loopless-cyclic") {
    s = symmetry::loopless_cyclic(n_max);
  } else if (name == "loopless-dihedral") {
    s = reflection::loopless_dihedral(n_max);
  } else if (name == "simple-linear") {
    s = labelled::simple_labelled_chain(std::max(n_max, 1)).linear;
  } else if (name == "simple-chord") {
    s = labelled::simple_labelled_chain(std::max(n_max, 1)).chord;
  } else if (name == "simple-cyclic") {
    s = symmetry::simple_cyclic(n_max);
  } else if (name == "simple-dihedral") {
    s = reflection::simple_dihedral(n_max);
  } else if (name == "all") {
    for (int n = 0; n <= n_max; ++n) s.values.push_back(double_factorial_odd(n));
  } else {
    throw std::invalid_argument("unknown family '" + name + "'");
  }
  s.name = name;
  s.values.resize(static_cast<std::size_t>(n_max) + 1);
  return s;
}

const std::vector<std::string>& triangle_names() {
  static const std::vector<std::string> names = {"a_nk", "a_nkl", "ahat_nl", "abar_mk", "rbar_nk", "sbar_nk"};
  return names;
}

bool is_triangle(const std::string& name) {
  const auto& n = triangle_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

TriangleTable triangle(const std::string& name, int n_max, int d) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (name == "a_nk") return labelled::loopless_linear_triangle(n_max);
  if (name == "a_nkl") return shift_first(labelled::simple_triangle(n_max + 1), name);
  if (name == "ahat_nl") return shift_first(labelled::parallel_triangle(n_max + 1), name);
  if (name == "abar_mk") return symmetry::simple_dsym_even(d, n_max);
  if (name == "rbar_nk") return reflection::simple_reflection_tables(n_max).r;
  if (name == "sbar_nk") return reflection::simple_reflection_tables(n_max).s;
  throw std::invalid_argument("unknown triangle '" + name + "'");
}

std::vector<std::string> triangle_key_names(const std::string& name) {
  if (name == "a_nkl") return {"n", "k", "l"};
  if (name == "ahat_nl") return {"n", "l"};
  if (name == "abar_mk") return {"m", "k"};
  if (is_triangle(name)) return {"n", "k"};
  throw std::invalid_argument("unknown triangle '" + name + "'");
}

}  // namespace chordenum::catalog
