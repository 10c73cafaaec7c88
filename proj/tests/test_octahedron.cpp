#include <set>

#include "chordenum/labelled.hpp"
#include "chordenum/octahedron.hpp"
#include "chordenum/oracle.hpp"
#include "chordenum/reflection.hpp"
#include "doctest.h"

using namespace chordenum;
using namespace chordenum::octahedron;

TEST_CASE("octahedron graph") {
  for (int n = 1; n <= 6; ++n) {
    const OctahedronGraph g(n);
    int non_edges = 0;
    for (int u = 1; u <= 2 * n; ++u) {
      CHECK(g.degree(u) == 2 * n - 2);
      for (int v = u + 1; v <= 2 * n; ++v) non_edges += g.adjacent(u, v) ? 0 : 1;
    }
    CHECK(non_edges == n);
  }
}

TEST_CASE("the 4-cycle maps to the crossing diagram") {
  const OctahedronGraph g(2);
  const auto c = HamCycle::from_sequence(g, {1, 3, 2, 4});
  CHECK(cycle_to_diagram(c) == Diagram::from_chords(2, {{1, 3}, {2, 4}}));
  const auto back = diagram_to_cycle(Diagram::from_chords(2, {{1, 3}, {2, 4}}));
  CHECK(back.cycle.vertices() == std::vector<int>{1, 3, 2, 4});
  CHECK_THROWS_AS(HamCycle::from_sequence(g, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(HamCycle::from_sequence(g, {1, 3, 3, 4}), std::invalid_argument);
}

TEST_CASE("diagram to cycle") {
  const auto d = Diagram::from_chords(3, {{1, 4}, {2, 5}, {3, 6}});
  const auto l = diagram_to_cycle(d);
  CHECK(l.labelling == std::vector<int>{1, 3, 5, 2, 4, 6});
  CHECK(l.cycle.vertices() == std::vector<int>{1, 3, 5, 2, 4, 6});
  CHECK(cycle_to_diagram(l.cycle) == d);
  CHECK_THROWS_AS(diagram_to_cycle(Diagram::from_chords(2, {{1, 2}, {3, 4}})), std::invalid_argument);
  CHECK_THROWS_AS(diagram_to_cycle(Diagram::from_chords(3, {{1, 3}, {2, 6}, {4, 5}})), std::invalid_argument);
}

TEST_CASE("cycle counts") {
  CHECK(count_cycles(1).labelled == 0);
  CHECK(count_cycles(2).labelled == 1);
  const auto three = count_cycles(3);
  CHECK(three.labelled == 16);
  CHECK(three.orbits == 2);
  CHECK_THROWS_AS(count_cycles(7), std::out_of_range);
  CHECK_THROWS_AS(count_cycles(4, {3, Execution::serial}), std::out_of_range);
}

TEST_CASE("labelled * 4n = b_n 2^n n! and orbits equal dihedral counts (n <= 5)") {
  const auto b = labelled::loopless_chord(6);
  const auto c = reflection::loopless_dihedral(6);
  for (int n = 1; n <= 5; ++n) {
    const auto got = count_cycles(n);
    const auto i = static_cast<std::size_t>(n);
    CHECK(got.labelled * 4 * n == b[i] * (Count(1) << n) * factorial(n));
    CHECK(got.orbits == c[i]);
    const auto serial = count_cycles(n, {6, Execution::serial});
    CHECK(serial.labelled == got.labelled);
    CHECK(serial.orbits == got.orbits);
  }
}

TEST_CASE("every listed cycle gives a loopless diagram, and shapes match orbits") {
  for (int n = 2; n <= 5; ++n) {
    const auto cycles = list_cycles(n);
    CHECK(Count(static_cast<unsigned long>(cycles.size())) == count_cycles(n).labelled);
    std::set<std::vector<int>> shapes;
    std::set<std::vector<int>> codes;
    for (const auto& c : cycles) {
      const auto d = cycle_to_diagram(c);
      CHECK(classify(d).loops == 0);
      shapes.insert(c.canonical_shape());
      codes.insert(canonical_code(d, GroupKind::dihedral));
    }
    CHECK(shapes.size() == codes.size());
    CHECK(Count(static_cast<unsigned long>(shapes.size())) == count_cycles(n).orbits);
  }
}

TEST_CASE("round trip preserves the canonical shape (n <= 4)") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& c : list_cycles(n)) {
      const auto back = diagram_to_cycle(cycle_to_diagram(c));
      CHECK(back.cycle.canonical_shape() == c.canonical_shape());
      CHECK(cycle_to_diagram(back.cycle) == cycle_to_diagram(c));
    }
  }
}
