#pragma once

#include <string>
#include <vector>

#include "chordenum/count.hpp"
#include "chordenum/diagram.hpp"
#include "chordenum/kernels.hpp"

// Loopless chord diagrams on 2n points and Hamiltonian cycles of the
// n-dimensional octahedron: place the cycle's vertices around a circle and
// join each antipodal pair by a chord.
namespace chordenum::octahedron {

// Vertices 1..2n; 2i-1 and 2i are antipodal and are the only non-adjacent
// pairs.
class OctahedronGraph {
 public:
  explicit OctahedronGraph(int n);
  int dimension() const { return n_; }
  int vertex_count() const { return 2 * n_; }
  static int antipode(int v) { return v % 2 == 1 ? v + 1 : v - 1; }
  bool adjacent(int u, int v) const;
  int degree(int v) const;

 private:
  int n_;
};

// A Hamiltonian cycle as an undirected vertex cycle, stored starting at
// vertex 1 with the second vertex smaller than the last.
class HamCycle {
 public:
  // Validates the sequence against the graph; throws std::invalid_argument.
  static HamCycle from_sequence(const OctahedronGraph& graph, std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int dimension() const { return static_cast<int>(vertices_.size()) / 2; }
  // Pair indices in order of first appearance, minimised over the 4n
  // rotations and directions. Equal for cycles related by an automorphism.
  std::vector<int> canonical_shape() const;
  std::string to_string() const;

  bool operator==(const HamCycle&) const = default;

 private:
  explicit HamCycle(std::vector<int> vertices) : vertices_(std::move(vertices)) {}
  std::vector<int> vertices_;
};

// Cycle positions become circle points, antipodal pairs become chords.
Diagram cycle_to_diagram(const HamCycle& cycle);

struct Labelled {
  HamCycle cycle;
  // vertex at each circle point, 0-based positions
  std::vector<int> labelling;
};
// Chords are numbered by their smaller endpoint; chord j puts vertex 2j-1
// at its smaller endpoint and 2j at the other one. Rejects diagrams with a
// loop.
Labelled diagram_to_cycle(const Diagram& diagram);

struct Options {
  int cap = 6;
  Execution execution = Execution::parallel;
};

struct CycleCount {
  Count labelled;  // Hamiltonian cycles as edge sets
  Count orbits;    // classes under the graph's automorphisms
};

// Backtracking from vertex 1. Orbits are counted as distinct dihedral
// diagram codes of the cycles' diagrams. Throws std::out_of_range above the cap.
CycleCount count_cycles(int n, const Options& options = {});

// Every Hamiltonian cycle in canonical form, in search order.
std::vector<HamCycle> list_cycles(int n, const Options& options = {});

}  // namespace chordenum::octahedron
