#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordenum/count.hpp"
#include "chordenum/diagram.hpp"
#include "chordenum/kernels.hpp"

// Brute-force ground truth. Everything here walks the full matching stream
// and tests the defining predicates directly; none of it knows about the
// recurrences it is used to check.
namespace chordenum::oracle {

enum class Family { all, loopless, simple };

bool admits(Family family, const Classification& c);
std::string to_string(Family family);
Family parse_family(const std::string& text);

enum class Axis { vertex, edge };

struct Options {
  int cap = 9;  // largest chord count the oracle will enumerate
  Execution execution = Execution::parallel;
};

// Throws std::out_of_range when n is negative or above the cap.
void check_cap(int n, const Options& options);

Count count_labelled(int n, const Topology& topology, Family family, const Options& options = {});

// Distribution of (loops, parallel pairs) over all matchings with c chords.
std::map<std::pair<int, int>, Count> classify_table(int c, const Topology& topology,
                                                    const Options& options = {});

// Circular family diagrams fixed by the rotation i -> i + 2n/d.
Count count_rotation_fixed(int n, int d, Family family, const Options& options = {});

// Circular family diagrams fixed by the representative reflection of the
// axis type: i -> -i (through points 1 and n+1) or i -> 2n-1-i (through
// the midpoints of arcs (2n,1) and (n,n+1)).
Count count_reflection_fixed(int n, Axis axis, Family family, const Options& options = {});
// Same count for an arbitrary reflection.
Count count_fixed_by(int n, GroupElement element, Family family, const Options& options = {});

struct OrbitReport {
  int n = 0;
  GroupKind group = GroupKind::cyclic;
  Family family = Family::all;
  Count orbit_count;             // distinct canonical codes
  Count burnside_orbit_count;    // (1/|G|) * sum of fixed counts
  std::vector<std::pair<GroupElement, Count>> fixed_counts;

  std::size_t group_order() const { return fixed_counts.size(); }
  Count fixed_total() const;
  // orbit_count * |G| == sum of fixed counts.
  bool burnside_consistent() const;
};

OrbitReport count_orbits(int n, GroupKind group, Family family, const Options& options = {});

// d-symmetric sectored diagrams on 2n points: invariant under i -> i + 2n/d,
// with sectored(d) adjacency, keyed by the number of diameters.
std::map<int, Count> sectored_symmetric_table(int n, int d, Family family, const Options& options = {});

// Simple diagrams on 2n points cut at (2n,1) and (n,n+1) that are fixed by
// i -> 2n-1-i, keyed by the number of chords mapped to themselves.
struct MirrorTable {
  std::map<int, Count> all;
  std::map<int, Count> with_outer_chord;  // those containing chord {1, 2n}
};
MirrorTable mirror_table(int n, const Options& options = {});

}  // namespace chordenum::oracle
