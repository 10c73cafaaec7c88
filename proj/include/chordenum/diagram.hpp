#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chordenum {

// How neighbouring points are related. A circular diagram has every
// (i, i+1 mod 2n) adjacent; a linear one is cut between 2n and 1; a
// sectored(d) one is cut after every multiple of m = 2n/d, including the
// seam (2n, 1), so sectored(1) coincides with linear.
class Topology {
 public:
  enum class Kind { circular, linear, sectored };

  static Topology circular() { return Topology(Kind::circular, 1); }
  static Topology linear() { return Topology(Kind::linear, 1); }
  static Topology sectored(int sectors);

  Kind kind() const { return kind_; }
  int sectors() const { return sectors_; }

  // Whether points a and b (0-based, distinct) are neighbours on `point_count` points.
  bool adjacent(int a, int b, int point_count) const;
  bool compatible_with(int point_count) const;

  std::string to_string() const;
  static Topology parse(std::string_view text);

  bool operator==(const Topology&) const = default;

 private:
  Topology(Kind kind, int sectors) : kind_(kind), sectors_(sectors) {}
  Kind kind_;
  int sectors_;
};

// A perfect matching on 2n points, stored 0-based as a fixed-point-free
// involution. The text form and chord lists are 1-based.
class Diagram {
 public:
  Diagram() : topology_(Topology::circular()) {}

  // Validates that `partner` is a fixed-point-free involution.
  static Diagram from_pairing(std::vector<int> partner, Topology topology = Topology::circular());
  // Chords as 1-based endpoint pairs.
  static Diagram from_chords(int chord_count, const std::vector<std::pair<int, int>>& chords,
                             Topology topology = Topology::circular());
  // Parses "n=K;topology;1-j1,2-j2,...".
  static Diagram parse(std::string_view text);

  int point_count() const { return static_cast<int>(partner_.size()); }
  int chord_count() const { return point_count() / 2; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  std::span<const int> pairing() const { return partner_; }
  const Topology& topology() const { return topology_; }

  Diagram with_topology(Topology topology) const;

  // 1-based chords, smaller endpoint first, sorted by smaller endpoint.
  std::vector<std::pair<int, int>> chords() const;
  std::string to_string() const;

  bool operator==(const Diagram&) const = default;

 private:
  Diagram(std::vector<int> partner, Topology topology)
      : partner_(std::move(partner)), topology_(topology) {}
  std::vector<int> partner_;
  Topology topology_;
};

struct Classification {
  int loops = 0;
  int parallel_pairs = 0;

  auto operator<=>(const Classification&) const = default;
};

// Whether chords {a,b} and {c,d} interleave on the underlying circle.
bool chords_cross(int a, int b, int c, int d);

Classification classify(const Diagram& diagram);
Classification classify(std::span<const int> pairing, const Topology& topology);

enum class GroupKind { cyclic, dihedral };

// 0-based action on 2n points: i -> i + shift, or i -> shift - i when
// reflecting. A reflection with even shift has its axis through two points
// (vertex axis); odd shift puts the axis through two arc midpoints (edge axis).
struct GroupElement {
  int shift = 0;
  bool reflect = false;

  int apply(int point, int point_count) const;
  bool vertex_axis() const { return reflect && shift % 2 == 0; }
  std::string to_string() const;

  auto operator<=>(const GroupElement&) const = default;
};

std::vector<GroupElement> group_elements(GroupKind kind, int point_count);

// Relabels points of a circular diagram by `element`.
Diagram act(const Diagram& diagram, GroupElement element);

bool is_fixed_by(std::span<const int> pairing, GroupElement element);

// o_i = (partner(i) - i) mod 2n.
std::vector<int> offset_code(std::span<const int> pairing);

// Lexicographically least offset code over the group orbit.
std::vector<int> canonical_code(const Diagram& diagram, GroupKind kind);
std::vector<int> canonical_code(std::span<const int> pairing, GroupKind kind);

// Visits every perfect matching on 2n points exactly once, in a fixed
// order: the smallest free point is paired with ascending partners.
// The visitor receives the 0-based partner array.
template <typename Visitor>
void for_each_matching_in_branch(int n, int first_partner, Visitor&& visit) {
  const int points = 2 * n;
  std::vector<int> partner(static_cast<std::size_t>(points), -1);
  auto recurse = [&](auto&& self, int from) -> void {
    int i = from;
    while (i < points && partner[static_cast<std::size_t>(i)] != -1) ++i;
    if (i == points) {
      visit(std::span<const int>(partner));
      return;
    }
    for (int j = i + 1; j < points; ++j) {
      if (partner[static_cast<std::size_t>(j)] != -1) continue;
      partner[static_cast<std::size_t>(i)] = j;
      partner[static_cast<std::size_t>(j)] = i;
      self(self, i + 1);
      partner[static_cast<std::size_t>(i)] = -1;
      partner[static_cast<std::size_t>(j)] = -1;
    }
  };
  if (points == 0) {
    visit(std::span<const int>(partner));
    return;
  }
  partner[0] = first_partner;
  partner[static_cast<std::size_t>(first_partner)] = 0;
  recurse(recurse, 1);
}

template <typename Visitor>
void for_each_matching(int n, Visitor&& visit) {
  if (n == 0) {
    std::vector<int> empty;
    visit(std::span<const int>(empty));
    return;
  }
  for (int j = 1; j < 2 * n; ++j) for_each_matching_in_branch(n, j, visit);
}

std::vector<Diagram> all_matchings(int n, Topology topology = Topology::circular());

}  // namespace chordenum
