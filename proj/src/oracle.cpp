#include "chordenum/oracle.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>

namespace chordenum::oracle {

namespace {

template <typename Key>
struct Histogram {
  std::map<Key, std::uint64_t> counts;

  void add(const Key& key) { ++counts[key]; }
  Histogram& operator+=(const Histogram& other) {
    for (const auto& [key, value] : other.counts) counts[key] += value;
    return *this;
  }
  std::map<Key, Count> to_counts() const {
    std::map<Key, Count> out;
    for (const auto& [key, value] : counts) out[key] = Count(static_cast<unsigned long>(value));
    return out;
  }
};

Count to_count(std::uint64_t value) { return Count(static_cast<unsigned long>(value)); }

struct OrbitAccumulator {
  std::vector<std::uint64_t> fixed;
  std::uint64_t representatives = 0;
  std::set<std::vector<int>> codes;

  OrbitAccumulator& operator+=(const OrbitAccumulator& other) {
    if (fixed.size() < other.fixed.size()) fixed.resize(other.fixed.size(), 0);
    for (std::size_t i = 0; i < other.fixed.size(); ++i) fixed[i] += other.fixed[i];
    representatives += other.representatives;
    codes.insert(other.codes.begin(), other.codes.end());
    return *this;
  }
};

}  // namespace

bool admits(Family family, const Classification& c) {
  switch (family) {
    case Family::all:
      return true;
    case Family::loopless:
      return c.loops == 0;
    case Family::simple:
      return c.loops == 0 && c.parallel_pairs == 0;
  }
  return false;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::all:
      return "all";
    case Family::loopless:
      return "loopless";
    case Family::simple:
      return "simple";
  }
  return {};
}

Family parse_family(const std::string& text) {
  if (text == "all") return Family::all;
  if (text == "loopless") return Family::loopless;
  if (text == "simple") return Family::simple;
  throw std::invalid_argument("unknown family '" + text + "'");
}

void check_cap(int n, const Options& options) {
  if (n < 0) throw std::out_of_range("chord count must be non-negative");
  if (n > options.cap) {
    throw std::out_of_range("oracle refuses n=" + std::to_string(n) + " above cap " +
                            std::to_string(options.cap));
  }
}

Count count_labelled(int n, const Topology& topology, Family family, const Options& options) {
  check_cap(n, options);
  if (!topology.compatible_with(2 * n)) throw std::invalid_argument("sector count must divide 2n");
  auto total = fold_matchings<std::uint64_t>(n, options.execution,
                                             [&](std::uint64_t& acc, std::span<const int> p) {
                                               if (admits(family, classify(p, topology))) ++acc;
                                             });
  return to_count(total);
}

std::map<std::pair<int, int>, Count> classify_table(int c, const Topology& topology,
                                                    const Options& options) {
  check_cap(c, options);
  if (!topology.compatible_with(2 * c)) throw std::invalid_argument("sector count must divide 2c");
  using Key = std::pair<int, int>;
  auto hist = fold_matchings<Histogram<Key>>(c, options.execution,
                                             [&](Histogram<Key>& acc, std::span<const int> p) {
                                               const auto cls = classify(p, topology);
                                               acc.add({cls.loops, cls.parallel_pairs});
                                             });
  return hist.to_counts();
}

Count count_fixed_by(int n, GroupElement element, Family family, const Options& options) {
  check_cap(n, options);
  const Topology circular = Topology::circular();
  auto total = fold_matchings<std::uint64_t>(n, options.execution,
                                             [&](std::uint64_t& acc, std::span<const int> p) {
                                               if (is_fixed_by(p, element) &&
                                                   admits(family, classify(p, circular))) {
                                                 ++acc;
                                               }
                                             });
  return to_count(total);
}

Count count_rotation_fixed(int n, int d, Family family, const Options& options) {
  if (d < 1 || (n > 0 && (2 * n) % d != 0) || (n == 0 && d != 1)) {
    throw std::invalid_argument("rotation order d must divide 2n");
  }
  const int shift = n == 0 ? 0 : (2 * n) / d;
  return count_fixed_by(n, GroupElement{shift % std::max(2 * n, 1), false}, family, options);
}

Count count_reflection_fixed(int n, Axis axis, Family family, const Options& options) {
  const int points = std::max(2 * n, 1);
  const GroupElement element{axis == Axis::vertex ? 0 : points - 1, true};
  return count_fixed_by(n, element, family, options);
}

Count OrbitReport::fixed_total() const {
  Count total = 0;
  for (const auto& [element, value] : fixed_counts) total += value;
  return total;
}

bool OrbitReport::burnside_consistent() const {
  return orbit_count * static_cast<unsigned long>(group_order()) == fixed_total() &&
         burnside_orbit_count == orbit_count;
}

OrbitReport count_orbits(int n, GroupKind group, Family family, const Options& options) {
  check_cap(n, options);
  const int points = 2 * n;
  const auto elements = group_elements(group, points);
  const Topology circular = Topology::circular();
  const bool serial = options.execution == Execution::serial;

  // The serial reference collects distinct canonical codes; the parallel
  // kernel counts diagrams that are their own orbit representative.
  auto acc = fold_matchings<OrbitAccumulator>(
      n, options.execution, [&](OrbitAccumulator& a, std::span<const int> p) {
        if (!admits(family, classify(p, circular))) return;
        if (a.fixed.empty()) a.fixed.assign(elements.size(), 0);
        for (std::size_t i = 0; i < elements.size(); ++i) {
          if (is_fixed_by(p, elements[i])) ++a.fixed[i];
        }
        auto code = canonical_code(p, group);
        if (serial) {
          a.codes.insert(std::move(code));
        } else if (code == offset_code(p)) {
          ++a.representatives;
        }
      });

  OrbitReport report;
  report.n = n;
  report.group = group;
  report.family = family;
  acc.fixed.resize(elements.size(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    report.fixed_counts.emplace_back(elements[i], to_count(acc.fixed[i]));
  }
  report.orbit_count = serial ? to_count(acc.codes.size()) : to_count(acc.representatives);
  const Count total = report.fixed_total();
  const auto order = static_cast<unsigned long>(elements.size());
  if (total % order != 0) throw std::logic_error("Burnside sum not divisible by group order");
  report.burnside_orbit_count = total / order;
  return report;
}

std::map<int, Count> sectored_symmetric_table(int n, int d, Family family, const Options& options) {
  check_cap(n, options);
  const int points = 2 * n;
  if (d < 1 || (points > 0 && points % d != 0)) throw std::invalid_argument("d must divide 2n");
  const Topology topology = points == 0 ? Topology::linear() : Topology::sectored(d);
  const GroupElement rotation{points == 0 ? 0 : points / d, false};
  auto hist = fold_matchings<Histogram<int>>(
      n, options.execution, [&](Histogram<int>& acc, std::span<const int> p) {
        if (!is_fixed_by(p, rotation) || !admits(family, classify(p, topology))) return;
        int diameters = 0;
        for (int i = 0; i < n; ++i) {
          if (p[static_cast<std::size_t>(i)] == i + n) ++diameters;
        }
        acc.add(diameters);
      });
  return hist.to_counts();
}

MirrorTable mirror_table(int n, const Options& options) {
  check_cap(n, options);
  const int points = 2 * n;
  const Topology topology = points == 0 ? Topology::linear() : Topology::sectored(2);
  const GroupElement mirror{points - 1, true};
  using Key = std::pair<bool, int>;
  auto hist = fold_matchings<Histogram<Key>>(
      n, options.execution, [&](Histogram<Key>& acc, std::span<const int> p) {
        if (points > 0 && !is_fixed_by(p, mirror)) return;
        if (!admits(Family::simple, classify(p, topology))) return;
        int self = 0;
        for (int i = 0; i < n; ++i) {
          if (p[static_cast<std::size_t>(i)] == points - 1 - i) ++self;
        }
        acc.add({points > 0 && p[0] == points - 1, self});
      });
  MirrorTable out;
  for (const auto& [key, value] : hist.to_counts()) {
    out.all[key.second] += value;
    if (key.first) out.with_outer_chord[key.second] += value;
  }
  return out;
}

}  // namespace chordenum::oracle
