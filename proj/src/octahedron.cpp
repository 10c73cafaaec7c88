#include "chordenum/octahedron.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace chordenum::octahedron {

namespace {

void check_cap(int n, const Options& options) {
  if (n < 1) throw std::out_of_range("dimension must be at least 1");
  if (n > options.cap || n > 7) {
    throw std::out_of_range("cycle enumeration refuses n=" + std::to_string(n) + " above cap " +
                            std::to_string(std::min(options.cap, 7)));
  }
}

std::vector<int> orient(std::vector<int> cycle) {
  const auto start = std::find(cycle.begin(), cycle.end(), 1);
  std::rotate(cycle.begin(), start, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

// Depth-first extension of a path that starts at vertex 1 and whose second
// vertex is `second`. Calls visit(path) for every closing path with
// path[1] < path.back().
template <typename Visit>
void extend(const OctahedronGraph& g, std::vector<int>& path, std::uint32_t used, Visit& visit) {
  const int size = g.vertex_count();
  const int last = path.back();
  if (static_cast<int>(path.size()) == size) {
    if (g.adjacent(last, 1) && path[1] < last) visit(path);
    return;
  }
  for (int v = 2; v <= size; ++v) {
    if ((used >> v) & 1U) continue;
    if (!g.adjacent(last, v)) continue;
    path.push_back(v);
    extend(g, path, used | (1U << v), visit);
    path.pop_back();
  }
}

template <typename Visit>
void for_each_cycle_from(const OctahedronGraph& g, int second, Visit& visit) {
  if (!g.adjacent(1, second)) return;
  std::vector<int> path = {1, second};
  path.reserve(static_cast<std::size_t>(g.vertex_count()));
  extend(g, path, (1U << 1) | (1U << second), visit);
}

std::uint64_t pack(std::span<const int> pairing) {
  std::uint64_t key = 0;
  for (int p : pairing) key = (key << 4) | static_cast<std::uint64_t>(p);
  return key;
}

std::vector<int> pairing_of(const std::vector<int>& cycle) {
  const int size = static_cast<int>(cycle.size());
  std::vector<int> position(static_cast<std::size_t>(size) + 1);
  for (int i = 0; i < size; ++i) position[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = i;
  std::vector<int> pairing(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    pairing[static_cast<std::size_t>(i)] =
        position[static_cast<std::size_t>(OctahedronGraph::antipode(cycle[static_cast<std::size_t>(i)]))];
  }
  return pairing;
}

struct BranchResult {
  std::uint64_t cycles = 0;
  std::unordered_set<std::uint64_t> diagrams;
  std::vector<std::vector<int>> pairings;
};

}  // namespace

OctahedronGraph::OctahedronGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
}

bool OctahedronGraph::adjacent(int u, int v) const {
  const int size = vertex_count();
  if (u < 1 || v < 1 || u > size || v > size) throw std::out_of_range("vertex out of range");
  return u != v && antipode(u) != v;
}

int OctahedronGraph::degree(int v) const {
  int d = 0;
  for (int u = 1; u <= vertex_count(); ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

HamCycle HamCycle::from_sequence(const OctahedronGraph& graph, std::vector<int> vertices) {
  const int size = graph.vertex_count();
  if (static_cast<int>(vertices.size()) != size) throw std::invalid_argument("cycle must visit every vertex");
  std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
  for (int v : vertices) {
    if (v < 1 || v > size || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("cycle repeats or leaves the graph");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < size; ++i) {
    if (!graph.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>((i + 1) % size)])) {
      throw std::invalid_argument("consecutive vertices are antipodal");
    }
  }
  return HamCycle(orient(std::move(vertices)));
}

std::vector<int> HamCycle::canonical_shape() const {
  const int size = static_cast<int>(vertices_.size());
  std::vector<int> best;
  std::vector<int> pair_id(static_cast<std::size_t>(size) / 2 + 1);
  for (int start = 0; start < size; ++start) {
    for (int step : {1, -1}) {
      std::fill(pair_id.begin(), pair_id.end(), -1);
      int next_id = 0;
      std::vector<int> shape;
      shape.reserve(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) {
        const int v = vertices_[static_cast<std::size_t>(((start + step * i) % size + size) % size)];
        int& id = pair_id[static_cast<std::size_t>((v + 1) / 2)];
        if (id < 0) id = next_id++;
        shape.push_back(id);
      }
      if (best.empty() || shape < best) best = std::move(shape);
    }
  }
  return best;
}

std::string HamCycle::to_string() const {
  std::string out;
  for (int v : vertices_) out += (out.empty() ? "" : "-") + std::to_string(v);
  return out;
}

Diagram cycle_to_diagram(const HamCycle& cycle) { return Diagram::from_pairing(pairing_of(cycle.vertices())); }

Labelled diagram_to_cycle(const Diagram& diagram) {
  const Diagram circular = diagram.with_topology(Topology::circular());
  if (classify(circular).loops > 0) throw std::invalid_argument("a diagram with a loop has no octahedron cycle");
  const int size = circular.point_count();
  if (size < 4) throw std::invalid_argument("need at least two chords");
  std::vector<int> labelling(static_cast<std::size_t>(size), 0);
  int chord = 0;
  for (int i = 0; i < size; ++i) {
    const int j = circular.partner(i);
    if (i < j) {
      ++chord;
      labelling[static_cast<std::size_t>(i)] = 2 * chord - 1;
      labelling[static_cast<std::size_t>(j)] = 2 * chord;
    }
  }
  const OctahedronGraph graph(size / 2);
  return {HamCycle::from_sequence(graph, labelling), labelling};
}

CycleCount count_cycles(int n, const Options& options) {
  check_cap(n, options);
  const OctahedronGraph g(n);
  const int size = g.vertex_count();
  std::vector<BranchResult> branches(static_cast<std::size_t>(size) + 1);
  auto run = [&](int second) {
    BranchResult& r = branches[static_cast<std::size_t>(second)];
    auto visit = [&](const std::vector<int>& path) {
      ++r.cycles;
      const auto pairing = pairing_of(path);
      if (r.diagrams.insert(pack(pairing)).second) r.pairings.push_back(pairing);
    };
    for_each_cycle_from(g, second, visit);
  };
  if (options.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int second = 2; second <= size; ++second) run(second);
  } else {
    for (int second = 2; second <= size; ++second) run(second);
  }
  std::uint64_t cycles = 0;
  std::unordered_set<std::uint64_t> seen;
  std::set<std::vector<int>> codes;
  for (const auto& r : branches) {
    cycles += r.cycles;
    for (const auto& pairing : r.pairings) {
      if (seen.insert(pack(pairing)).second) codes.insert(canonical_code(pairing, GroupKind::dihedral));
    }
  }
  return {Count(static_cast<unsigned long>(cycles)), Count(static_cast<unsigned long>(codes.size()))};
}

std::vector<HamCycle> list_cycles(int n, const Options& options) {
  check_cap(n, options);
  const OctahedronGraph g(n);
  std::vector<HamCycle> out;
  auto visit = [&](const std::vector<int>& path) { out.push_back(HamCycle::from_sequence(g, path)); };
  for (int second = 2; second <= g.vertex_count(); ++second) for_each_cycle_from(g, second, visit);
  return out;
}

}  // namespace chordenum::octahedron
