#include "chordenum/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace chordenum {

namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Topology Topology::sectored(int sectors) {
  if (sectors < 1) throw std::invalid_argument("sectored topology needs at least one sector");
  return Topology(Kind::sectored, sectors);
}

bool Topology::compatible_with(int point_count) const {
  if (kind_ != Kind::sectored) return true;
  return point_count == 0 || point_count % sectors_ == 0;
}

bool Topology::adjacent(int a, int b, int point_count) const {
  if (a > b) std::swap(a, b);
  if (point_count < 2 || a == b) return false;
  // The pair (b, a) with b = a + 1, or the wrap-around pair (2n-1, 0).
  int low;
  if (b == a + 1) {
    low = a;
  } else if (a == 0 && b == point_count - 1) {
    low = b;
  } else {
    return false;
  }
  switch (kind_) {
    case Kind::circular:
      return true;
    case Kind::linear:
      return low != point_count - 1;
    case Kind::sectored: {
      const int m = point_count / sectors_;
      return (low + 1) % m != 0;
    }
  }
  return false;
}

std::string Topology::to_string() const {
  switch (kind_) {
    case Kind::circular:
      return "circular";
    case Kind::linear:
      return "linear";
    case Kind::sectored:
      return "sectored(" + std::to_string(sectors_) + ")";
  }
  return {};
}

Topology Topology::parse(std::string_view text) {
  if (text == "circular") return circular();
  if (text == "linear") return linear();
  constexpr std::string_view prefix = "sectored(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    auto inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    return sectored(parse_int(inner, "sector count"));
  }
  throw std::invalid_argument("unknown topology '" + std::string(text) + "'");
}

Diagram Diagram::from_pairing(std::vector<int> partner, Topology topology) {
  const int points = static_cast<int>(partner.size());
  if (points % 2 != 0) throw std::invalid_argument("diagram needs an even number of points");
  if (!topology.compatible_with(points)) {
    throw std::invalid_argument("sector count does not divide the point count");
  }
  for (int i = 0; i < points; ++i) {
    const int j = partner[static_cast<std::size_t>(i)];
    if (j < 0 || j >= points || j == i || partner[static_cast<std::size_t>(j)] != i) {
      throw std::invalid_argument("pairing is not a fixed-point-free involution at point " +
                                  std::to_string(i + 1));
    }
  }
  return Diagram(std::move(partner), topology);
}

Diagram Diagram::from_chords(int chord_count, const std::vector<std::pair<int, int>>& chords,
                             Topology topology) {
  if (chord_count < 0 || static_cast<int>(chords.size()) != chord_count) {
    throw std::invalid_argument("chord list does not match chord count");
  }
  const int points = 2 * chord_count;
  std::vector<int> partner(static_cast<std::size_t>(points), -1);
  for (auto [a, b] : chords) {
    if (a < 1 || b < 1 || a > points || b > points || a == b) {
      throw std::invalid_argument("chord endpoint out of range");
    }
    auto& pa = partner[static_cast<std::size_t>(a - 1)];
    auto& pb = partner[static_cast<std::size_t>(b - 1)];
    if (pa != -1 || pb != -1) throw std::invalid_argument("point used by two chords");
    pa = b - 1;
    pb = a - 1;
  }
  return from_pairing(std::move(partner), topology);
}

Diagram Diagram::parse(std::string_view text) {
  const auto first = text.find(';');
  const auto second = text.find(';', first == std::string_view::npos ? first : first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos ||
      !text.starts_with("n=")) {
    throw std::invalid_argument("diagram text must look like n=K;topology;1-j1,...");
  }
  const int n = parse_int(text.substr(2, first - 2), "chord count");
  const Topology topology = Topology::parse(text.substr(first + 1, second - first - 1));
  std::vector<std::pair<int, int>> chords;
  std::string_view rest = text.substr(second + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw std::invalid_argument("chord must be a-b");
    chords.emplace_back(parse_int(item.substr(0, dash), "endpoint"),
                        parse_int(item.substr(dash + 1), "endpoint"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return from_chords(n, chords, topology);
}

Diagram Diagram::with_topology(Topology topology) const {
  if (!topology.compatible_with(point_count())) {
    throw std::invalid_argument("sector count does not divide the point count");
  }
  return Diagram(partner_, topology);
}

std::vector<std::pair<int, int>> Diagram::chords() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(chord_count()));
  for (int i = 0; i < point_count(); ++i) {
    if (i < partner(i)) out.emplace_back(i + 1, partner(i) + 1);
  }
  return out;
}

std::string Diagram::to_string() const {
  std::ostringstream out;
  out << "n=" << chord_count() << ';' << topology_.to_string() << ';';
  bool first = true;
  for (auto [a, b] : chords()) {
    if (!first) out << ',';
    out << a << '-' << b;
    first = false;
  }
  return out.str();
}

bool chords_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  const bool c_inside = a < c && c < b;
  const bool d_inside = a < d && d < b;
  return c_inside != d_inside;
}

Classification classify(const Diagram& diagram) {
  return classify(diagram.pairing(), diagram.topology());
}

Classification classify(std::span<const int> pairing, const Topology& topology) {
  const int points = static_cast<int>(pairing.size());
  Classification out;
  for (int a = 0; a < points; ++a) {
    const int b = pairing[static_cast<std::size_t>(a)];
    if (a > b) continue;
    if (topology.adjacent(a, b, points)) ++out.loops;
    for (int c = a + 1; c < points; ++c) {
      const int d = pairing[static_cast<std::size_t>(c)];
      if (c > d || c == b) continue;
      if (chords_cross(a, b, c, d)) continue;
      const bool straight = topology.adjacent(a, c, points) && topology.adjacent(b, d, points);
      const bool twisted = topology.adjacent(a, d, points) && topology.adjacent(b, c, points);
      if (straight || twisted) ++out.parallel_pairs;
    }
  }
  return out;
}

int GroupElement::apply(int point, int point_count) const {
  return reflect ? mod(shift - point, point_count) : mod(point + shift, point_count);
}

std::string GroupElement::to_string() const {
  if (!reflect) return "rot" + std::to_string(shift);
  return (vertex_axis() ? "vref" : "eref") + std::to_string(shift);
}

std::vector<GroupElement> group_elements(GroupKind kind, int point_count) {
  std::vector<GroupElement> out;
  const int order = std::max(point_count, 1);
  for (int s = 0; s < order; ++s) out.push_back({s, false});
  if (kind == GroupKind::dihedral) {
    for (int s = 0; s < order; ++s) out.push_back({s, true});
  }
  return out;
}

Diagram act(const Diagram& diagram, GroupElement element) {
  if (diagram.topology().kind() != Topology::Kind::circular) {
    throw std::invalid_argument("group actions are defined on circular diagrams only");
  }
  const int points = diagram.point_count();
  std::vector<int> image(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    image[static_cast<std::size_t>(element.apply(i, points))] =
        element.apply(diagram.partner(i), points);
  }
  return Diagram::from_pairing(std::move(image), diagram.topology());
}

bool is_fixed_by(std::span<const int> pairing, GroupElement element) {
  const int points = static_cast<int>(pairing.size());
  for (int i = 0; i < points; ++i) {
    const int gi = element.apply(i, points);
    if (pairing[static_cast<std::size_t>(gi)] !=
        element.apply(pairing[static_cast<std::size_t>(i)], points)) {
      return false;
    }
  }
  return true;
}

std::vector<int> offset_code(std::span<const int> pairing) {
  const int points = static_cast<int>(pairing.size());
  std::vector<int> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = mod(pairing[static_cast<std::size_t>(i)] - i, points);
  }
  return out;
}

std::vector<int> canonical_code(const Diagram& diagram, GroupKind kind) {
  if (diagram.topology().kind() != Topology::Kind::circular) {
    throw std::invalid_argument("canonical codes are defined on circular diagrams only");
  }
  return canonical_code(diagram.pairing(), kind);
}

std::vector<int> canonical_code(std::span<const int> pairing, GroupKind kind) {
  const int points = static_cast<int>(pairing.size());
  std::vector<int> best = offset_code(pairing);
  std::vector<int> candidate(static_cast<std::size_t>(points));
  for (const GroupElement g : group_elements(kind, points)) {
    // Image pairing p' = g p g^-1; g^-1 is g itself for reflections.
    for (int j = 0; j < points; ++j) {
      const int pre = g.reflect ? g.apply(j, points) : mod(j - g.shift, points);
      const int image = g.apply(pairing[static_cast<std::size_t>(pre)], points);
      candidate[static_cast<std::size_t>(j)] = mod(image - j, points);
    }
    if (candidate < best) best = candidate;
  }
  return best;
}

std::vector<Diagram> all_matchings(int n, Topology topology) {
  std::vector<Diagram> out;
  for_each_matching(n, [&](std::span<const int> pairing) {
    out.push_back(Diagram::from_pairing(std::vector<int>(pairing.begin(), pairing.end()), topology));
  });
  return out;
}

}  // namespace chordenum
