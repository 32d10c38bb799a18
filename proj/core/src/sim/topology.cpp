#include "safetrust/sim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace safetrust::sim {

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Ring: return "ring";
    case TopologyKind::Grid: return "grid";
    case TopologyKind::RandomGeometric: return "random";
  }
  return "?";
}

std::optional<TopologyKind> parse_topology(std::string_view name) {
  if (name == "ring") return TopologyKind::Ring;
  if (name == "grid") return TopologyKind::Grid;
  if (name == "random") return TopologyKind::RandomGeometric;
  return std::nullopt;
}

Topology::Topology(std::vector<std::vector<Address>> adjacency) : adjacency_(std::move(adjacency)) {}

void Topology::link(Address a, Address b) {
  if (a == b || adjacent(a, b)) return;
  auto insert_sorted = [](std::vector<Address>& v, Address x) {
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  };
  insert_sorted(adjacency_[a], b);
  insert_sorted(adjacency_[b], a);
}

Topology Topology::ring(std::size_t n) {
  if (n == 0) throw std::invalid_argument("topology needs at least one mote");
  Topology t{std::vector<std::vector<Address>>(n)};
  for (std::size_t i = 0; n > 1 && i < n; ++i) {
    t.link(static_cast<Address>(i), static_cast<Address>((i + 1) % n));
  }
  return t;
}

Topology Topology::grid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("topology needs at least one mote");
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  Topology t{std::vector<std::vector<Address>>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if ((i % cols) + 1 < cols && i + 1 < n) t.link(static_cast<Address>(i), static_cast<Address>(i + 1));
    if (i + cols < n) t.link(static_cast<Address>(i), static_cast<Address>(i + cols));
  }
  return t;
}

Topology Topology::random_geometric(std::size_t n, double radius, Rng& rng) {
  if (n == 0) throw std::invalid_argument("topology needs at least one mote");
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  std::vector<std::pair<double, double>> pos(n);
  for (auto& p : pos) {
    p.first = rng.uniform01();
    p.second = rng.uniform01();
  }
  Topology t{std::vector<std::vector<Address>>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = pos[i].first - pos[j].first;
      const double dy = pos[i].second - pos[j].second;
      if (dx * dx + dy * dy <= radius * radius) t.link(static_cast<Address>(i), static_cast<Address>(j));
    }
  }
  return t;
}

std::span<const Address> Topology::neighbors(Address a) const {
  if (a >= adjacency_.size()) throw std::out_of_range("address outside topology");
  return adjacency_[a];
}

bool Topology::adjacent(Address a, Address b) const {
  const auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Topology::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& v : adjacency_) degree_sum += v.size();
  return degree_sum / 2;
}

std::optional<std::vector<Address>> Topology::shortest_path(
    Address from, Address to, const std::function<bool(Address)>& usable) const {
  if (from >= size() || to >= size()) throw std::out_of_range("address outside topology");
  if (!usable(from) || !usable(to)) return std::nullopt;
  if (from == to) return std::vector<Address>{from};

  constexpr Address kNone = static_cast<Address>(-1);
  std::vector<Address> parent(size(), kNone);
  parent[from] = from;
  std::deque<Address> queue{from};
  while (!queue.empty()) {
    const Address cur = queue.front();
    queue.pop_front();
    for (Address next : adjacency_[cur]) {
      if (parent[next] != kNone || !usable(next)) continue;
      parent[next] = cur;
      if (next == to) {
        std::vector<Address> path{to};
        for (Address p = to; p != from;) {
          p = parent[p];
          path.push_back(p);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace safetrust::sim
