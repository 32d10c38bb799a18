#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "safetrust/rng.hpp"
#include "safetrust/rwp.hpp"

namespace safetrust::sim {

using rwp::Address;

enum class TopologyKind { Ring, Grid, RandomGeometric };

std::string_view to_string(TopologyKind kind);
std::optional<TopologyKind> parse_topology(std::string_view name);

/// Undirected, static connectivity over addresses 0..n-1. Neighbour lists
/// are sorted ascending.
class Topology {
 public:
  static Topology ring(std::size_t n);
  /// Row-major grid ceil(sqrt(n)) columns wide; the last row may be short.
  static Topology grid(std::size_t n);
  /// Points uniform in the unit square, linked when within `radius`.
  static Topology random_geometric(std::size_t n, double radius, Rng& rng);

  std::size_t size() const { return adjacency_.size(); }
  std::span<const Address> neighbors(Address a) const;
  bool adjacent(Address a, Address b) const;
  std::size_t edge_count() const;

  /// Fewest-hop path from `from` to `to` through nodes passing `usable`
  /// (both endpoints included). Ties resolve toward lower addresses.
  std::optional<std::vector<Address>> shortest_path(Address from, Address to,
                                                    const std::function<bool(Address)>& usable) const;

 private:
  explicit Topology(std::vector<std::vector<Address>> adjacency);
  void link(Address a, Address b);

  std::vector<std::vector<Address>> adjacency_;
};

}  // namespace safetrust::sim
