#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bipint/graph.hpp"

namespace bipint {

// Which internal links the deletion process may remove.
enum class Eligibility {
  All,       // every side-internal link
  Filtered,  // side-internal links whose endpoints both have degree >= 2 in the current graph
};

std::string_view to_string(Eligibility e) noexcept;
std::optional<Eligibility> parse_eligibility(std::string_view text) noexcept;

struct TrajectoryPoint {
  std::size_t removals = 0;
  std::size_t remaining_internal = 0;

  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct PruneTrajectory {
  Side side = Side::Bottom;
  std::size_t initial_internal = 0;
  std::vector<TrajectoryPoint> points;  // points[0] = (0, initial_internal)
  std::vector<Edge> removed_edges;      // in removal order
  std::uint64_t seed = 0;
  Eligibility eligibility = Eligibility::All;
};

struct PruneResult {
  BipartiteGraph pruned_graph;
  PruneTrajectory trajectory;
  double compression_ratio = 1.0;  // pruned |E| / original |E|
  std::size_t original_bytes = 0;  // canonical serialization sizes
  std::size_t pruned_bytes = 0;
  double byte_ratio = 1.0;
};

// Invoked after every removal with the current graph, the removed link and
// the updated eligible set (unordered).
using PruneObserver = std::function<void(const BipartiteGraph&, const Edge&, std::span<const Edge>)>;

bool is_eligible(const BipartiteGraph& g, const Edge& e, Side side, Eligibility policy);

// Full enumeration of eligible internal links, canonical order.
std::vector<Edge> eligible_links(const BipartiteGraph& g, Side side, Eligibility policy);

// Links whose internal status may differ after `removed` was deleted from
// `g` (g is the post-removal graph): every link touching u, v, N(u) or N(v).
// Canonical order.
std::vector<Edge> affected_links(const BipartiteGraph& g, const Edge& removed, Side side);

// Random deletion: repeatedly remove a uniformly drawn eligible internal link
// until none remains.
PruneResult prune_random(const BipartiteGraph& g, Side side, std::uint64_t seed, Eligibility policy,
                         const PruneObserver& observer = {});

// TSV "removals, remaining_internal, upper_bound", one row per point.
void write_trajectory(const PruneTrajectory& t, std::ostream& out);

}  // namespace bipint
