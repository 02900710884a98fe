#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bipint/graph.hpp"

namespace bipint {

// Internal links and pairs relative to one projection side.
//
// For side = Bottom, a link (u, v) with u ∈ ⊥, v ∈ ⊤ is ⊥-internal when
// removing it leaves the ⊥-projection unchanged, and a non-adjacent pair is
// ⊥-internal when adding it leaves the ⊥-projection unchanged. Top is dual:
// the roles of the endpoints swap and the ⊤-projection is compared.
//
// Edge arguments are always (bottom, top); the side selects the roles.

struct InternalLinkSet {
  Side side = Side::Bottom;
  std::vector<Edge> links;  // canonical order
  bool filtered = false;
  std::size_t analyzed_links = 0;  // links that passed the filter (all links when unfiltered)
};

struct PairOptions {
  // Both endpoints of a candidate pair must have degree >= 2.
  bool apply_degree_filter = true;
  // Count pairs whose opposite-side endpoint has degree 0. Such pairs are
  // vacuously internal.
  bool count_isolated = false;
};

struct PairEstimate {
  double mean = 0.0;
  double half_width = 0.0;  // 95% normal-approximation interval
};

struct InternalPairCount {
  Side side = Side::Bottom;
  std::optional<std::uint64_t> exact_count;
  std::optional<PairEstimate> estimate;
  std::optional<std::uint64_t> sample_size;
  std::uint64_t candidate_pairs = 0;  // non-edges in the counted population

  double value() const noexcept {
    return exact_count ? static_cast<double>(*exact_count) : estimate ? estimate->mean : 0.0;
  }
};

struct NodeStats {
  NodeId node;
  std::size_t degree = 0;           // |N(u)| in the graph
  std::size_t analyzed_degree = 0;  // incident links passing the degree filter
  std::size_t internal_degree = 0;  // incident side-internal links among the analyzed ones
  std::optional<double> internal_fraction;  // internal / analyzed, absent when nothing analyzed
  std::optional<double> redundancy;         // absent when degree < 2
};

// Both endpoints have degree >= 2.
bool passes_degree_filter(const BipartiteGraph& g, const Edge& e);

// Neighborhood-inclusion test N(v)∖{u} ⊆ N(N(u)∖{v}), evaluated without a
// projection. Throws NotFoundError if `e` is not a link.
bool is_internal_link(const BipartiteGraph& g, const Edge& e, Side side);
bool is_internal_link(const BipartiteGraph& g, NodeId u, NodeId v, Side side);

// Ground truth: removes the link on a copy and compares materialized projections.
bool is_internal_link_oracle(const BipartiteGraph& g, const Edge& e, Side side);
bool is_internal_link_oracle(const BipartiteGraph& g, NodeId u, NodeId v, Side side);

// Adding (u, v) creates exactly the projection edges (u, x), x ∈ N(v), that
// are missing, so the pair is internal iff every x ∈ N(v) already shares a
// neighbor with u. Throws DuplicateError if `e` is already a link.
bool is_internal_pair(const BipartiteGraph& g, const Edge& e, Side side);
bool is_internal_pair(const BipartiteGraph& g, NodeId u, NodeId v, Side side);

bool is_internal_pair_oracle(const BipartiteGraph& g, const Edge& e, Side side);

InternalLinkSet enumerate_internal_links(const BipartiteGraph& g, Side side, bool apply_degree_filter);

InternalPairCount count_internal_pairs_exact(const BipartiteGraph& g, Side side, PairOptions options = {});

// Uniform sampling of candidate non-edges. When `sample_size` covers the whole
// population the pairs are enumerated instead and the half-width is 0.
// Throws NoNonEdgesError when the population is empty.
InternalPairCount estimate_internal_pairs(const BipartiteGraph& g, Side side, std::uint64_t sample_size,
                                          std::uint64_t seed, PairOptions options = {});

// Stats for every node of `side`, followed by every opposite-side node that
// has at least one analyzed link.
std::vector<NodeStats> node_stats(const BipartiteGraph& g, Side side, bool apply_degree_filter);

// Fraction of pairs in N(v) still linked in the projection once v is removed.
std::optional<double> redundancy(const BipartiteGraph& g, NodeId v);

}  // namespace bipint
