#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bipint {

enum class Side : std::uint8_t { Bottom = 0, Top = 1 };

constexpr Side opposite(Side s) noexcept {
  return s == Side::Bottom ? Side::Top : Side::Bottom;
}

constexpr std::size_t slot(Side s) noexcept { return static_cast<std::size_t>(s); }

std::string_view to_string(Side s) noexcept;
std::optional<Side> parse_side(std::string_view text) noexcept;

using Index = std::uint32_t;

struct NodeId {
  Side side = Side::Bottom;
  Index index = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

// A link of E ⊆ ⊥ × ⊤, always stored bottom-first. Ordering is the canonical
// (bottom index, top index) order used for enumeration and serialization.
struct Edge {
  Index bottom = 0;
  Index top = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Endpoint of `e` on side `s`.
constexpr Index endpoint(const Edge& e, Side s) noexcept {
  return s == Side::Bottom ? e.bottom : e.top;
}

constexpr std::uint64_t edge_key(const Edge& e) noexcept {
  return (static_cast<std::uint64_t>(e.bottom) << 32) | e.top;
}

// Order on node labels used to assign dense ids: all-digit labels first in
// numeric order, then everything else byte-lexicographically. A graph whose
// ids follow this order serializes and reloads to the same ids.
bool label_less(std::string_view a, std::string_view b) noexcept;

// Bipartite graph G = (⊥, ⊤, E) with sorted adjacency in both directions and
// a string label per node. Equality compares structure only, not labels.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t bottom_count, std::size_t top_count);

  std::size_t bottom_count() const noexcept { return adj_[0].size(); }
  std::size_t top_count() const noexcept { return adj_[1].size(); }
  std::size_t node_count(Side s) const noexcept { return adj_[slot(s)].size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool contains(NodeId u) const noexcept { return u.index < node_count(u.side); }

  // N(u) as opposite-side indices, ascending. Throws RangeError.
  std::span<const Index> neighbors(Side s, Index i) const;
  std::vector<NodeId> neighbors(NodeId u) const;

  std::size_t degree(Side s, Index i) const { return neighbors(s, i).size(); }

  bool has_edge(const Edge& e) const;

  // Throws DuplicateError if present, RangeError on bad ids.
  void add_link(const Edge& e);
  // Throws NotFoundError if absent, RangeError on bad ids.
  void remove_link(const Edge& e);

  // NodeId forms accept the two endpoints in either order but require one
  // bottom and one top node.
  void add_link(NodeId u, NodeId v);
  void remove_link(NodeId u, NodeId v);

  // Appends a node; an empty label defaults to the decimal index.
  Index add_node(Side s, std::string label = {});

  const std::string& label(Side s, Index i) const;
  void set_label(Side s, Index i, std::string label);

  // All links in canonical order.
  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.edge_count_ == b.edge_count_ && a.adj_ == b.adj_;
  }

 private:
  void check(Side s, Index i) const;

  std::array<std::vector<std::vector<Index>>, 2> adj_;
  std::array<std::vector<std::string>, 2> labels_;
  std::size_t edge_count_ = 0;
};

// Edge from two node ids given in either order. Throws RangeError when both
// are on the same side.
Edge make_edge(NodeId u, NodeId v);

// N(S) = ∪_{v∈S} N(v) for nodes S all on side `s`; ascending opposite-side ids.
std::vector<Index> neighborhood(const BipartiteGraph& g, Side s, std::span<const Index> nodes);

// Does some node other than `excluded` lie in both sorted lists?
bool shares_element_except(std::span<const Index> a, std::span<const Index> b, Index excluded) noexcept;
bool shares_element(std::span<const Index> a, std::span<const Index> b) noexcept;

struct LoadResult {
  BipartiteGraph graph;
  std::size_t duplicate_edges = 0;
  std::size_t lines_read = 0;
};

// Edge-list reader. One "bottom<TAB>top" link per line; lines without a tab
// are split on whitespace. '#' lines are comments, except the node directive
// "#@node<TAB>bottom|top<TAB>label" which declares a (possibly isolated)
// node. Duplicate links are collapsed and counted. Throws ParseError.
LoadResult load_graph(std::istream& in);
LoadResult load_graph_file(const std::filesystem::path& path);

// Canonical serialization: node directives for degree-0 nodes, then links in
// (bottom index, top index) order.
void write_graph(const BipartiteGraph& g, std::ostream& out);

// One-mode projection G_⊥ or G_⊤.
class ProjectionGraph {
 public:
  ProjectionGraph() = default;
  ProjectionGraph(Side side, std::vector<std::vector<Index>> adjacency);

  Side side() const noexcept { return side_; }
  std::size_t node_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Index> neighbors(Index u) const;
  bool has_edge(Index u, Index w) const;

  friend bool operator==(const ProjectionGraph&, const ProjectionGraph&) = default;

 private:
  Side side_ = Side::Bottom;
  std::vector<std::vector<Index>> adj_;
  std::size_t edge_count_ = 0;
};

ProjectionGraph project(const BipartiteGraph& g, Side side);

// Edge-set equality. Throws IncomparableError on different node counts.
bool projection_equal(const ProjectionGraph& a, const ProjectionGraph& b);

// Writes "#@node" directives for isolated nodes, then each edge u < w once as
// "label_u<TAB>label_w", ordered by (u, w). Labels come from `g`.
void write_projection(const ProjectionGraph& p, const BipartiteGraph& g, std::ostream& out);

}  // namespace bipint
