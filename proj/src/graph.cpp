#include "bipint/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "bipint/error.hpp"

namespace bipint {

std::string_view to_string(Side s) noexcept {
  return s == Side::Bottom ? "bottom" : "top";
}

std::optional<Side> parse_side(std::string_view text) noexcept {
  if (text == "bottom") return Side::Bottom;
  if (text == "top") return Side::Top;
  return std::nullopt;
}

namespace {

bool all_digits(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void validate_label(std::string_view label) {
  if (label.find_first_of("\t\r\n") != std::string_view::npos) {
    throw Error("node label contains a tab or line break");
  }
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) noexcept {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da != db) return da;
  if (da && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

BipartiteGraph::BipartiteGraph(std::size_t bottom_count, std::size_t top_count) {
  adj_[0].resize(bottom_count);
  adj_[1].resize(top_count);
  for (std::size_t i = 0; i < bottom_count; ++i) labels_[0].push_back(std::to_string(i));
  for (std::size_t i = 0; i < top_count; ++i) labels_[1].push_back(std::to_string(i));
}

void BipartiteGraph::check(Side s, Index i) const {
  if (i >= node_count(s)) {
    throw RangeError(std::string(to_string(s)) + " node " + std::to_string(i) + " out of range (" +
                     std::to_string(node_count(s)) + " nodes)");
  }
}

std::span<const Index> BipartiteGraph::neighbors(Side s, Index i) const {
  check(s, i);
  return adj_[slot(s)][i];
}

std::vector<NodeId> BipartiteGraph::neighbors(NodeId u) const {
  std::vector<NodeId> out;
  const Side other = opposite(u.side);
  for (Index v : neighbors(u.side, u.index)) out.push_back({other, v});
  return out;
}

bool BipartiteGraph::has_edge(const Edge& e) const {
  const auto& nb = neighbors(Side::Bottom, e.bottom);
  check(Side::Top, e.top);
  return std::binary_search(nb.begin(), nb.end(), e.top);
}

void BipartiteGraph::add_link(const Edge& e) {
  check(Side::Bottom, e.bottom);
  check(Side::Top, e.top);
  auto& nb = adj_[0][e.bottom];
  auto it = std::lower_bound(nb.begin(), nb.end(), e.top);
  if (it != nb.end() && *it == e.top) {
    throw DuplicateError("link (" + labels_[0][e.bottom] + ", " + labels_[1][e.top] + ") already present");
  }
  nb.insert(it, e.top);
  auto& nt = adj_[1][e.top];
  nt.insert(std::lower_bound(nt.begin(), nt.end(), e.bottom), e.bottom);
  ++edge_count_;
}

void BipartiteGraph::remove_link(const Edge& e) {
  check(Side::Bottom, e.bottom);
  check(Side::Top, e.top);
  auto& nb = adj_[0][e.bottom];
  auto it = std::lower_bound(nb.begin(), nb.end(), e.top);
  if (it == nb.end() || *it != e.top) {
    throw NotFoundError("link (" + labels_[0][e.bottom] + ", " + labels_[1][e.top] + ") not present");
  }
  nb.erase(it);
  auto& nt = adj_[1][e.top];
  nt.erase(std::lower_bound(nt.begin(), nt.end(), e.bottom));
  --edge_count_;
}

void BipartiteGraph::add_link(NodeId u, NodeId v) { add_link(make_edge(u, v)); }
void BipartiteGraph::remove_link(NodeId u, NodeId v) { remove_link(make_edge(u, v)); }

Index BipartiteGraph::add_node(Side s, std::string label) {
  const auto id = static_cast<Index>(node_count(s));
  if (label.empty()) label = std::to_string(id);
  validate_label(label);
  adj_[slot(s)].emplace_back();
  labels_[slot(s)].push_back(std::move(label));
  return id;
}

const std::string& BipartiteGraph::label(Side s, Index i) const {
  check(s, i);
  return labels_[slot(s)][i];
}

void BipartiteGraph::set_label(Side s, Index i, std::string label) {
  check(s, i);
  validate_label(label);
  labels_[slot(s)][i] = std::move(label);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Index u = 0; u < adj_[0].size(); ++u) {
    for (Index v : adj_[0][u]) out.push_back({u, v});
  }
  return out;
}

Edge make_edge(NodeId u, NodeId v) {
  if (u.side == v.side) throw RangeError("a link must join a bottom node and a top node");
  return u.side == Side::Bottom ? Edge{u.index, v.index} : Edge{v.index, u.index};
}

std::vector<Index> neighborhood(const BipartiteGraph& g, Side s, std::span<const Index> nodes) {
  std::vector<Index> out;
  for (Index u : nodes) {
    auto nb = g.neighbors(s, u);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool shares_element_except(std::span<const Index> a, std::span<const Index> b, Index excluded) noexcept {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      if (*i != excluded) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

bool shares_element(std::span<const Index> a, std::span<const Index> b) noexcept {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

constexpr std::string_view kNodeDirective = "#@node";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find('\t') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    return fields;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\v' || line[i] == '\f')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\v' && line[j] != '\f') ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\v\f") == std::string_view::npos;
}

struct LabelTable {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Index> ids;

  void see(std::string_view label) {
    if (ids.find(std::string(label)) == ids.end()) {
      ids.emplace(std::string(label), 0);
      labels.emplace_back(label);
    }
  }

  void finalize() {
    std::sort(labels.begin(), labels.end(),
              [](const std::string& a, const std::string& b) { return label_less(a, b); });
    for (Index i = 0; i < labels.size(); ++i) ids[labels[i]] = i;
  }
};

}  // namespace

LoadResult load_graph(std::istream& in) {
  std::array<LabelTable, 2> tables;
  std::vector<std::pair<std::string, std::string>> raw;
  LoadResult result;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (blank(view)) continue;
    if (view.front() == '#') {
      if (view.substr(0, kNodeDirective.size()) == kNodeDirective &&
          (view.size() == kNodeDirective.size() || view[kNodeDirective.size()] == '\t')) {
        auto fields = split_fields(view);
        std::optional<Side> side = fields.size() == 3 ? parse_side(fields[1]) : std::nullopt;
        if (!side || fields[2].empty()) {
          throw ParseError(lineno, "malformed node directive, expected \"#@node<TAB>bottom|top<TAB>label\"");
        }
        tables[slot(*side)].see(fields[2]);
      }
      continue;
    }
    auto fields = split_fields(view);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(lineno, "expected 2 fields (bottom, top), found " + std::to_string(fields.size()));
    }
    tables[0].see(fields[0]);
    tables[1].see(fields[1]);
    raw.emplace_back(std::string(fields[0]), std::string(fields[1]));
  }
  if (in.bad()) throw Error("read failure on edge-list stream");
  result.lines_read = lineno;

  for (auto& t : tables) t.finalize();

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [b, t] : raw) edges.push_back({tables[0].ids.at(b), tables[1].ids.at(t)});
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  result.duplicate_edges = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());

  BipartiteGraph g;
  for (auto& label : tables[0].labels) g.add_node(Side::Bottom, std::move(label));
  for (auto& label : tables[1].labels) g.add_node(Side::Top, std::move(label));
  // Sorted input makes every insertion an append.
  for (const Edge& e : edges) g.add_link(e);
  result.graph = std::move(g);
  return result;
}

LoadResult load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_graph(in);
}

void write_graph(const BipartiteGraph& g, std::ostream& out) {
  for (Side s : {Side::Bottom, Side::Top}) {
    for (Index i = 0; i < g.node_count(s); ++i) {
      if (g.degree(s, i) == 0) out << kNodeDirective << '\t' << to_string(s) << '\t' << g.label(s, i) << '\n';
    }
  }
  for (Index u = 0; u < g.bottom_count(); ++u) {
    const std::string& lu = g.label(Side::Bottom, u);
    for (Index v : g.neighbors(Side::Bottom, u)) out << lu << '\t' << g.label(Side::Top, v) << '\n';
  }
  if (!out) throw Error("write failure on edge-list stream");
}

// ---------------------------------------------------------------------------
// Projection

ProjectionGraph::ProjectionGraph(Side side, std::vector<std::vector<Index>> adjacency)
    : side_(side), adj_(std::move(adjacency)) {
  std::size_t total = 0;
  for (const auto& nb : adj_) total += nb.size();
  edge_count_ = total / 2;
}

std::span<const Index> ProjectionGraph::neighbors(Index u) const {
  if (u >= adj_.size()) throw RangeError("projection node " + std::to_string(u) + " out of range");
  return adj_[u];
}

bool ProjectionGraph::has_edge(Index u, Index w) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), w);
}

ProjectionGraph project(const BipartiteGraph& g, Side side) {
  const std::size_t n = g.node_count(side);
  const Side other = opposite(side);
  std::vector<std::vector<Index>> adj(n);
  // stamp[x] == u + 1 marks x as already collected for u.
  std::vector<Index> stamp(n, 0);
  for (Index u = 0; u < n; ++u) {
    auto& out = adj[u];
    stamp[u] = u + 1;
    for (Index w : g.neighbors(side, u)) {
      for (Index x : g.neighbors(other, w)) {
        if (stamp[x] != u + 1) {
          stamp[x] = u + 1;
          out.push_back(x);
        }
      }
    }
    std::sort(out.begin(), out.end());
  }
  return ProjectionGraph(side, std::move(adj));
}

bool projection_equal(const ProjectionGraph& a, const ProjectionGraph& b) {
  if (a.node_count() != b.node_count()) {
    throw IncomparableError("projections have " + std::to_string(a.node_count()) + " and " +
                            std::to_string(b.node_count()) + " nodes");
  }
  if (a.edge_count() != b.edge_count()) return false;
  for (Index u = 0; u < a.node_count(); ++u) {
    auto x = a.neighbors(u);
    auto y = b.neighbors(u);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
  }
  return true;
}

void write_projection(const ProjectionGraph& p, const BipartiteGraph& g, std::ostream& out) {
  const Side s = p.side();
  if (p.node_count() != g.node_count(s)) throw IncomparableError("projection does not match the graph's node set");
  for (Index u = 0; u < p.node_count(); ++u) {
    if (p.neighbors(u).empty()) out << kNodeDirective << '\t' << to_string(s) << '\t' << g.label(s, u) << '\n';
  }
  for (Index u = 0; u < p.node_count(); ++u) {
    const std::string& lu = g.label(s, u);
    for (Index w : p.neighbors(u)) {
      if (w > u) out << lu << '\t' << g.label(s, w) << '\n';
    }
  }
  if (!out) throw Error("write failure on projection stream");
}

}  // namespace bipint
