#pragma once

// Brute-force references for the tests. Everything here works on a dense
// bottom x top incidence matrix and shares no code path with the library
// algorithms it checks.

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bipint/graph.hpp"
#include "bipint/random.hpp"

namespace oracle {

using bipint::Index;
using bipint::Side;

struct Matrix {
  std::size_t bottoms = 0;
  std::size_t tops = 0;
  std::vector<std::vector<char>> m;  // m[b][t]

  Matrix(std::size_t nb, std::size_t nt) : bottoms(nb), tops(nt), m(nb, std::vector<char>(nt, 0)) {}

  std::size_t count(Side s) const { return s == Side::Bottom ? bottoms : tops; }

  // Incidence seen from side `s`: linked(s, a, b) with a on `s`, b opposite.
  bool linked(Side s, std::size_t a, std::size_t b) const { return s == Side::Bottom ? m[a][b] : m[b][a]; }

  std::size_t degree(Side s, std::size_t a) const {
    std::size_t d = 0;
    for (std::size_t b = 0; b < count(s == Side::Bottom ? Side::Top : Side::Bottom); ++b) d += linked(s, a, b);
    return d;
  }
};

inline Matrix to_matrix(const bipint::BipartiteGraph& g) {
  Matrix mat(g.bottom_count(), g.top_count());
  for (Index b = 0; b < g.bottom_count(); ++b) {
    for (Index t = 0; t < g.top_count(); ++t) mat.m[b][t] = g.has_edge({b, t}) ? 1 : 0;
  }
  return mat;
}

// Pairwise intersection test over every pair of same-side nodes.
inline std::vector<std::vector<char>> projection(const Matrix& mat, Side s) {
  const Side o = s == Side::Bottom ? Side::Top : Side::Bottom;
  const std::size_t n = mat.count(s);
  std::vector<std::vector<char>> p(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      for (std::size_t w = 0; w < mat.count(o); ++w) {
        if (mat.linked(s, a, w) && mat.linked(s, c, w)) {
          p[a][c] = p[c][a] = 1;
          break;
        }
      }
    }
  }
  return p;
}

inline bool link_internal(const Matrix& mat, std::size_t b, std::size_t t, Side s) {
  Matrix cut = mat;
  cut.m[b][t] = 0;
  return projection(mat, s) == projection(cut, s);
}

inline bool pair_internal(const Matrix& mat, std::size_t b, std::size_t t, Side s) {
  Matrix grown = mat;
  grown.m[b][t] = 1;
  return projection(mat, s) == projection(grown, s);
}

// Internal pairs of side `s`: non-edges, optional both-endpoint degree >= 2
// filter, pairs whose opposite endpoint has degree 0 counted only on request.
inline std::uint64_t count_pairs(const Matrix& mat, Side s, bool filter, bool count_isolated) {
  std::uint64_t n = 0;
  for (std::size_t b = 0; b < mat.bottoms; ++b) {
    for (std::size_t t = 0; t < mat.tops; ++t) {
      if (mat.m[b][t]) continue;
      const std::size_t db = mat.degree(Side::Bottom, b);
      const std::size_t dt = mat.degree(Side::Top, t);
      if (filter && (db < 2 || dt < 2)) continue;
      const std::size_t opposite_degree = s == Side::Bottom ? dt : db;
      if (opposite_degree == 0 && !count_isolated) continue;
      n += pair_internal(mat, b, t, s);
    }
  }
  return n;
}

// Redundancy of node v on side s: remove v, project, count surviving pairs.
inline double redundancy(const Matrix& mat, Side s, std::size_t v, bool& defined) {
  const Side o = s == Side::Bottom ? Side::Top : Side::Bottom;
  std::vector<std::size_t> nb;
  for (std::size_t w = 0; w < mat.count(o); ++w) {
    if (mat.linked(s, v, w)) nb.push_back(w);
  }
  defined = nb.size() >= 2;
  if (!defined) return 0.0;
  Matrix without = mat;
  for (std::size_t w = 0; w < mat.count(o); ++w) {
    if (s == Side::Bottom) {
      without.m[v][w] = 0;
    } else {
      without.m[w][v] = 0;
    }
  }
  const auto p = projection(without, o);
  std::size_t linked = 0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t c = a + 1; c < nb.size(); ++c) {
      ++pairs;
      linked += p[nb[a]][nb[c]];
    }
  }
  return static_cast<double>(linked) / static_cast<double>(pairs);
}

}  // namespace oracle

namespace fixtures {

using bipint::BipartiteGraph;
using bipint::Index;

inline BipartiteGraph from_text(const std::string& text) {
  std::istringstream in(text);
  return bipint::load_graph(in).graph;
}

inline BipartiteGraph make(std::size_t nb, std::size_t nt, std::initializer_list<std::pair<Index, Index>> edges) {
  BipartiteGraph g(nb, nt);
  for (auto [b, t] : edges) g.add_link({b, t});
  return g;
}

// A–i, A–j, B–i, B–j. Also the 4-cycle A–i–B–j–A.
inline BipartiteGraph k22() { return from_text("A\ti\nA\tj\nB\ti\nB\tj\n"); }

// Removing (A,i) leaves (B,j), (C,k), (D,l) as the only links connecting A
// to B, C and D in the bottom projection.
inline const char* kFigure4 =
    "A\ti\nB\ti\nC\ti\nD\ti\nA\tj\nB\tj\nA\tk\nC\tk\nA\tl\nD\tl\n";
inline BipartiteGraph figure4() { return from_text(kFigure4); }

// ⊥={A,B}, ⊤={i,j}, E={A–i, B–i, A–j}.
inline BipartiteGraph path3() { return from_text("A\ti\nB\ti\nA\tj\n"); }

// ⊥={A}, ⊤={i,j,k}.
inline BipartiteGraph star3() { return from_text("A\ti\nA\tj\nA\tk\n"); }

inline BipartiteGraph random_graph(std::size_t nb, std::size_t nt, double p, bipint::Rng& rng) {
  BipartiteGraph g(nb, nt);
  for (Index b = 0; b < nb; ++b) {
    for (Index t = 0; t < nt; ++t) {
      if (rng.bernoulli(p)) g.add_link({b, t});
    }
  }
  return g;
}

// Sizes 1..12 per side, p cycling through {0.1, 0.3, 0.5}.
inline BipartiteGraph random_small(std::size_t k, bipint::Rng& rng) {
  static constexpr double kP[] = {0.1, 0.3, 0.5};
  const std::size_t nb = 1 + rng.below(12);
  const std::size_t nt = 1 + rng.below(12);
  return random_graph(nb, nt, kP[k % 3], rng);
}

}  // namespace fixtures
