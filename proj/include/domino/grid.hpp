#pragma once

// Signed strip graphs.  G(m,n) is the m-by-n grid graph for n >= 1 (all
// edges +1).  For n <= 0 it is the m-by-(2-n) grid with the leftmost and
// rightmost flanks of vertical edges removed and every remaining vertical
// edge signed -1.  Width-m graphs compose by adjunction: place one strip
// after the other and join facing columns row-by-row with m positive
// horizontal edges.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace domino {

enum class EdgeKind : std::uint8_t { horizontal = 0, vertical = 1 };

struct GridEdge {
  EdgeKind kind;
  int row;   // 1-based; horizontal(r,c) joins (r,c)-(r,c+1), vertical(r,c) joins (r,c)-(r+1,c)
  int col;   // 1-based
  int sign;  // +1 or -1

  friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

struct SignedGrid {
  int width = 0;    // m rows
  int columns = 0;  // total columns
  std::vector<GridEdge> edges;  // kept sorted, no duplicates

  int vertex_count() const { return width * columns; }
  friend bool operator==(const SignedGrid&, const SignedGrid&) = default;
};

inline SignedGrid build_grid(int m, long n) {
  if (m < 1) throw std::invalid_argument("build_grid: width must be >= 1");
  SignedGrid g;
  g.width = m;
  if (n >= 1) {
    g.columns = static_cast<int>(n);
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c < g.columns; ++c)
        g.edges.push_back({EdgeKind::horizontal, r, c, +1});
    for (int r = 1; r < m; ++r)
      for (int c = 1; c <= g.columns; ++c)
        g.edges.push_back({EdgeKind::vertical, r, c, +1});
  } else {
    g.columns = static_cast<int>(2 - n);
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c < g.columns; ++c)
        g.edges.push_back({EdgeKind::horizontal, r, c, +1});
    // vertical edges only in columns 2 .. 1-n, all negative
    for (int r = 1; r < m; ++r)
      for (int c = 2; c <= static_cast<int>(1 - n); ++c)
        g.edges.push_back({EdgeKind::vertical, r, c, -1});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline SignedGrid adjoin(const SignedGrid& g1, const SignedGrid& g2) {
  if (g1.width != g2.width)
    throw std::invalid_argument("adjoin: width mismatch (" +
                                std::to_string(g1.width) + " vs " +
                                std::to_string(g2.width) + ")");
  SignedGrid g;
  g.width = g1.width;
  g.columns = g1.columns + g2.columns;
  g.edges = g1.edges;
  for (GridEdge e : g2.edges) {
    e.col += g1.columns;
    g.edges.push_back(e);
  }
  for (int r = 1; r <= g.width; ++r)
    g.edges.push_back({EdgeKind::horizontal, r, g1.columns, +1});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// General signed graph with vertices 0..vertex_count-1.  Unlike SignedGrid
// it allows parallel edges; shrinking produces them (a +1/-1 pair between
// the same endpoints cancels in the signed count).
struct GraphEdge {
  int u;
  int v;
  int sign;

  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct SignedGraph {
  int vertex_count = 0;
  std::vector<GraphEdge> edges;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;
};

/// Vertex id of (row, col) in the graph form of a grid: column-major,
/// (c-1)*m + (r-1).  Edge i of the result corresponds to edge i of the
/// grid's sorted edge list.
inline int grid_vertex(const SignedGrid& g, int row, int col) {
  return (col - 1) * g.width + (row - 1);
}

inline SignedGraph to_graph(const SignedGrid& g) {
  SignedGraph out;
  out.vertex_count = g.vertex_count();
  out.edges.reserve(g.edges.size());
  for (const GridEdge& e : g.edges) {
    int u = grid_vertex(g, e.row, e.col);
    int v = e.kind == EdgeKind::horizontal ? grid_vertex(g, e.row, e.col + 1)
                                           : grid_vertex(g, e.row + 1, e.col);
    out.edges.push_back({u, v, e.sign});
  }
  return out;
}

/// Shrinks the chain u-v-w to a single vertex: v must be adjacent to
/// exactly u and w, through +1 edges.  All other edges incident to u or w
/// are inherited by the merged vertex with their signs; the signed matching
/// count is unchanged.  Remaining vertices are relabeled order-preservingly.
inline SignedGraph shrink_chain(const SignedGraph& g, int u, int v, int w) {
  const int n = g.vertex_count;
  if (u < 0 || u >= n || v < 0 || v >= n || w < 0 || w >= n)
    throw std::invalid_argument("shrink_chain: vertex out of range");
  if (u == v || v == w || u == w)
    throw std::invalid_argument("shrink_chain: u, v, w must be distinct");

  int chain_edges = 0;
  for (const GraphEdge& e : g.edges) {
    if (e.u != v && e.v != v) continue;
    const int other = e.u == v ? e.v : e.u;
    if (other != u && other != w)
      throw std::invalid_argument("shrink_chain: v has a neighbor besides u, w");
    if (e.sign != +1)
      throw std::invalid_argument("shrink_chain: chain edge is not a +1 edge");
    ++chain_edges;
  }
  if (chain_edges != 2)
    throw std::invalid_argument("shrink_chain: v must have degree exactly 2");

  // Drop v and w; w's other edges move to u.  New labels close the gaps.
  std::vector<int> relabel(static_cast<size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (i != v && i != w) relabel[static_cast<size_t>(i)] = next++;

  SignedGraph out;
  out.vertex_count = n - 2;
  for (const GraphEdge& e : g.edges) {
    if (e.u == v || e.v == v) continue;
    int a = e.u == w ? u : e.u;
    int b = e.v == w ? u : e.v;
    out.edges.push_back({relabel[static_cast<size_t>(a)],
                         relabel[static_cast<size_t>(b)], e.sign});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace domino
