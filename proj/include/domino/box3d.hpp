#pragma once

// Transfer-matrix counting for k-by-m-by-n boxes tiled by 1x1x2 blocks,
// with the box sliced along the n axis.  Profiles are bitmasks over the
// k-by-m cross-section in row-major order, cell (i,j) -> bit (i-1)*m+(j-1).
// Stepping from c to c' forces an n-axis block on every cell cleared in c
// (so that cell must be set in c'), and covers R = {cells set in both}
// with in-slab blocks: the entry is the number of perfect matchings of the
// cross-section subgraph induced on R, which can exceed 1 (unlike width-m
// strips).  With k = 1 this reduces to the 2D rule.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "domino/grid.hpp"
#include "domino/limits.hpp"
#include "domino/numeric.hpp"
#include "domino/recurrence.hpp"
#include "domino/transfer.hpp"

namespace domino {

struct CrossSection {
  int k = 1;
  int m = 1;

  int cells() const { return k * m; }
};

inline void check_cross_section(const CrossSection& cs, const Limits& lim) {
  if (cs.k < 1 || cs.m < 1)
    throw std::invalid_argument("box3d: dimensions must be >= 1");
  if (cs.cells() > lim.box3d_cell_cap)
    throw std::invalid_argument(
        "box3d: cross-section has " + std::to_string(cs.cells()) +
        " cells, above the cap of " + std::to_string(lim.box3d_cell_cap));
}

/// Perfect-matching counts of every induced subgraph of the k-by-m grid,
/// indexed by cell subset.  pm[0] = 1 (empty matching).
inline std::vector<std::int64_t> cross_section_matchings(
    const CrossSection& cs) {
  const int cells = cs.cells();
  const size_t size = size_t{1} << cells;
  std::vector<std::vector<int>> nbr(static_cast<size_t>(cells));
  for (int i = 0; i < cs.k; ++i)
    for (int j = 0; j < cs.m; ++j) {
      const int b = i * cs.m + j;
      if (j + 1 < cs.m) {
        nbr[static_cast<size_t>(b)].push_back(b + 1);
        nbr[static_cast<size_t>(b + 1)].push_back(b);
      }
      if (i + 1 < cs.k) {
        nbr[static_cast<size_t>(b)].push_back(b + cs.m);
        nbr[static_cast<size_t>(b + cs.m)].push_back(b);
      }
    }

  std::vector<std::int64_t> pm(size, -1);
  pm[0] = 1;
  // iterative in increasing subset order: lowest cell of S must be matched
  for (std::uint32_t s = 1; s < size; ++s) {
    const int v = std::countr_zero(s);
    std::int64_t total = 0;
    for (int u : nbr[static_cast<size_t>(v)])
      if (s >> u & 1u) total += pm[s & ~(1u << v) & ~(1u << u)];
    pm[s] = total;
  }
  return pm;
}

inline IntMatrix build_transfer_3d(const CrossSection& cs,
                                   const Limits& lim = {}) {
  check_cross_section(cs, lim);
  const std::vector<std::int64_t> pm = cross_section_matchings(cs);
  const std::uint32_t order = std::uint32_t{1} << cs.cells();
  const std::uint32_t full = order - 1;
  IntMatrix M = IntMatrix::Zero(order, order);
  for (std::uint32_t c = 0; c < order; ++c)
    for (std::uint32_t cp = 0; cp < order; ++cp)
      if ((c | cp) == full) M(c, cp) = static_cast<long>(pm[c & cp]);
  return M;
}

inline IntRowVec initial_state_3d(const CrossSection& cs,
                                  const Limits& lim = {}) {
  check_cross_section(cs, lim);
  const std::vector<std::int64_t> pm = cross_section_matchings(cs);
  const std::uint32_t order = std::uint32_t{1} << cs.cells();
  IntRowVec s(order);
  for (std::uint32_t c = 0; c < order; ++c) s(c) = static_cast<long>(pm[c]);
  return s;
}

/// T(k,m,n) for n >= 1.
inline Int count_3d(int k, int m, long n, const Limits& lim = {}) {
  const CrossSection cs{k, m};
  check_cross_section(cs, lim);
  if (n < 1) throw std::invalid_argument("count_3d: n must be >= 1");
  const IntMatrix M = build_transfer_3d(cs, lim);
  const Eigen::Index full = M.rows() - 1;
  return profile_count(M, initial_state_3d(cs, lim), n, full);
}

inline std::vector<Int> count_table_3d(const CrossSection& cs, long n_max,
                                       const Limits& lim = {}) {
  check_cross_section(cs, lim);
  if (n_max < 1)
    throw std::invalid_argument("count_table_3d: n_max must be >= 1");
  const IntMatrix M = build_transfer_3d(cs, lim);
  const Eigen::Index full = M.rows() - 1;
  IntRowVec s = initial_state_3d(cs, lim);
  std::vector<Int> vals;
  vals.reserve(static_cast<size_t>(n_max));
  vals.push_back(s(full));
  for (long n = 2; n <= n_max; ++n) {
    s = state_step(s, M);
    vals.push_back(s(full));
  }
  return vals;
}

/// The k-by-m-by-n box graph with all +1 edges, for brute-force dimer
/// counts.  Vertices are flattened slab by slab, (i,j,l) ->
/// (l-1)*k*m + (i-1)*m + (j-1), so the oracle's lowest-vertex heuristic
/// sweeps along the n axis.
inline SignedGraph box_graph(int k, int m, long n) {
  if (k < 1 || m < 1 || n < 1)
    throw std::invalid_argument("box_graph: dimensions must be >= 1");
  SignedGraph g;
  const long cells = static_cast<long>(k) * m;
  g.vertex_count = static_cast<int>(cells * n);
  auto vid = [&](int i, int j, long l) {
    return static_cast<int>((l - 1) * cells + (static_cast<long>(i - 1) * m + (j - 1)));
  };
  for (long l = 1; l <= n; ++l)
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= m; ++j) {
        if (j + 1 <= m) g.edges.push_back({vid(i, j, l), vid(i, j + 1, l), +1});
        if (i + 1 <= k) g.edges.push_back({vid(i, j, l), vid(i + 1, j, l), +1});
        if (l + 1 <= n) g.edges.push_back({vid(i, j, l), vid(i, j, l + 1), +1});
      }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

struct Box3dRow {
  long n = 0;
  Int t_forward;        // T(k,m,n)
  Int t_extrapolated;   // T(k,m,-2-n)
  bool abs_pass = false;
  int sign = 0;         // t_extrapolated / t_forward when nonzero, else 0
};

struct Box3dReport {
  int k = 0;
  int m = 0;
  long n_max = 0;
  LinearRecurrence recurrence;
  std::vector<Box3dRow> rows;
  bool all_pass = true;
};

/// Extrapolates T(k,m,.) backward through its minimal recurrence and checks
/// |T(k,m,-2-n)| = |T(k,m,n)| for 0 <= n <= n_max.  The sign pattern is
/// recorded, never asserted.
inline Box3dReport verify_3d(int k, int m, long n_max, const Limits& lim = {}) {
  const CrossSection cs{k, m};
  check_cross_section(cs, lim);
  if (n_max < 0) throw std::invalid_argument("verify_3d: n_max must be >= 0");

  const size_t order = size_t{1} << cs.cells();
  std::vector<Int> terms =
      count_table_3d(cs, static_cast<long>(2 * order + 4), lim);
  LinearRecurrence rec;
  try {
    rec = minimal_recurrence(terms, order);
  } catch (const std::runtime_error&) {
    terms = count_table_3d(cs, static_cast<long>(4 * order + 4), lim);
    rec = minimal_recurrence(terms, order);
  }

  const long fwd = std::max<long>({n_max, rec.degree(), 1});
  if (static_cast<size_t>(fwd) > terms.size())
    terms = count_table_3d(cs, fwd, lim);
  const std::vector<Int> seed(terms.begin(), terms.begin() + fwd);
  const TwoSidedTable table = extrapolate(rec, seed, -2 - n_max, /*anchor=*/1);

  Box3dReport rep;
  rep.k = k;
  rep.m = m;
  rep.n_max = n_max;
  rep.recurrence = std::move(rec);
  for (long n = 0; n <= n_max; ++n) {
    Box3dRow row;
    row.n = n;
    row.t_forward = table.at(n);
    row.t_extrapolated = table.at(-2 - n);
    row.abs_pass = abs(row.t_extrapolated) == abs(row.t_forward);
    if (row.t_forward != 0 && row.abs_pass)
      row.sign = row.t_extrapolated == row.t_forward ? +1 : -1;
    rep.all_pass = rep.all_pass && row.abs_pass;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace domino
