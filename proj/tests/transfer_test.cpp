#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "domino/grid.hpp"
#include "domino/oracle.hpp"
#include "domino/transfer.hpp"

using namespace domino;

namespace {

bool row_kept(StateMask c, int m, int row) { return (c >> (m - row)) & 1u; }

// Independent check of one transfer entry: the rows kept in both profiles
// must be perfectly matched by the vertical edges of a single column, i.e.
// by a path graph induced on those rows.
Int entry_by_path_matching(StateMask c, StateMask cp, int m) {
  const StateMask full = (1u << m) - 1;
  if ((c | cp) != full) return 0;
  std::vector<int> rows;
  for (int r = 1; r <= m; ++r)
    if (row_kept(c, m, r) && row_kept(cp, m, r)) rows.push_back(r);
  SignedGraph path;
  path.vertex_count = static_cast<int>(rows.size());
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i + 1] == rows[i] + 1)
      path.edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), +1});
  return count_signed(path);
}

// Independent cell-scan (broken profile) DP over an r-by-c board.
Int broken_profile_count(int rows, int cols) {
  const unsigned states = 1u << rows;
  std::vector<Int> cur(states, Int(0)), next(states, Int(0));
  cur[0] = 1;
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      std::fill(next.begin(), next.end(), Int(0));
      for (unsigned s = 0; s < states; ++s) {
        if (cur[s] == 0) continue;
        if (s & 1u) {
          next[s >> 1] += cur[s];  // covered by an earlier domino
        } else {
          if (c + 1 < cols)  // horizontal into the next column
            next[(s >> 1) | (1u << (rows - 1))] += cur[s];
          if (r + 1 < rows && !(s & 2u))  // vertical downward
            next[(s >> 1) | 1u] += cur[s];
        }
      }
      cur.swap(next);
    }
  return cur[0];
}

// Oracle count of G(m,n) with rightmost-column vertices deleted where the
// profile bit is 0.
Int deleted_count(int m, long n, StateMask c) {
  const SignedGrid grid = build_grid(m, n);
  const SignedGraph g = to_graph(grid);
  std::vector<int> keep(static_cast<size_t>(g.vertex_count), 1);
  for (int r = 1; r <= m; ++r)
    if (!row_kept(c, m, r))
      keep[static_cast<size_t>(grid_vertex(grid, r, grid.columns))] = 0;
  std::vector<int> relabel(static_cast<size_t>(g.vertex_count), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (keep[static_cast<size_t>(v)]) relabel[static_cast<size_t>(v)] = next++;
  SignedGraph h;
  h.vertex_count = next;
  for (const GraphEdge& e : g.edges)
    if (keep[static_cast<size_t>(e.u)] && keep[static_cast<size_t>(e.v)])
      h.edges.push_back({relabel[static_cast<size_t>(e.u)],
                         relabel[static_cast<size_t>(e.v)], e.sign});
  return count_signed(h);
}

}  // namespace

TEST_CASE("the width-2 transfer matrix") {
  const IntMatrix M = build_transfer_matrix(2);
  const int expect[4][4] = {
      {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(M(i, j) == expect[i][j]);
}

TEST_CASE("the width-1 transfer matrix") {
  const IntMatrix M = build_transfer_matrix(1);
  CHECK(M(0, 0) == 0);
  CHECK(M(0, 1) == 1);
  CHECK(M(1, 0) == 1);
  CHECK(M(1, 1) == 0);
}

TEST_CASE("every entry agrees with direct path matching, widths 1..4") {
  for (int m = 1; m <= 4; ++m) {
    const IntMatrix M = build_transfer_matrix(m);
    const StateMask order = 1u << m;
    for (StateMask c = 0; c < order; ++c)
      for (StateMask cp = 0; cp < order; ++cp) {
        const Int e = entry_by_path_matching(c, cp, m);
        CHECK(M(c, cp) == e);
        CHECK((M(c, cp) == 0 || M(c, cp) == 1));
      }
  }
}

TEST_CASE("width-3 all-kept row has three continuations") {
  // (1,1,1) -> (0,0,0), (1,1,0), (0,1,1): empty cover or one vertical pair
  const IntMatrix M = build_transfer_matrix(3);
  int nonzero = 0;
  for (int j = 0; j < 8; ++j)
    if (M(7, j) != 0) ++nonzero;
  CHECK(nonzero == 3);
  CHECK(M(7, 0) == 1);
  CHECK(M(7, 0b110) == 1);
  CHECK(M(7, 0b011) == 1);
}

TEST_CASE("initial state vectors") {
  const IntRowVec s2 = initial_state(2);
  CHECK(s2(0) == 1);
  CHECK(s2(1) == 0);
  CHECK(s2(2) == 0);
  CHECK(s2(3) == 1);
  const IntRowVec s1 = initial_state(1);
  CHECK(s1(0) == 1);
  CHECK(s1(1) == 0);
  for (int m = 1; m <= 6; ++m) CHECK(initial_state(m)(0) == 1);
}

TEST_CASE("count_fast reproduces known values") {
  CHECK(count_fast(2, 5) == 8);
  CHECK(count_fast(3, 2) == 3);
  CHECK(count_fast(2, 1) == 1);
  CHECK(count_fast(1, 4) == 1);
}

TEST_CASE("count_fast equals the exhaustive oracle, m <= 4, n <= 6") {
  for (int m = 1; m <= 4; ++m)
    for (long n = 1; n <= 6; ++n)
      CHECK(count_fast(m, n) == count_signed(build_grid(m, n)));
}

TEST_CASE("8x8 agrees with an independent cell-scan DP") {
  const Int dp = broken_profile_count(8, 8);
  CHECK(count_fast(8, 8) == dp);
  CHECK(dp == 12988816);
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 7; ++n)
      CHECK(count_fast(m, n) == broken_profile_count(m, n));
}

TEST_CASE("S(n+1) = S(n) M entrywise against the oracle") {
  for (int m = 1; m <= 3; ++m) {
    const IntMatrix M = build_transfer_matrix(m);
    const StateMask order = 1u << m;
    IntRowVec s = initial_state(m);
    for (long n = 1; n <= 4; ++n) {
      // also anchors S(n) itself for n = 1
      for (StateMask c = 0; c < order; ++c)
        CHECK(s(c) == deleted_count(m, n, c));
      s = state_step(s, M);
    }
  }
}

TEST_CASE("transpose symmetry of the rectangle") {
  for (int m = 1; m <= 6; ++m)
    for (long n = 1; n <= 6; ++n)
      CHECK(count_fast(m, n) == count_fast(static_cast<int>(n), m));
}

TEST_CASE("odd area forces zero") {
  for (int m = 1; m <= 5; ++m)
    for (long n = 1; n <= 7; ++n)
      if ((m * n) % 2 == 1) CHECK(count_fast(m, n) == 0);
}

TEST_CASE("width cap") {
  Limits lim;
  lim.transfer_width_cap = 3;
  CHECK_THROWS_AS(build_transfer_matrix(4, lim), std::invalid_argument);
  CHECK_THROWS_AS(count_fast(4, 2, lim), std::invalid_argument);
  CHECK_THROWS_AS(build_transfer_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(count_fast(2, 0), std::invalid_argument);
}

TEST_CASE("matrix powering path matches iteration") {
  // n large enough to hit the squaring branch
  const Int direct = count_table(2, 200).back();
  CHECK(count_fast(2, 200) == direct);
}

TEST_CASE("thread count does not change results") {
  const Int one = count_fast(6, 30);
  set_max_threads(4);
  const Int four = count_fast(6, 30);
  set_max_threads(1);
  CHECK(one == four);
}
