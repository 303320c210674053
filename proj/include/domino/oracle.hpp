#pragma once

// Exhaustive signed matching enumeration: backtracking on the
// lowest-indexed unmatched vertex, coded independently of the
// transfer-matrix path.  This is the ground truth everything else is
// checked against, so it stays desk-scale only.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domino/grid.hpp"
#include "domino/limits.hpp"
#include "domino/numeric.hpp"

namespace domino {

struct Matching {
  std::vector<int> edges;  // indices into the host graph's edge list, ascending
  int sign;                // product of edge signs

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Parity class predicted for the vertical-edge count of any matching of
/// G(m,n), n >= 1:  n*m*(m-1)/2 mod 2.
inline int vertical_edge_parity(int m, long n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("vertical_edge_parity: m, n must be >= 1");
  const long t = static_cast<long>(m) * (m - 1) / 2;
  return static_cast<int>((n % 2) * (t % 2)) & 1;
}

namespace detail {

inline void check_oracle_guard(const SignedGraph& g, const Limits& lim,
                               bool force) {
  if (!force && g.vertex_count > lim.oracle_vertex_guard)
    throw std::invalid_argument(
        "oracle: graph has " + std::to_string(g.vertex_count) +
        " vertices, above the guard of " +
        std::to_string(lim.oracle_vertex_guard) +
        " (pass force or raise oracle_vertex_guard)");
}

// Visits every perfect matching once.  Self-loops and parallel edges are
// legal in the input; loops can never be chosen.
inline void for_each_matching(
    const SignedGraph& g,
    const std::function<void(const std::vector<int>&, int)>& visit) {
  const int n = g.vertex_count;
  if (n % 2 != 0 && n > 0) return;  // odd vertex count: no perfect matching

  std::vector<std::vector<int>> incident(static_cast<size_t>(n));
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const GraphEdge& e = g.edges[i];
    if (e.u == e.v) continue;
    incident[static_cast<size_t>(e.u)].push_back(static_cast<int>(i));
    incident[static_cast<size_t>(e.v)].push_back(static_cast<int>(i));
  }

  std::vector<char> matched(static_cast<size_t>(n), 0);
  std::vector<int> chosen;
  int sign = +1;

  std::function<void(int)> recurse = [&](int from) {
    int u = from;
    while (u < n && matched[static_cast<size_t>(u)]) ++u;
    if (u == n) {
      visit(chosen, sign);
      return;
    }
    for (int ei : incident[static_cast<size_t>(u)]) {
      const GraphEdge& e = g.edges[static_cast<size_t>(ei)];
      const int other = e.u == u ? e.v : e.u;
      if (matched[static_cast<size_t>(other)]) continue;
      matched[static_cast<size_t>(u)] = matched[static_cast<size_t>(other)] = 1;
      chosen.push_back(ei);
      sign *= e.sign;
      recurse(u + 1);
      sign *= e.sign;
      chosen.pop_back();
      matched[static_cast<size_t>(u)] = matched[static_cast<size_t>(other)] = 0;
    }
  };
  recurse(0);
}

}  // namespace detail

/// All perfect matchings with their signs, sorted lexicographically by edge
/// index list.
inline std::vector<Matching> enumerate_matchings(const SignedGraph& g,
                                                 const Limits& lim = {},
                                                 bool force = false) {
  detail::check_oracle_guard(g, lim, force);
  std::vector<Matching> out;
  detail::for_each_matching(g, [&](const std::vector<int>& edges, int sign) {
    Matching m;
    m.edges = edges;
    std::sort(m.edges.begin(), m.edges.end());
    m.sign = sign;
    out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end(),
            [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
  return out;
}

inline std::vector<Matching> enumerate_matchings(const SignedGrid& g,
                                                 const Limits& lim = {},
                                                 bool force = false) {
  return enumerate_matchings(to_graph(g), lim, force);
}

/// Number of positive matchings minus number of negative matchings.
inline Int count_signed(const SignedGraph& g, const Limits& lim = {},
                        bool force = false) {
  detail::check_oracle_guard(g, lim, force);
  Int total = 0;
  detail::for_each_matching(
      g, [&](const std::vector<int>&, int sign) { total += sign; });
  return total;
}

inline Int count_signed(const SignedGrid& g, const Limits& lim = {},
                        bool force = false) {
  return count_signed(to_graph(g), lim, force);
}

}  // namespace domino
