#pragma once

// Column-by-column transfer method for strips of width m.  A profile c is
// an m-bit mask over rows of the current rightmost column: bit set means
// the vertex is kept (already matched inside the prefix), clear means it
// was deleted and must be matched by a horizontal edge into the next
// column.
//
// Index convention: c = (c_1,...,c_m) with c_1 the most significant bit,
// so the m = 2 profiles run (0,0),(0,1),(1,0),(1,1).
//
// Stepping from profile c to c' adds the horizontal edges forced by the
// zero rows of c and covers R = {rows kept in both c and c'} with vertical
// edges in the new column.  A set of rows can be covered by verticals in
// exactly one way when its maximal runs of consecutive rows all have even
// length, and in no way otherwise, so every entry of the width-m transfer
// matrix is 0 or 1.

#include <stdexcept>
#include <string>

#include "domino/limits.hpp"
#include "domino/numeric.hpp"

namespace domino {

using StateMask = unsigned;

/// True when the rows raised in `kept` split into maximal runs of
/// consecutive rows of even length (the unique-vertical-cover condition).
inline bool even_runs(StateMask kept, int m) {
  int run = 0;
  for (int bit = 0; bit < m; ++bit) {
    if (kept >> bit & 1u) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

inline void check_width(int m, const Limits& lim) {
  if (m < 1) throw std::invalid_argument("transfer: width must be >= 1");
  if (m > lim.transfer_width_cap)
    throw std::invalid_argument("transfer: width " + std::to_string(m) +
                                " exceeds cap " +
                                std::to_string(lim.transfer_width_cap));
}

inline IntMatrix build_transfer_matrix(int m, const Limits& lim = {}) {
  check_width(m, lim);
  const StateMask order = 1u << m;
  const StateMask full = order - 1;
  IntMatrix M = IntMatrix::Zero(order, order);
  for (StateMask c = 0; c < order; ++c)
    for (StateMask cp = 0; cp < order; ++cp)
      if ((c | cp) == full && even_runs(c & cp, m)) M(c, cp) = 1;
  return M;
}

/// S(1): component at profile c is 1 iff the kept rows of the single
/// column can be matched among themselves by vertical edges.
inline IntRowVec initial_state(int m) {
  if (m < 1) throw std::invalid_argument("transfer: width must be >= 1");
  const StateMask order = 1u << m;
  IntRowVec s = IntRowVec::Zero(order);
  for (StateMask c = 0; c < order; ++c)
    if (even_runs(c, m)) s(c) = 1;
  return s;
}

inline IntMatrix matrix_power(IntMatrix base, long e) {
  IntMatrix acc = IntMatrix::Identity(base.rows(), base.cols());
  while (e > 0) {
    if (e & 1) acc = (acc * base).eval();
    if (e >>= 1) base = (base * base).eval();
  }
  return acc;
}

/// Component of S(1) * M^(n-1) at `target`.  Iterates vector-matrix
/// products; switches to matrix squaring once n dwarfs the matrix order.
inline Int profile_count(const IntMatrix& M, IntRowVec s, long n,
                         Eigen::Index target) {
  const long steps = n - 1;
  if (steps > 8 * M.rows()) {
    IntRowVec r = s * matrix_power(M, steps);
    return r(target);
  }
  for (long i = 0; i < steps; ++i) s = state_step(s, M);
  return s(target);
}

/// T(m,n) for n >= 1.
inline Int count_fast(int m, long n, const Limits& lim = {}) {
  check_width(m, lim);
  if (n < 1) throw std::invalid_argument("count_fast: n must be >= 1");
  const IntMatrix M = build_transfer_matrix(m, lim);
  const StateMask full = (1u << m) - 1;
  return profile_count(M, initial_state(m), n, full);
}

/// T(m,1..n_max) in one pass of iterated vector-matrix products.
inline std::vector<Int> count_table(int m, long n_max, const Limits& lim = {}) {
  check_width(m, lim);
  if (n_max < 1) throw std::invalid_argument("count_table: n_max must be >= 1");
  const IntMatrix M = build_transfer_matrix(m, lim);
  const StateMask full = (1u << m) - 1;
  IntRowVec s = initial_state(m);
  std::vector<Int> vals;
  vals.reserve(static_cast<size_t>(n_max));
  vals.push_back(s(full));
  for (long n = 2; n <= n_max; ++n) {
    s = state_step(s, M);
    vals.push_back(s(full));
  }
  return vals;
}

}  // namespace domino
