#pragma once

// The reciprocity check: extrapolated T(m,-2-n) against epsilon * T(m,n),
// optionally cross-checked by exhaustive enumeration of G(m,-2-n).
// Reports are plain data so callers can render partial failures; nothing
// here throws on a failed comparison.

#include <optional>
#include <vector>

#include "domino/grid.hpp"
#include "domino/limits.hpp"
#include "domino/numeric.hpp"
#include "domino/oracle.hpp"
#include "domino/recurrence.hpp"

namespace domino {

/// epsilon_{m,n}: -1 when m = 2 (mod 4) and n is odd, +1 otherwise.
inline int epsilon(int m, long n) {
  if (m < 1) throw std::invalid_argument("epsilon: m must be >= 1");
  return (m % 4 == 2 && n % 2 != 0) ? -1 : +1;
}

struct ReciprocityRow {
  long n = 0;
  Int t_forward;               // T(m,n)
  Int t_extrapolated;          // T(m,-2-n) from the two-sided table
  int eps = +1;                // epsilon_{m,n}
  std::optional<Int> oracle;   // signed count of G(m,-2-n), when desk-sized
  bool pass = false;
};

struct ReciprocityReport {
  int m = 0;
  long n_max = 0;
  bool with_oracle = false;
  std::vector<ReciprocityRow> rows;
  bool all_pass = true;
};

inline ReciprocityReport verify_reciprocity(int m, long n_max,
                                            bool with_oracle,
                                            const Limits& lim = {}) {
  if (m < 1) throw std::invalid_argument("verify_reciprocity: m must be >= 1");
  if (n_max < 0)
    throw std::invalid_argument("verify_reciprocity: n_max must be >= 0");

  ReciprocityReport rep;
  rep.m = m;
  rep.n_max = n_max;
  rep.with_oracle = with_oracle;

  const TwoSidedTable table = two_sided_table(m, -2 - n_max, n_max, lim);
  for (long n = 0; n <= n_max; ++n) {
    ReciprocityRow row;
    row.n = n;
    row.t_forward = table.at(n);
    row.t_extrapolated = table.at(-2 - n);
    row.eps = epsilon(m, n);
    row.pass = row.t_extrapolated == row.eps * row.t_forward;
    if (with_oracle) {
      // G(m,-2-n) has m*(4+n) vertices
      if (static_cast<long>(m) * (4 + n) <= lim.oracle_vertex_guard) {
        row.oracle = count_signed(build_grid(m, -2 - n), lim);
        row.pass = row.pass && *row.oracle == row.t_extrapolated;
      }
    }
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace domino
