#pragma once

// Weighted matching polynomials of the width-2 strips and their backward
// extrapolation.  Edge weights: the vertical edge in column i carries y_i,
// the horizontal edges between columns i and i+1 carry w_i (top row) and
// x_i (bottom row).  The three-term recurrence
//
//     M(n+1) = y_{n+1} * M(n) + w_n * x_n * M(n-1)
//
// runs backward as M(n-1) = (M(n+1) - y_{n+1} M(n)) / (w_n x_n); the
// divisor is a single monomial, and the extrapolated results stay Laurent
// polynomials whose coefficients all turn out to be +1 or -1.  Backward
// steps introduce variables with indices <= 0; the step at index n consumes
// exactly y_{n+1}, w_n, x_n, which pins the indexing on the negative side.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "domino/grid.hpp"
#include "domino/limits.hpp"
#include "domino/numeric.hpp"
#include "domino/oracle.hpp"

namespace domino {

struct VarId {
  char family;  // 'w', 'x' or 'y'
  long index;   // any integer

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline std::string var_name(const VarId& v) {
  return std::string(1, v.family) + "_" + std::to_string(v.index);
}

// Exponent vector; entries are nonzero, negative exponents allowed.
using Monomial = std::map<VarId, long>;

struct LaurentPoly {
  std::map<Monomial, Int> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }
  size_t term_count() const { return terms.size(); }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

inline LaurentPoly lp_const(Int c) {
  LaurentPoly p;
  if (c != 0) p.terms.emplace(Monomial{}, std::move(c));
  return p;
}

inline LaurentPoly lp_var(char family, long index) {
  LaurentPoly p;
  p.terms.emplace(Monomial{{VarId{family, index}, 1}}, Int(1));
  return p;
}

inline void lp_add_term(LaurentPoly& p, const Monomial& mono, const Int& c) {
  auto [it, inserted] = p.terms.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

inline LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [mono, c] : b.terms) lp_add_term(r, mono, c);
  return r;
}

inline LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [mono, c] : b.terms) lp_add_term(r, mono, -c);
  return r;
}

inline Monomial mono_mul(Monomial a, const Monomial& b) {
  for (const auto& [v, e] : b) {
    long& slot = a[v];
    slot += e;
    if (slot == 0) a.erase(v);
  }
  return a;
}

inline LaurentPoly lp_mul_monomial(const LaurentPoly& p, const Monomial& mono,
                                   const Int& coeff = Int(1)) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms) {
    Int nc = c * coeff;
    if (nc != 0) r.terms.emplace(mono_mul(m, mono), std::move(nc));
  }
  return r;
}

/// Divides every term by `mono` (exponent subtraction; always exact in the
/// Laurent ring).  The multiplication is checked back as a guard against
/// implementation faults.
inline LaurentPoly lp_div_monomial(const LaurentPoly& p, const Monomial& mono) {
  Monomial inv;
  for (const auto& [v, e] : mono) inv.emplace(v, -e);
  LaurentPoly r = lp_mul_monomial(p, inv);
  if (lp_mul_monomial(r, mono) != p)
    throw std::logic_error("lp_div_monomial: inexact division");
  return r;
}

/// Value with every variable set to 1: the coefficient sum.
inline Int lp_eval_ones(const LaurentPoly& p) {
  Int total = 0;
  for (const auto& [mono, c] : p.terms) total += c;
  return total;
}

inline bool lp_coeffs_all_pm1(const LaurentPoly& p) {
  for (const auto& [mono, c] : p.terms)
    if (c != 1 && c != -1) return false;
  return true;
}

/// Renders e.g. "y_1*y_2 + w_1*x_1" or "-w_-1^-1*x_-1^-1*y_-1" in the
/// canonical term order.
inline std::string lp_to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : p.terms) {
    const Int a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1 || mono.empty()) out += a.get_str();
    bool leading = !(a != 1 || mono.empty());
    for (const auto& [v, e] : mono) {
      if (!leading) out += "*";
      leading = false;
      out += var_name(v);
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

/// Sum over matchings of G(2,n) of the product of edge weights; every
/// coefficient is 1 and the term count is T(2,n).
inline LaurentPoly weighted_matching_poly(long n, const Limits& lim = {}) {
  if (n < 1)
    throw std::invalid_argument("weighted_matching_poly: n must be >= 1");
  const SignedGrid g = build_grid(2, n);
  LaurentPoly p;
  for (const Matching& match : enumerate_matchings(g, lim)) {
    Monomial mono;
    for (int ei : match.edges) {
      const GridEdge& e = g.edges[static_cast<size_t>(ei)];
      const char family =
          e.kind == EdgeKind::vertical ? 'y' : (e.row == 1 ? 'w' : 'x');
      mono[VarId{family, e.col}] += 1;
    }
    lp_add_term(p, mono, Int(match.sign));
  }
  return p;
}

/// M(n+1) = y_{n+1} * p_curr + w_n * x_n * p_prev.
inline LaurentPoly step_forward(const LaurentPoly& p_prev,
                                const LaurentPoly& p_curr, long n) {
  LaurentPoly up = lp_mul_monomial(p_curr, Monomial{{VarId{'y', n + 1}, 1}});
  LaurentPoly lo = lp_mul_monomial(
      p_prev, Monomial{{VarId{'w', n}, 1}, {VarId{'x', n}, 1}});
  return lp_add(up, lo);
}

/// M(n-1) = (p_next - y_{n+1} * p_curr) / (w_n * x_n).
inline LaurentPoly step_backward(const LaurentPoly& p_next,
                                 const LaurentPoly& p_curr, long n) {
  LaurentPoly num = lp_sub(
      p_next, lp_mul_monomial(p_curr, Monomial{{VarId{'y', n + 1}, 1}}));
  return lp_div_monomial(num,
                         Monomial{{VarId{'w', n}, 1}, {VarId{'x', n}, 1}});
}

/// Table of M(G(2,n)) for n_min <= n <= 3: direct enumeration at 1..2, one
/// forward step to 3, backward steps below 1.
inline std::map<long, LaurentPoly> extrapolate_laurent(long n_min,
                                                       const Limits& lim = {}) {
  if (n_min > 0)
    throw std::invalid_argument("extrapolate_laurent: n_min must be <= 0");
  if (n_min < lim.laurent_depth_floor)
    throw std::invalid_argument(
        "extrapolate_laurent: n_min " + std::to_string(n_min) +
        " below the depth floor " + std::to_string(lim.laurent_depth_floor) +
        " (raise laurent_depth_floor to go deeper)");

  std::map<long, LaurentPoly> table;
  table[1] = weighted_matching_poly(1, lim);
  table[2] = weighted_matching_poly(2, lim);
  table[3] = step_forward(table[1], table[2], 2);
  for (long j = 0; j >= n_min; --j)
    table[j] = step_backward(table[j + 2], table[j + 1], j + 1);
  return table;
}

}  // namespace domino
