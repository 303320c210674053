#pragma once

// Rational generating function F_m(x) = sum_{n>=0} T(m,n) x^n = P(x)/Q(x),
// with Q(0) = 1, reduced to lowest terms.  Q encodes the minimal recurrence
// (Q is its reversed coefficient vector), P the initial-condition
// correction.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domino/limits.hpp"
#include "domino/numeric.hpp"
#include "domino/polynomial.hpp"
#include "domino/recurrence.hpp"

namespace domino {

struct RationalGF {
  int m = 0;
  Poly<Int> P;
  Poly<Int> Q;  // Q[0] == 1
};

inline RationalGF generating_function(int m, const Limits& lim = {}) {
  LinearRecurrence rec = minimal_recurrence_for_width(m, lim);
  const size_t d = static_cast<size_t>(rec.degree());

  Poly<Int> Q(rec.q.rbegin(), rec.q.rend());
  if (Q.front() != 1)
    throw std::logic_error(
        "generating_function: minimal recurrence is not monic");

  // Convolve Q against the series through a window long enough to witness
  // that all coefficients beyond deg P vanish.
  const size_t window = 2 * d + (size_t{1} << m);
  std::vector<Int> series;
  series.reserve(window + 1);
  series.emplace_back(1);  // T(m,0)
  for (Int& v : count_table(m, static_cast<long>(window), lim))
    series.push_back(std::move(v));

  Poly<Int> prod(window + 1, Int(0));
  for (size_t i = 0; i <= window; ++i)
    for (size_t j = 0; j < Q.size() && j <= i; ++j)
      prod[i] += Q[j] * series[i - j];
  for (size_t i = d; i <= window; ++i)
    if (prod[i] != 0)
      throw std::logic_error("generating_function: series check failed");

  Poly<Int> P(prod.begin(), prod.begin() + static_cast<long>(d));
  poly_trim(P);

  // Lowest terms.  The minimal recurrence should already make P and Q
  // coprime; reduce anyway and renormalize Q(0) = 1.
  Poly<Int> g = poly_gcd(P, Q);
  if (poly_degree(g) > 0 || (g.size() == 1 && g[0] != 1)) {
    P = poly_div_exact(P, g);
    Q = poly_div_exact(Q, g);
  }
  if (Q.front() == -1) {
    for (Int& c : P) c = -c;
    for (Int& c : Q) c = -c;
  }
  if (Q.front() != 1)
    throw std::logic_error("generating_function: Q(0) != 1 after reduction");
  return RationalGF{m, std::move(P), std::move(Q)};
}

inline int degree_gap(const RationalGF& gf) {
  return poly_degree(gf.Q) - poly_degree(gf.P);
}

struct SymmetryPair {
  int s;  // +1 or -1
  int t;  // +1 or -1

  friend bool operator==(const SymmetryPair&, const SymmetryPair&) = default;
};

/// All (s,t) in {+-1}^2 with x^deg(Q) * Q(1/x) = s * Q(t*x), i.e.
/// Q_{d-i} = s * t^i * Q_i for every i.  Empty when no pair fits.
inline std::vector<SymmetryPair> classify_symmetry(const Poly<Int>& Q) {
  if (Q.empty() || Q.front() == 0)
    throw std::invalid_argument("classify_symmetry: Q(0) must be nonzero");
  const size_t d = Q.size() - 1;
  std::vector<SymmetryPair> found;
  for (int s : {+1, -1}) {
    for (int t : {+1, -1}) {
      bool ok = true;
      int ti = 1;
      for (size_t i = 0; i <= d && ok; ++i, ti *= t)
        ok = Q[d - i] == s * ti * Q[i];
      if (ok) found.push_back({s, t});
    }
  }
  return found;
}

}  // namespace domino
