#pragma once

// Annihilating recurrences of the tiling sequences, and two-sided tables
// obtained by running them backward.
//
// A LinearRecurrence of degree d stores integer coefficients q_0..q_d with
//   q_d*a_{n+d} + q_{d-1}*a_{n+d-1} + ... + q_0*a_n = 0,
// normalized content-free with q_d > 0.  As a polynomial this is
// q_0 + q_1 x + ... + q_d x^d, so the characteristic polynomial of the
// transfer matrix can be used directly as a recurrence.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "domino/limits.hpp"
#include "domino/numeric.hpp"
#include "domino/polynomial.hpp"
#include "domino/transfer.hpp"

namespace domino {

struct LinearRecurrence {
  std::vector<Int> q;  // ascending degree; q.back() > 0, gcd 1

  int degree() const { return static_cast<int>(q.size()) - 1; }

  Int apply(std::span<const Int> window) const {
    Int acc = 0;
    for (size_t i = 0; i < q.size(); ++i) acc += q[i] * window[i];
    return acc;
  }

  /// True when every length-(d+1) window of `seq` sums to zero under q.
  bool annihilates(std::span<const Int> seq) const {
    const size_t w = q.size();
    if (seq.size() < w) return true;
    for (size_t i = 0; i + w <= seq.size(); ++i)
      if (apply(seq.subspan(i, w)) != 0) return false;
    return true;
  }

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) =
      default;
};

/// Builds a recurrence from an annihilating polynomial: strips any x^k
/// factor (shift powers do not constrain a two-sided sequence), divides by
/// the content, and makes the leading coefficient positive.
inline LinearRecurrence recurrence_from_poly(Poly<Int> p) {
  poly_trim(p);
  size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  p.erase(p.begin(), p.begin() + static_cast<long>(k));
  p = poly_primitive(std::move(p));
  if (poly_degree(p) < 1)
    throw std::invalid_argument(
        "recurrence_from_poly: polynomial has no nontrivial recurrence");
  return LinearRecurrence{std::move(p)};
}

/// Monic characteristic polynomial of an exact integer matrix, coefficients
/// lowest degree first (Faddeev-LeVerrier; every division is exact).
inline Poly<Int> char_poly(const IntMatrix& A) {
  const Eigen::Index n = A.rows();
  if (n != A.cols()) throw std::invalid_argument("char_poly: matrix not square");
  Poly<Int> c(static_cast<size_t>(n) + 1, Int(0));
  c[static_cast<size_t>(n)] = 1;
  IntMatrix N = IntMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    IntMatrix AN = A * N;
    Int ck = exact_div(-AN.trace(), Int(k));
    c[static_cast<size_t>(n - k)] = ck;
    if (k < n) {
      N = std::move(AN);
      for (Eigen::Index i = 0; i < n; ++i) N(i, i) += ck;
    }
  }
  return c;
}

/// Cayley-Hamilton recurrence of the width-m transfer matrix.
inline LinearRecurrence char_recurrence(int m, const Limits& lim = {}) {
  return recurrence_from_poly(char_poly(build_transfer_matrix(m, lim)));
}

/// Berlekamp-Massey over the rationals.  Returns the connection polynomial
/// c with c[0] = 1 such that sum_{i=0..L} c_i * a_{n-i} = 0 for all
/// n >= L, with L minimal for the given terms.
inline Poly<Rat> berlekamp_massey(std::span<const Int> terms) {
  Poly<Rat> C{Rat(1)}, B{Rat(1)};
  size_t L = 0, gap = 1;
  Rat b(1);
  for (size_t n = 0; n < terms.size(); ++n) {
    Rat delta(terms[n]);
    for (size_t i = 1; i <= L && i < C.size(); ++i)
      delta += C[i] * Rat(terms[n - i]);
    if (delta == 0) {
      ++gap;
    } else if (2 * L <= n) {
      Poly<Rat> T = C;
      Rat coef = delta / b;
      if (C.size() < B.size() + gap) C.resize(B.size() + gap, Rat(0));
      for (size_t i = 0; i < B.size(); ++i) C[i + gap] -= coef * B[i];
      L = n + 1 - L;
      B = std::move(T);
      b = delta;
      gap = 1;
    } else {
      Rat coef = delta / b;
      if (C.size() < B.size() + gap) C.resize(B.size() + gap, Rat(0));
      for (size_t i = 0; i < B.size(); ++i) C[i + gap] -= coef * B[i];
      ++gap;
    }
  }
  C.resize(L + 1, Rat(0));
  return C;
}

/// Shortest integer recurrence annihilating `terms`.  The trailing
/// `holdout` terms take no part in the fit; they only verify it.  A
/// verification failure signals that too few terms were supplied.
inline LinearRecurrence minimal_recurrence(const std::vector<Int>& terms,
                                           size_t holdout) {
  if (terms.size() < holdout + 2)
    throw std::invalid_argument("minimal_recurrence: too few terms");
  const size_t fit = terms.size() - holdout;
  Poly<Rat> C = berlekamp_massey(std::span(terms).first(fit));

  // connection coefficients reversed give the ascending recurrence
  Poly<Rat> rev(C.rbegin(), C.rend());
  LinearRecurrence rec = recurrence_from_poly(poly_from_rat_primitive(rev));

  if (static_cast<size_t>(rec.degree()) * 2 > fit)
    throw std::runtime_error(
        "minimal_recurrence: degree " + std::to_string(rec.degree()) +
        " not determined by " + std::to_string(fit) + " fitted terms");
  if (!rec.annihilates(terms))
    throw std::runtime_error(
        "minimal_recurrence: held-out verification failed (degree " +
        std::to_string(rec.degree()) + "); supply more terms");
  return rec;
}

struct TwoSidedTable {
  long n_min = 0;
  long n_max = 0;
  std::vector<Int> values;  // values[n - n_min]

  const Int& at(long n) const {
    if (n < n_min || n > n_max)
      throw std::out_of_range("TwoSidedTable: index " + std::to_string(n) +
                              " outside [" + std::to_string(n_min) + ", " +
                              std::to_string(n_max) + "]");
    return values[static_cast<size_t>(n - n_min)];
  }
};

/// Runs `rec` backward from `seed` (consecutive values anchored at
/// n = anchor .. anchor+seed.size()-1) down to n_min.  Backward division is
/// exact rational with an integrality check; a non-integer value signals a
/// wrong recurrence.
inline TwoSidedTable extrapolate(const LinearRecurrence& rec,
                                 const std::vector<Int>& seed, long n_min,
                                 long anchor = 0) {
  const size_t d = static_cast<size_t>(rec.degree());
  if (rec.q.front() == 0)
    throw std::invalid_argument(
        "extrapolate: recurrence has zero constant term; strip shift factors");
  if (seed.size() < d)
    throw std::invalid_argument("extrapolate: seed shorter than the degree");
  if (!rec.annihilates(seed))
    throw std::invalid_argument("extrapolate: seed does not satisfy recurrence");
  if (n_min > anchor)
    throw std::invalid_argument("extrapolate: n_min must be <= anchor");

  TwoSidedTable t;
  t.n_min = n_min;
  t.n_max = anchor + static_cast<long>(seed.size()) - 1;
  const size_t len = static_cast<size_t>(t.n_max - t.n_min + 1);
  t.values.assign(len, Int(0));
  for (size_t i = 0; i < seed.size(); ++i)
    t.values[static_cast<size_t>(anchor - n_min) + i] = seed[i];

  for (long n = anchor - 1; n >= n_min; --n) {
    Int num = 0;
    for (size_t i = 1; i <= d; ++i)
      num -= rec.q[i] * t.values[static_cast<size_t>(n - n_min) + i];
    t.values[static_cast<size_t>(n - n_min)] = exact_div(num, rec.q.front());
  }
  return t;
}

/// Minimal recurrence of T(m,.) extracted from 2*2^m + 4 forward terms with
/// 2^m of them held out; retries once with twice as many terms if the
/// held-out check fails.
inline LinearRecurrence minimal_recurrence_for_width(int m,
                                                     const Limits& lim = {}) {
  check_width(m, lim);
  const size_t order = size_t{1} << m;
  try {
    return minimal_recurrence(count_table(m, static_cast<long>(2 * order + 4), lim),
                              order);
  } catch (const std::runtime_error&) {
    return minimal_recurrence(count_table(m, static_cast<long>(4 * order + 4), lim),
                              order);
  }
}

/// Two-sided table of T(m,n) for n_min <= n <= n_max: forward values from
/// the transfer matrix, T(m,0) = 1, negative side by backward extrapolation
/// of the minimal recurrence.
inline TwoSidedTable two_sided_table(int m, long n_min, long n_max,
                                     const Limits& lim = {}) {
  if (n_min > n_max)
    throw std::invalid_argument("two_sided_table: empty range");
  LinearRecurrence rec = minimal_recurrence_for_width(m, lim);
  const long fwd = std::max<long>({n_max, rec.degree(), 1});
  std::vector<Int> seed;
  seed.reserve(static_cast<size_t>(fwd) + 1);
  seed.emplace_back(1);  // T(m,0)
  for (Int& v : count_table(m, fwd, lim)) seed.push_back(std::move(v));
  TwoSidedTable t = extrapolate(rec, seed, std::min<long>(n_min, 0));
  t.n_min = n_min;  // requested window only
  t.n_max = n_max;
  const size_t lo = static_cast<size_t>(n_min - std::min<long>(n_min, 0));
  t.values = std::vector<Int>(
      t.values.begin() + static_cast<long>(lo),
      t.values.begin() + static_cast<long>(lo + static_cast<size_t>(n_max - n_min) + 1));
  return t;
}

}  // namespace domino
