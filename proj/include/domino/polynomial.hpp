#pragma once

// Small dense univariate polynomials, coefficients lowest degree first.
// The zero polynomial is the empty vector; degree(zero) == -1.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "domino/numeric.hpp"

namespace domino {

template <typename Scalar>
using Poly = std::vector<Scalar>;

template <typename Scalar>
inline void poly_trim(Poly<Scalar>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <typename Scalar>
inline int poly_degree(const Poly<Scalar>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <typename Scalar>
inline Poly<Scalar> poly_add(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  Poly<Scalar> r(std::max(a.size(), b.size()), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

template <typename Scalar>
inline Poly<Scalar> poly_sub(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  Poly<Scalar> r(std::max(a.size(), b.size()), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

template <typename Scalar>
inline Poly<Scalar> poly_mul(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<Scalar> r(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

template <typename Scalar>
inline Scalar poly_eval(const Poly<Scalar>& p, const Scalar& x) {
  Scalar acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Poly<Rat>, Poly<Rat>> poly_divmod(Poly<Rat> a, Poly<Rat> b) {
  poly_trim(a);
  poly_trim(b);
  if (b.empty()) throw std::domain_error("poly_divmod: division by zero poly");
  Poly<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size()) {
    Rat coef = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = coef;
    for (size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= coef * b[i];
    a.pop_back();  // leading term cancels exactly
    poly_trim(a);
  }
  poly_trim(q);
  return {q, a};
}

inline Poly<Rat> poly_to_rat(const Poly<Int>& p) {
  Poly<Rat> r;
  r.reserve(p.size());
  for (const Int& c : p) r.emplace_back(c);
  return r;
}

inline Int poly_content(const Poly<Int>& p) {
  Int g = 0;
  for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

/// Divides out the content and normalizes the leading coefficient positive.
inline Poly<Int> poly_primitive(Poly<Int> p) {
  poly_trim(p);
  if (p.empty()) return p;
  Int g = poly_content(p);
  if (p.back() < 0) g = -g;
  for (Int& c : p) c = exact_div(c, g);
  return p;
}

/// Clears denominators and reduces to the primitive integer polynomial with
/// positive leading coefficient.
inline Poly<Int> poly_from_rat_primitive(const Poly<Rat>& p) {
  Int lcm = 1;
  for (const Rat& c : p)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Poly<Int> r;
  r.reserve(p.size());
  for (const Rat& c : p) {
    Rat scaled = c * Rat(lcm);
    r.push_back(scaled.get_num());
  }
  return poly_primitive(std::move(r));
}

/// Primitive gcd with positive leading coefficient (empty iff both inputs
/// are zero).
inline Poly<Int> poly_gcd(const Poly<Int>& a, const Poly<Int>& b) {
  Poly<Rat> x = poly_to_rat(a), y = poly_to_rat(b);
  poly_trim(x);
  poly_trim(y);
  while (!y.empty()) {
    auto [q, r] = poly_divmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return poly_from_rat_primitive(x);
}

/// Exact quotient a/b over the integers; throws if the division leaves a
/// remainder or a fractional coefficient.
inline Poly<Int> poly_div_exact(const Poly<Int>& a, const Poly<Int>& b) {
  auto [q, r] = poly_divmod(poly_to_rat(a), poly_to_rat(b));
  if (!r.empty())
    throw std::domain_error("poly_div_exact: nonzero remainder");
  Poly<Int> out;
  out.reserve(q.size());
  for (const Rat& c : q) {
    if (c.get_den() != 1)
      throw std::domain_error("poly_div_exact: non-integer quotient");
    out.push_back(c.get_num());
  }
  return out;
}

inline bool poly_divides(const Poly<Int>& divisor, const Poly<Int>& dividend) {
  if (divisor.empty()) return dividend.empty();
  auto [q, r] = poly_divmod(poly_to_rat(dividend), poly_to_rat(divisor));
  return r.empty();
}

/// Renders e.g. "x^4 - x^3 - 2x^2 + x + 1" (highest degree first).
inline std::string poly_to_string(const Poly<Int>& p,
                                  const std::string& var = "x") {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = p.size(); i-- > 0;) {
    const Int& c = p[i];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace domino
