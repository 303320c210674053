#pragma once

// Exact-integer dense linear algebra: Eigen matrices and row vectors over
// GMP's mpz_class.  Everything downstream (transfer matrices, state
// vectors, recurrences) builds on the aliases defined here.

#include <gmpxx.h>

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace domino {

using Int = mpz_class;
using Rat = mpq_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseRowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<Int>;
using IntRowVec = DenseRowVector<Int>;

inline bool divisible(const Int& a, const Int& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

/// Quotient a/b, required to be exact.  Throws std::domain_error otherwise.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  if (!divisible(a, b))
    throw std::domain_error("exact_div: " + a.get_str() + " not divisible by " +
                            b.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline int& detail_thread_setting() {
  static int n = 1;
  return n;
}

inline void set_max_threads(int n) { detail_thread_setting() = n < 1 ? 1 : n; }
inline int max_threads() { return detail_thread_setting(); }

/// One transfer step s -> s * M.  Column blocks may be computed on separate
/// threads; every component is an independent dot product, so the result is
/// bit-identical for any thread count.
inline IntRowVec state_step(const IntRowVec& s, const IntMatrix& M) {
  const Eigen::Index n = M.cols();
  const int threads = max_threads();
  if (threads <= 1 || n < 64) return s * M;

  IntRowVec out(n);
  const Eigen::Index blocks = std::min<Eigen::Index>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(blocks));
  for (Eigen::Index b = 0; b < blocks; ++b) {
    const Eigen::Index lo = b * n / blocks;
    const Eigen::Index hi = (b + 1) * n / blocks;
    pool.emplace_back([&, lo, hi] {
      out.segment(lo, hi - lo) = s * M.middleCols(lo, hi - lo);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace domino
