#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "domino/genfun.hpp"

using namespace domino;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

bool has_pair(const std::vector<SymmetryPair>& v, int s, int t) {
  return std::find(v.begin(), v.end(), SymmetryPair{s, t}) != v.end();
}

bool has_t(const std::vector<SymmetryPair>& v, int t) {
  return std::any_of(v.begin(), v.end(),
                     [t](const SymmetryPair& p) { return p.t == t; });
}

}  // namespace

TEST_CASE("F_2 = 1 / (1 - x - x^2)") {
  const RationalGF gf = generating_function(2);
  CHECK(gf.P == ints({1}));
  CHECK(gf.Q == ints({1, -1, -1}));
}

TEST_CASE("F_1 = 1 / (1 - x^2)") {
  const RationalGF gf = generating_function(1);
  CHECK(gf.P == ints({1}));
  CHECK(gf.Q == ints({1, 0, -1}));
}

TEST_CASE("F_3 = (1 - x^2) / (1 - 4x^2 + x^4)") {
  const RationalGF gf = generating_function(3);
  CHECK(gf.P == ints({1, 0, -1}));
  CHECK(gf.Q == ints({1, 0, -4, 0, 1}));
}

TEST_CASE("series check: Q * F - P vanishes over a long window") {
  for (int m = 1; m <= 6; ++m) {
    const RationalGF gf = generating_function(m);
    const long window =
        poly_degree(gf.Q) + std::max(poly_degree(gf.P), 0) + (1L << m);
    std::vector<Int> series;
    series.emplace_back(1);
    for (Int& v : count_table(m, window)) series.push_back(std::move(v));
    for (size_t i = 0; i <= static_cast<size_t>(window); ++i) {
      Int conv = 0;
      for (size_t j = 0; j < gf.Q.size() && j <= i; ++j)
        conv += gf.Q[j] * series[i - j];
      const Int p = i < gf.P.size() ? gf.P[i] : Int(0);
      CHECK(conv == p);
    }
  }
}

TEST_CASE("P and Q are coprime") {
  for (int m = 1; m <= 6; ++m) {
    const RationalGF gf = generating_function(m);
    const Poly<Int> g = poly_gcd(gf.P, gf.Q);
    CHECK(g == ints({1}));
  }
}

TEST_CASE("deg Q - deg P = 2 for widths 1..6") {
  for (int m = 1; m <= 6; ++m) CHECK(degree_gap(generating_function(m)) == 2);
}

TEST_CASE("symmetry classification of small denominators") {
  CHECK(has_pair(classify_symmetry(ints({1, -1, -1})), -1, -1));  // m = 2
  CHECK(has_pair(classify_symmetry(ints({1, 0, -1})), -1, +1));   // m = 1
  CHECK(has_pair(classify_symmetry(ints({1, 0, -4, 0, 1})), +1, +1));  // m = 3
  CHECK(classify_symmetry(ints({1, 2, 3})).empty());  // no reciprocal symmetry
  CHECK_THROWS_AS(classify_symmetry(ints({0, 1})), std::invalid_argument);
}

TEST_CASE("a sign flip in x is required exactly for widths 2 mod 4") {
  for (int m = 1; m <= 6; ++m) {
    const auto pairs = classify_symmetry(generating_function(m).Q);
    CHECK(!pairs.empty());
    const bool needs_flip = has_t(pairs, -1) && !has_t(pairs, +1);
    CHECK(needs_flip == (m % 4 == 2));
  }
}
