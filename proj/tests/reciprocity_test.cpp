#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domino/reciprocity.hpp"

using namespace domino;

TEST_CASE("epsilon values") {
  CHECK(epsilon(2, 3) == -1);
  CHECK(epsilon(3, 5) == +1);
  CHECK(epsilon(6, 4) == +1);
  CHECK(epsilon(6, 3) == -1);
  CHECK(epsilon(2, 4) == +1);
  CHECK(epsilon(1, 7) == +1);
  CHECK(epsilon(4, 3) == +1);
  CHECK(epsilon(2, -3) == -1);
  CHECK_THROWS_AS(epsilon(0, 1), std::invalid_argument);
}

TEST_CASE("epsilon matches the vertical-parity formula where tilings exist") {
  // odd-area strips have no matchings, so the parity argument says nothing
  // there and epsilon defaults to +1
  for (int m = 1; m <= 8; ++m)
    for (long n = 0; n <= 10; ++n) {
      if ((m * n) % 2 != 0) continue;
      const long par = (n * m * (m - 1) / 2) % 2;
      CHECK(epsilon(m, n) == (par == 0 ? +1 : -1));
    }
}

TEST_CASE("verify(2, 8, oracle): the worked width-2 case") {
  const ReciprocityReport rep = verify_reciprocity(2, 8, true);
  CHECK(rep.all_pass);
  REQUIRE(rep.rows.size() == 9);
  const ReciprocityRow& r3 = rep.rows[3];
  CHECK(r3.n == 3);
  CHECK(r3.t_forward == 3);
  CHECK(r3.t_extrapolated == -3);
  CHECK(r3.eps == -1);
  REQUIRE(r3.oracle.has_value());
  CHECK(*r3.oracle == -3);
  CHECK(r3.pass);
}

TEST_CASE("verify at n_max = 0: unique positive matchings at n in {0,-2}") {
  for (int m = 1; m <= 6; ++m) {
    const ReciprocityReport rep = verify_reciprocity(m, 0, false);
    CHECK(rep.all_pass);
    CHECK(rep.rows[0].t_forward == 1);
    CHECK(rep.rows[0].t_extrapolated == 1);
  }
}

TEST_CASE("verify(5, 6, oracle): epsilon identically +1 off the 2 mod 4 class") {
  const ReciprocityReport rep = verify_reciprocity(5, 6, true);
  CHECK(rep.all_pass);
  for (const ReciprocityRow& r : rep.rows) CHECK(r.eps == +1);
}

TEST_CASE("the reciprocity theorem at desk scale: m <= 6, n <= 8") {
  for (int m = 1; m <= 6; ++m) {
    const ReciprocityReport rep = verify_reciprocity(m, 8, true);
    CHECK(rep.all_pass);
    for (const ReciprocityRow& r : rep.rows) {
      CHECK(r.t_extrapolated == r.eps * r.t_forward);
      if (r.t_forward != 0)
        CHECK((r.t_extrapolated == r.t_forward ||
               r.t_extrapolated == -r.t_forward));
    }
  }
}

TEST_CASE("oracle cross-checks auto-disable above the vertex guard") {
  Limits lim;  // guard 40: G(6,-2-n) has 6*(4+n) vertices
  const ReciprocityReport rep = verify_reciprocity(6, 8, true, lim);
  CHECK(rep.all_pass);
  for (const ReciprocityRow& r : rep.rows) {
    const bool desk_sized = 6 * (4 + r.n) <= lim.oracle_vertex_guard;
    CHECK(r.oracle.has_value() == desk_sized);
  }
}

TEST_CASE("failed comparisons surface as data, not exceptions") {
  ReciprocityReport rep;
  rep.rows.push_back({3, Int(3), Int(-3), -1, std::nullopt, true});
  rep.rows.push_back({4, Int(5), Int(4), +1, std::nullopt, false});
  rep.all_pass = true;
  for (const ReciprocityRow& r : rep.rows) rep.all_pass = rep.all_pass && r.pass;
  CHECK_FALSE(rep.all_pass);
}
