#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rfg/slk.hpp"

using namespace rfg;

TEST_CASE("generators and determinant checking") {
  CHECK(sl_generators(2).size() == 4);
  CHECK(sl_generators(3).size() == 12);
  IntMat e = IntMat::elementary(2, 0, 1, BigInt(1));
  CHECK(e.mul(e).at(0, 1) == BigInt(2));
  CHECK(IntMat::from_entries(2, {BigInt(2), BigInt(1), BigInt(1), BigInt(1)}).det() == BigInt(1));
  CHECK_THROWS_AS(IntMat::from_entries(2, {BigInt(2), BigInt(0), BigInt(0), BigInt(1)}),
                  std::invalid_argument);
}

TEST_CASE("ball sizes at small radius") {
  CHECK(sl_ball(2, 0).elements.size() == 1);
  CHECK(sl_ball(2, 1).elements.size() == 5);
  CHECK(sl_ball(2, 2).elements.size() == 17);  // pinned by this build
  CHECK_THROWS_AS(sl_ball(2, 12), std::invalid_argument);
  CHECK_THROWS_AS(sl_ball(3, 7), std::invalid_argument);
}

TEST_CASE("orders of SL_k over Z/m") {
  CHECK(order_slk_mod(2, 2) == BigInt(6));
  CHECK(order_slk_mod(2, 3) == BigInt(24));
  CHECK(order_slk_mod(2, 4) == BigInt(48));
  CHECK(order_slk_mod(2, 5) == BigInt(120));
  CHECK(order_slk_mod(3, 2) == BigInt(168));
  CHECK(order_slk_mod(2, 6) == BigInt(144));  // 6 * 24
  CHECK(order_slk_mod(2, 16) == BigInt(3072));
  CHECK(order_slk_mod(2, 11) == BigInt(1320));
  CHECK(order_slk_mod(3, 4) == BigInt(43008));  // 2^8 * 168
  CHECK_THROWS_AS(order_slk_mod(2, 1), std::invalid_argument);
}

TEST_CASE("congruence detection minimizes the quotient order") {
  auto a = k_congruence_sl(IntMat::elementary(2, 0, 1, BigInt(1)));
  REQUIRE(a.found);
  CHECK(a.q == 2);
  CHECK(a.size == BigInt(6));
  auto b = k_congruence_sl(IntMat::elementary(2, 0, 1, BigInt(2520)), 5100);
  REQUIRE(b.found);
  CHECK(b.q == 11);  // 16 also detects but |SL_2(Z/16)| = 3072 > 1320
  CHECK(b.size == BigInt(1320));
  auto c = k_congruence_sl(IntMat::elementary(2, 0, 1, BigInt(6)));
  REQUIRE(c.found);
  CHECK(c.q == 4);
  CHECK(c.size == BigInt(48));
  CHECK(verify_sl_witness(IntMat::elementary(2, 0, 1, BigInt(6)), c.witness));
  CHECK_THROWS_AS(k_congruence_sl(IntMat::identity(2)), std::invalid_argument);
}

TEST_CASE("exhaustion below m_max is reported, never truncated") {
  auto r = k_congruence_sl(IntMat::elementary(2, 0, 1, BigInt(2520)), 10);
  CHECK_FALSE(r.found);
  CHECK(r.m_max == 10);
}

TEST_CASE("the elementary witness") {
  IntMat w = witness_elementary(3, 3);
  CHECK(w.k == 3);
  CHECK(w.at(0, 1) == BigInt(6));
  CHECK(witness_elementary(2, 10).at(0, 1) == BigInt(2520));
  CHECK(witness_elementary(3, 1).at(0, 1) == BigInt(1));
}

TEST_CASE("lower-bound mechanism for k = 3") {
  auto rows = verify_sl_lower(3, {1, 3, 10});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].ok);
  CHECK(rows[1].least_q == 4);  // psi(3) = 6, and 6 = 2 mod 4
  CHECK(rows[1].ok);
  CHECK(rows[2].least_q == 11);
  CHECK(rows[2].ok);
  CHECK_THROWS_AS(verify_sl_lower(2, {3}), std::invalid_argument);
}

TEST_CASE("upper-bound mechanism for k = 2") {
  auto rep = verify_sl_upper(2, 4);
  CHECK(rep.pass);
  CHECK(rep.lambda >= 1.0);
  CHECK(rep.slope <= 3.5);
  REQUIRE(rep.envelope.size() == 4);
  CHECK(rep.envelope[0].second == BigInt(6));  // every generator dies mod 2 only at q = 2
  auto empty = verify_sl_upper(2, 0);
  CHECK(empty.pass);
  CHECK(empty.envelope.empty());
}
