#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rfg/arith.hpp"
#include "rfg/quotsearch.hpp"

using namespace rfg;

TEST_CASE("detecting a single generator uses the first lexicographic tuple") {
  auto r = min_quotient(free_presentation(2), parse_word("a"));
  REQUIRE(r.found);
  CHECK(r.k == 2);
  REQUIRE(r.witness.kind == WitnessKind::symmetric_image);
  CHECK(r.witness.degree == 2);
  // a |-> (1 2), b |-> identity
  CHECK(r.witness.images[0] == std::vector<std::uint8_t>{1, 0});
  CHECK(r.witness.images[1] == std::vector<std::uint8_t>{0, 1});
  CHECK(verify_quotient_witness(free_presentation(2), parse_word("a"), r.witness));
}

TEST_CASE("free-group commutator needs the smallest nonabelian group") {
  auto r = min_quotient(free_presentation(2), commutator({1}, {2}));
  REQUIRE(r.found);
  CHECK(r.k == 6);
  CHECK(r.nilpotency_class == -1);  // S3 image
  CHECK(verify_quotient_witness(free_presentation(2), commutator({1}, {2}), r.witness));
}

TEST_CASE("nilpotent filter pushes the commutator to order 8") {
  SearchOptions opts;
  opts.filter = QuotientFilter::nilpotent;
  auto r = min_quotient(free_presentation(2), commutator({1}, {2}), opts);
  REQUIRE(r.found);
  CHECK(r.k == 8);
  CHECK(r.nilpotency_class == 2);
  CHECK(verify_quotient_witness(free_presentation(2), commutator({1}, {2}), r.witness));
}

TEST_CASE("weight-3 commutator with nilpotent filter reaches order 16") {
  SearchOptions opts;
  opts.filter = QuotientFilter::nilpotent;
  auto r = min_quotient(free_presentation(2), iterated_commutator({1, 2, 1}), opts);
  REQUIRE(r.found);
  CHECK(r.k == 16);
  CHECK(r.nilpotency_class == 3);
  CHECK(verify_quotient_witness(free_presentation(2), iterated_commutator({1, 2, 1}), r.witness));
}

TEST_CASE("heisenberg presentation detects its commutator at order 8") {
  auto r = min_quotient(heisenberg_presentation(), commutator({1}, {2}));
  REQUIRE(r.found);
  CHECK(r.k == 8);
  CHECK(verify_quotient_witness(heisenberg_presentation(), commutator({1}, {2}), r.witness));
}

TEST_CASE("cyclic completion reaches orders with no small-degree action") {
  // a^2520 on Z: detectable first in Z/11; S_8 has no order-11 subgroup
  Word w(2520, 1);
  auto r = min_quotient(free_presentation(1), w);
  REQUIRE(r.found);
  CHECK(r.k == 11);
  CHECK(r.witness.kind == WitnessKind::congruence_mod_m);
  CHECK(r.witness.modulus == 11);
  CHECK(verify_quotient_witness(free_presentation(1), w, r.witness));
  CHECK(r.k == static_cast<int>(k_int(BigInt(2520)).q));
}

TEST_CASE("certified bound is reported when nothing is found") {
  // c^2 in the Heisenberg presentation survives only in quotients of
  // order 27 and beyond, past the certified range
  Word c = commutator({1}, {2});
  Word w = concat_words(c, c);
  auto r = min_quotient(heisenberg_presentation(), w);
  CHECK_FALSE(r.found);
  CHECK(r.certified_bound == 16);
}

TEST_CASE("any-filter never exceeds the nilpotent filter") {
  SearchOptions nil_opts;
  nil_opts.filter = QuotientFilter::nilpotent;
  for (const std::string s : {"ab", "aabb", "ABab", "aab"}) {
    Word w = parse_word(s);
    auto any = min_quotient(free_presentation(2), w);
    auto nil = min_quotient(free_presentation(2), w, nil_opts);
    REQUIRE(any.found);
    REQUIRE(nil.found);
    CHECK(any.k <= nil.k);
    CHECK(verify_quotient_witness(free_presentation(2), w, any.witness));
    CHECK(verify_quotient_witness(free_presentation(2), w, nil.witness));
  }
}

TEST_CASE("determinism: identical inputs, identical witnesses") {
  auto a = min_quotient(free_presentation(2), commutator({1}, {2}));
  auto b = min_quotient(free_presentation(2), commutator({1}, {2}));
  CHECK(a.k == b.k);
  CHECK(a.witness.encode() == b.witness.encode());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(min_quotient(free_presentation(2), parse_word("aA")), std::invalid_argument);
  CHECK_THROWS_AS(min_quotient(free_presentation(1), parse_word("b")), std::out_of_range);
}

TEST_CASE("certified order bounds by degree") {
  CHECK(certified_order_bound(2) == 4);
  CHECK(certified_order_bound(4) == 8);
  CHECK(certified_order_bound(7) == 8);
  CHECK(certified_order_bound(8) == 16);
}
