#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rfg/perm.hpp"
#include "rfg/word.hpp"

using namespace rfg;

TEST_CASE("word reduction and parsing") {
  CHECK(reduce_word({1, -1}).empty());
  CHECK(reduce_word({1, 2, -2, -1}).empty());
  CHECK(format_word(parse_word("ABab")) == "ABab");
  CHECK(parse_word("aA").empty());
  CHECK(format_word(invert_word(parse_word("ab"))) == "BA");
  CHECK_THROWS_AS(parse_word("a1"), std::invalid_argument);
}

TEST_CASE("commutators") {
  CHECK(format_word(commutator({1}, {2})) == "ABab");
  CHECK(iterated_commutator({1, 1}).empty());
  CHECK(iterated_commutator({1, 2}).size() == 4);
  // [[a,b],a] expands to BAbA Bab a after the middle cancellation
  Word w = iterated_commutator({1, 2, 1});
  CHECK(w.size() == 8);
  CHECK(format_word(w) == "BAbABaba");
  CHECK_THROWS_AS(iterated_commutator({1}), std::invalid_argument);
}

TEST_CASE("permutation basics") {
  Perm id = Perm::identity(4);
  CHECK(id.is_identity());
  Perm p = Perm::from_images({1, 0, 2});  // (1 2)
  Perm q = Perm::from_images({0, 2, 1});  // (2 3)
  CHECK(p.then(p).is_identity());
  CHECK(p.inverse() == p);
  CHECK(p.cycle_string() == "(1 2)");
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), std::invalid_argument);

  // left-to-right: apply (1 2) then (2 3); 1 -> 2 -> 3
  Perm r = p.then(q);
  CHECK(r.apply(0) == 2);
  CHECK(r.apply(2) == 1);
  CHECK(r.apply(1) == 0);
}

TEST_CASE("eval_word composition convention") {
  std::vector<Perm> images{Perm::from_images({1, 0, 2}), Perm::from_images({0, 2, 1})};
  Perm r = eval_word_perm(parse_word("ab"), images, 3);
  CHECK(r.apply(0) == 2);  // the 3-cycle (1 3 2) on 1-based points
  CHECK(r.apply(2) == 1);
  CHECK(eval_word_perm({}, images, 3).is_identity());
  CHECK(eval_word_perm(parse_word("aA"), images, 3).is_identity());
  CHECK_THROWS_AS(eval_word_perm(parse_word("c"), images, 3), std::out_of_range);
}

TEST_CASE("group order by closure") {
  std::vector<Perm> s3{Perm::from_images({1, 0, 2}), Perm::from_images({0, 2, 1})};
  CHECK(group_order(s3, 100) == 6);
  CHECK(group_order({Perm::identity(3)}, 100) == 1);
  std::vector<Perm> s4{Perm::from_images({1, 2, 3, 0}), Perm::from_images({1, 0, 2, 3})};
  CHECK_THROWS_AS(group_order(s4, 10), std::runtime_error);
  CHECK(group_order(s4, 24) == 24);
}

TEST_CASE("nilpotency by lower central series") {
  // cyclic of order 4
  PermGroup z4 = enumerate_group({Perm::from_images({1, 2, 3, 0})}, 10);
  int cls = -1;
  CHECK(is_nilpotent(z4, &cls));
  CHECK(cls == 1);
  // S3 stabilizes at A3
  PermGroup s3 = enumerate_group({Perm::from_images({1, 0, 2}), Perm::from_images({0, 2, 1})}, 10);
  CHECK_FALSE(is_nilpotent(s3));
  // dihedral of order 8 on the square: rotation + diagonal reflection
  PermGroup d4 = enumerate_group({Perm::from_images({1, 2, 3, 0}), Perm::from_images({2, 1, 0, 3})}, 10);
  CHECK(d4.order() == 8);
  CHECK(is_nilpotent(d4, &cls));
  CHECK(cls == 2);
}

TEST_CASE("class representatives") {
  auto reps2 = class_representatives(2);
  REQUIRE(reps2.size() == 2);
  CHECK(reps2[0].is_identity());
  auto reps4 = class_representatives(4);
  CHECK(reps4.size() == 5);  // partitions of 4
  CHECK(reps4[0].is_identity());
  auto reps8 = class_representatives(8);
  CHECK(reps8.size() == 22);  // partitions of 8
}
