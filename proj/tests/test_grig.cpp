#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rfg/grig.hpp"

using namespace rfg;

TEST_CASE("reduction") {
  CHECK(grig_reduce("bb").empty());
  CHECK(grig_reduce("bc") == "d");
  CHECK(grig_reduce("cb") == "d");
  CHECK(grig_reduce("bd") == "c");
  CHECK(grig_reduce("cd") == "b");
  CHECK(grig_reduce("abba").empty());
  CHECK(grig_reduce("abcd") == "a");  // bc -> d, then dd -> 1, confluently
  CHECK(grig_is_reduced("abad"));
  CHECK_FALSE(grig_is_reduced("ab" "ba"));
  CHECK(grig_reduce(grig_reduce("bcdbcd")) == grig_reduce("bcdbcd"));
  CHECK_THROWS_AS(grig_reduce("xyz"), std::invalid_argument);
}

TEST_CASE("sections of generators and short words") {
  auto a = grig_sections("a");
  CHECK(a.swap);
  CHECK(a.g0.empty());
  CHECK(a.g1.empty());
  auto b = grig_sections("b");
  CHECK_FALSE(b.swap);
  CHECK(b.g0 == "a");
  CHECK(b.g1 == "c");
  auto c = grig_sections("c");
  CHECK(c.g0 == "a");
  CHECK(c.g1 == "d");
  auto d = grig_sections("d");
  CHECK(d.g0.empty());
  CHECK(d.g1 == "b");
  // abad = (c, ab) with no swap
  auto w = grig_sections("abad");
  CHECK_FALSE(w.swap);
  CHECK(w.g0 == "c");
  CHECK(w.g1 == "ab");
}

TEST_CASE("the base identity reduces to (abad)^2 and has sections (1, (ab)^2)") {
  std::string w = grig_reduce("abab" "d" "baba" "d");
  CHECK(w == "abadabad");
  auto secs = grig_sections(w);
  CHECK_FALSE(secs.swap);
  CHECK(secs.g0.empty());
  CHECK(grig_equal(secs.g1, "abab"));
}

TEST_CASE("action on strings") {
  CHECK(grig_act("a", "011") == "111");
  CHECK(grig_act("d", "00") == "00");
  CHECK(grig_act("d", "01") == "01");
  CHECK(grig_act("b", "01") == "00");
  CHECK(grig_act("b", "0") == "0");   // nothing beyond the first letter to flip
  CHECK(grig_act("", "0110") == "0110");
  CHECK(grig_act("ab", "00") == grig_act("b", grig_act("a", "00")));  // leftmost first
}

TEST_CASE("triviality") {
  CHECK(grig_is_trivial(""));
  CHECK(grig_is_trivial(grig_reduce("adadadad")));  // (ad)^4 = 1
  CHECK_FALSE(grig_is_trivial("ab"));
  CHECK_FALSE(grig_is_trivial("d"));
  CHECK_FALSE(grig_is_trivial(grig_reduce("adad")));  // (ad)^2 = (b, b)
  CHECK(grig_equal("bc", "d"));
  CHECK(grig_equal("abab", "abab"));
  CHECK_FALSE(grig_equal("ab", "ba"));
}

TEST_CASE("depth") {
  CHECK(grig_depth("a") == 1);
  CHECK(grig_depth("b") == 2);
  CHECK(grig_depth("c") == 2);
  CHECK(grig_depth("d") == 3);
  CHECK(grig_depth("abab") == 2);
  CHECK_THROWS_AS(grig_depth("bb"), std::invalid_argument);
}

TEST_CASE("level actions and truncation") {
  LevelAction a1 = level_action("a", 1);
  CHECK_FALSE(a1.is_identity());
  LevelAction d2 = level_action("d", 2);
  CHECK(d2.is_identity());
  LevelAction d3 = level_action("d", 3);
  CHECK_FALSE(d3.is_identity());
  for (const std::string w : {"abad", "abadabad", "badac"}) {
    for (int level = 2; level <= 6; ++level) {
      LevelAction fine = level_action(w, level);
      LevelAction coarse = level_action(w, level - 1);
      for (std::uint32_t i = 0; i < fine.images.size(); ++i)
        CHECK(coarse.images[i >> 1] == (fine.images[i] >> 1));
    }
  }
}

TEST_CASE("gamma orders: closure vs formula") {
  CHECK(gamma_order(1, GammaMethod::bfs) == BigInt(2));
  CHECK(gamma_order(2, GammaMethod::bfs) == BigInt(8));
  CHECK(gamma_order(3, GammaMethod::bfs) == BigInt(128));
  CHECK(gamma_order(3, GammaMethod::formula) == BigInt(128));
  CHECK(gamma_order(4, GammaMethod::bfs) == BigInt(4096));
  CHECK(gamma_order(4, GammaMethod::formula) == BigInt(4096));
  CHECK(gamma_order(10, GammaMethod::formula) == BigInt::pow2(5 * 128 + 2));
  CHECK_THROWS_AS(gamma_order(6, GammaMethod::bfs), std::runtime_error);
}

TEST_CASE("gamma order at level 5: closure agrees with the formula") {
  CHECK(gamma_order(5, GammaMethod::bfs) == BigInt(4194304));
  CHECK(gamma_order(5, GammaMethod::formula) == BigInt(4194304));
}

TEST_CASE("deep witnesses") {
  std::string w1 = grig_witness_deep(1);
  CHECK(w1 == "abadabad");
  CHECK(verify_deep_witness(w1, 1));
  CHECK(grig_depth(w1) == 3);
  std::string w2 = grig_witness_deep(2);
  CHECK(verify_deep_witness(w2, 2));
  CHECK(w2.size() == 16);
  std::string w4 = grig_witness_deep(4);
  CHECK(verify_deep_witness(w4, 4));
  CHECK(w4.size() == 64);
  CHECK(grig_depth(w4) == 6);
  CHECK_FALSE(verify_deep_witness(w2, 1));
}

TEST_CASE("congruence brackets") {
  auto a = k_congruence_grig("a");
  CHECK(a.depth == 1);
  CHECK(a.upper == BigInt(2));
  CHECK(a.lower == BigInt(2));
  auto t = k_congruence_grig("abab");
  CHECK(t.depth == 2);
  CHECK(t.upper == BigInt(8));
  CHECK(verify_grig_witness("abab", t.witness));
  auto deep = k_congruence_grig(grig_witness_deep(8));
  CHECK(deep.depth == 10);
  CHECK(deep.lower == gamma_order(4, GammaMethod::formula));
  CHECK_THROWS_AS(k_congruence_grig("bb"), std::invalid_argument);
}

TEST_CASE("evaluators agree on a fixed sample") {
  std::uint64_t state = 7;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 13;
  };
  const char klein[3] = {'b', 'c', 'd'};
  for (int t = 0; t < 500; ++t) {
    std::string w;
    bool a_next = next() % 2 == 0;
    int len = 1 + static_cast<int>(next() % 24);
    for (int i = 0; i < len; ++i) {
      w += a_next ? 'a' : klein[next() % 3];
      a_next = !a_next;
    }
    std::string s;
    int slen = 1 + static_cast<int>(next() % 10);
    for (int i = 0; i < slen; ++i) s += next() % 2 ? '1' : '0';
    CHECK(grig_act(w, s) == grig_act_sections(w, s));
  }
}

TEST_CASE("growth table at radius 10, frozen") {
  GrigGrowth g = f_grig(10);
  REQUIRE(g.rows.size() == 10);
  for (int n = 1; n <= 7; ++n) CHECK(g.rows[n - 1].f_value == BigInt(128));
  for (int n = 8; n <= 10; ++n) CHECK(g.rows[n - 1].f_value == BigInt(4096));
  CHECK(g.rows[7].argmax == "acacacac");  // depth-4 element entering at length 8
}

TEST_CASE("growth over the ball") {
  GrigGrowth g = f_grig(4);
  REQUIRE_FALSE(g.rows.empty());
  CHECK(g.rows[0].n == 1);
  CHECK(g.rows[0].f_value == BigInt(128));  // d has depth 3: |Gamma_3| = 128
  for (std::size_t i = 1; i < g.rows.size(); ++i)
    CHECK(g.rows[i].f_value >= g.rows[i - 1].f_value);
  for (const auto& e : g.ball) {
    auto secs = grig_sections(e.word);
    CHECK(secs.g0.size() <= (e.word.size() + 1) / 2);
    CHECK(secs.g1.size() <= (e.word.size() + 1) / 2);
  }
  CHECK_THROWS_AS(f_grig(13), std::invalid_argument);
}
