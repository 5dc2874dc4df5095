#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "rfg/harness.hpp"

using namespace rfg;

namespace {

struct CacheDirGuard {
  std::string dir;
  explicit CacheDirGuard(const std::string& d) : dir(d) {
    std::filesystem::remove_all(dir);
    setenv("RFG_CACHE", dir.c_str(), 1);
  }
  ~CacheDirGuard() {
    unsetenv("RFG_CACHE");
    std::filesystem::remove_all(dir);
  }
};

}  // namespace

TEST_CASE("growth over Z") {
  GrowthTable t = compute_growth("z", 6, "exact");
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[5].f_value == BigInt(4));
  CHECK(t.rows[5].argmax == "6");
  CHECK(t.rows[0].f_value == BigInt(2));
  GrowthTable j = compute_growth("z", 6, "lcm");
  for (int i = 0; i < 6; ++i) CHECK(j.rows[i].f_value == t.rows[i].f_value);
  std::string csv = growth_csv(t);
  CHECK(csv.rfind("n,F,argmax,word_length,witness_kind,witness_order,method\n", 0) == 0);
  CHECK(csv.find("6,4,6,6,congruence-mod-m,4,exact-scan") != std::string::npos);
}

TEST_CASE("growth over Z^2 equals growth over Z") {
  GrowthTable t2 = compute_growth("zd(2)", 10, "exact");
  GrowthTable t1 = compute_growth("z", 10, "exact");
  REQUIRE(t2.rows.size() == 10);
  for (int i = 0; i < 10; ++i) CHECK(t2.rows[i].f_value == t1.rows[i].f_value);
}

TEST_CASE("growth over free(2) at radius 2") {
  CacheDirGuard guard("test_cache_free");
  GrowthTable t = compute_growth("free(2)", 2, "exact");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].f_value == BigInt(2));  // single letters die in Z/2
  CHECK(t.rows[1].f_value == BigInt(3));  // squares need Z/3
}

TEST_CASE("growth over the grigorchuk group") {
  GrowthTable t = compute_growth("grig", 3, "congruence");
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].f_value == BigInt(128));
  CHECK(t.rows[0].witness.order == BigInt(128));
  CHECK(compute_growth("grig", 0, "congruence").rows.empty());
}

TEST_CASE("growth over unitri(4) and a quadratic ring") {
  GrowthTable u = compute_growth("unitri(4)", 2, "congruence");
  REQUIRE(u.rows.size() == 2);
  CHECK(u.rows[0].f_value == BigInt(64));  // p = 2, 2^h with h = 6
  GrowthTable q = compute_growth("quad(-1)", 3, "exact");
  REQUIRE(q.rows.size() == 3);
  CHECK(q.rows[0].f_value == BigInt(2));  // units survive in the norm-2 residue field
  CHECK(q.rows[1].f_value == BigInt(5));  // 2 hides in (1+i)^2 and escapes at norm 5
  CHECK(q.rows[2].f_value == BigInt(5));
  CHECK_THROWS_AS(compute_growth("unitri(3)", 2, "exact"), std::invalid_argument);
}

TEST_CASE("kval dispatch") {
  CHECK(compute_kval("z", "2520", "any").k == BigInt(11));
  CHECK(compute_kval("zd(2)", "6,2520", "any").k == BigInt(4));
  CHECK(compute_kval("quad(-1)", "2,0", "any").k == BigInt(5));
  CHECK(compute_kval("free(2)", "ABab", "any").k == BigInt(6));
  CHECK(compute_kval("free(2)", "ABab", "nilpotent").k == BigInt(8));
  CHECK(compute_kval("heis", "ABab", "any").k == BigInt(8));
  CHECK(compute_kval("heis", "ABab", "congruence").k == BigInt(8));
  CHECK(compute_kval("sl(2)", "1,6,0,1", "congruence").k == BigInt(48));
  CHECK(compute_kval("unitri(3)", "1,4,6,0,1,0,0,0,1", "congruence").k == BigInt(27));
  auto grig = compute_kval("grig", "abab", "congruence");
  CHECK(grig.k == BigInt(8));
  CHECK_THROWS_AS(compute_kval("nope", "1", "any"), std::invalid_argument);
}

TEST_CASE("tables re-verify their witnesses") {
  CHECK(verify_growth_table(compute_growth("z", 6, "exact")));
  CHECK(verify_growth_table(compute_growth("sl(2)", 3, "congruence")));
  CHECK(verify_growth_table(compute_growth("grig", 4, "congruence")));
  GrowthTable t = compute_growth("z", 6, "exact");
  t.rows[5].witness.modulus = 2;  // argmax 6 dies mod 2: a wrong witness must fail
  t.rows[5].witness.order = BigInt(2);
  t.rows[5].f_value = BigInt(2);
  CHECK_FALSE(verify_growth_table(t));
}

TEST_CASE("cache transparency: cold and warm runs are byte-identical") {
  CacheDirGuard guard("test_cache_transparency");
  GrowthTable cold = compute_growth("heis", 3, "exact");
  std::string cold_csv = growth_csv(cold);
  CHECK(std::filesystem::exists(guard.dir + "/records.tsv"));
  GrowthTable warm = compute_growth("heis", 3, "exact");
  CHECK(growth_csv(warm) == cold_csv);
}

TEST_CASE("cache records reload and verify") {
  CacheDirGuard guard("test_cache_roundtrip");
  ResultCache cache;
  QuotientWitness w;
  w.kind = WitnessKind::congruence_mod_m;
  w.order = BigInt(4);
  w.modulus = 4;
  w.residues = {1, 0};
  cache.store(cache_key("z", "6", "any"), BigInt(4), w);
  auto hit = cache.load(cache_key("z", "6", "any"));
  REQUIRE(hit.has_value());
  CHECK(hit->first == BigInt(4));
  CHECK(hit->second.encode() == w.encode());
  CHECK_FALSE(cache.load(cache_key("z", "7", "any")).has_value());
}

TEST_CASE("witness encoding round trip") {
  QuotientWitness w;
  w.kind = WitnessKind::symmetric_image;
  w.order = BigInt(6);
  w.degree = 3;
  w.images = {{1, 0, 2}, {0, 2, 1}};
  auto back = QuotientWitness::decode(w.encode());
  REQUIRE(back.has_value());
  CHECK(back->encode() == w.encode());
  CHECK(back->images == w.images);
  QuotientWitness t;
  t.kind = WitnessKind::tree_level;
  t.order = BigInt::pow2(22);
  t.level = 5;
  auto back2 = QuotientWitness::decode(t.encode());
  REQUIRE(back2.has_value());
  CHECK(back2->level == 5);
  CHECK(back2->order == BigInt(4194304));
  CHECK_FALSE(QuotientWitness::decode("garbage").has_value());
}

TEST_CASE("suite report shape") {
  SuiteReport rep = verify_suite("products");
  CHECK(rep.suite == "products");
  REQUIRE_FALSE(rep.checks.empty());
  CHECK(rep.all_pass());
  std::string json = rep.to_json();
  CHECK(json.find("\"suite\": \"products\"") != std::string::npos);
  CHECK(json.find("\"tool_version\": \"1.0.0\"") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK_THROWS_AS(verify_suite("bogus"), std::invalid_argument);
}
