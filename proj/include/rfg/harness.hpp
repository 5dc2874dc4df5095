#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/witness.hpp"

namespace rfg {

inline constexpr const char* kToolVersion = "1.0.0";

// ---- growth tables ----

struct GrowthRow {
  int n = 0;
  BigInt f_value;
  std::string argmax;      // canonical element encoding
  int word_length = 0;
  QuotientWitness witness;
  std::string method;
};

struct GrowthTable {
  std::string group_id;
  std::vector<GrowthRow> rows;  // sorted by n, f_value nondecreasing
};

// group ids: z, zd(d), quad(D), free(2), heis, unitri(d), sl(2), sl(3), grig
// methods:   z: exact|lcm       zd, quad: exact
//            free(2): exact|nilpotent    heis: exact|nilpotent|congruence
//            unitri, sl, grig: congruence
struct GrowthOptions {
  int quotsearch_degree_max = 8;
  bool use_cache = true;
};
GrowthTable compute_growth(const std::string& group_id, int radius, const std::string& method,
                           const GrowthOptions& opts = {});

// Exact header: n,F,argmax,word_length,witness_kind,witness_order,method
std::string growth_csv(const GrowthTable& table);

// Re-evaluates every row's witness against its argmax element; tables
// returned by compute_growth have already passed this.
bool verify_growth_table(const GrowthTable& table);

// ---- k for a single encoded element ----

struct KValResult {
  bool found = true;
  BigInt k;
  QuotientWitness witness;
  std::string note;  // bracket / exhaustion commentary
};
KValResult compute_kval(const std::string& group_id, const std::string& element,
                        const std::string& variant, int qmax = 8);

// ---- verification suites ----

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_json() const;  // {suite, checks[]{name,status,detail}, tool_version}
};

// Suites: arith, products, monotonicity, nilpotent, sl, grig, nilquot, all.
SuiteReport verify_suite(const std::string& name);

// ---- result cache ----

// Line-delimited records under one directory (env RFG_CACHE overrides),
// format: key TAB k TAB witness-encoding TAB version. Hits are re-verified
// by the caller before use; version mismatches are ignored on load.
class ResultCache {
 public:
  explicit ResultCache(std::optional<std::string> dir = std::nullopt);
  std::optional<std::pair<BigInt, QuotientWitness>> load(const std::string& key) const;
  void store(const std::string& key, const BigInt& k, const QuotientWitness& witness);
  const std::string& directory() const { return dir_; }

 private:
  std::string dir_;
  std::string file_for(const std::string& key) const;
};

std::string cache_key(const std::string& group_id, const std::string& element,
                      const std::string& variant);

}  // namespace rfg
