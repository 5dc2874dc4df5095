#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/witness.hpp"

namespace rfg {

// Words over the generators a, b, c, d of the first Grigorchuk group.
// Reduced form: all four letters are involutions, no two equal letters are
// adjacent, and adjacent letters from {b, c, d} merge into the third
// (bc = cb = d, bd = db = c, cd = dc = b). Words act on binary strings,
// leftmost letter first.

// Confluent reduction to the form above; idempotent.
std::string grig_reduce(const std::string& raw);
bool grig_is_reduced(const std::string& w);
// Inverse of a reduced word is its reverse (every generator is an involution).
std::string grig_inverse(const std::string& w);

struct GrigSections {
  std::string g0, g1;  // actions on the 0- and 1-subtree, reduced
  bool swap = false;   // flips the first letter
};

// Wreath decomposition of a reduced word: w = (g0, g1) * (swap ? a-flip : 1).
GrigSections grig_sections(const std::string& w);

// Evaluator 1: letter-by-letter descent along the defining equations.
std::string grig_act(const std::string& w, const std::string& bits);
// Evaluator 2: recursion on sections; independent of grig_act.
std::string grig_act_sections(const std::string& w, const std::string& bits);

// Word problem by contraction: sections of a reduced word of length >= 2
// are strictly shorter, so the recursion terminates.
bool grig_is_trivial(const std::string& w);
bool grig_equal(const std::string& u, const std::string& v);

// Least k >= 1 such that w acts nontrivially on length-k strings.
int grig_depth(const std::string& w, int cap = 16);

// Action of a word on all binary strings of a fixed length; images[i] is
// the image leaf index with the first letter as the most significant bit.
struct LevelAction {
  int level = 0;
  std::vector<std::uint32_t> images;
  bool is_identity() const;
};
LevelAction level_action(const std::string& w, int level);

enum class GammaMethod { bfs, formula };

// |Gamma_k|, the image of the group at level k. The closed formula
// 2^(5*2^(k-3)+2) applies for k >= 3; levels 1 and 2 are always computed
// by closure, and bfs is available up to level 5 as an independent check.
BigInt gamma_order(int k, GammaMethod method);

// Element with all level-k sections trivial except the last, which equals
// (ab)^2. Tries conjugation by b, c, d first; when no conjugate verifies,
// builds the element by lifting each letter one level with a junk-word
// search that cancels the 0-side. Every returned word is verified
// section-by-section; failure to construct throws.
std::string grig_witness_deep(int k);
// The section-by-section verification used above, exposed for tests.
bool verify_deep_witness(const std::string& w, int k);

struct KGrigResult {
  int depth = 0;
  BigInt lower;   // de la Harpe bracket: |Gamma_(max(1, depth-6))|
  BigInt upper;   // |Gamma_depth|, with a concrete level witness
  QuotientWitness witness;
};
KGrigResult k_congruence_grig(const std::string& w);

bool verify_grig_witness(const std::string& w, const QuotientWitness& witness);

struct GrigBallEntry {
  std::string word;  // first geodesic representative in BFS order
  int length = 0;
  int depth = 0;
};
struct GrigGrowthRow {
  int n = 0;
  BigInt f_value;
  std::string argmax;
  QuotientWitness witness;
};
struct GrigGrowth {
  std::vector<GrigBallEntry> ball;  // nontrivial elements, BFS order
  std::vector<GrigGrowthRow> rows;
};
// Ball of reduced words deduplicated by group equality (level-8
// fingerprints with exact fallback), with the per-radius maximum of the
// congruence upper bound.
GrigGrowth f_grig(int radius);

}  // namespace rfg
