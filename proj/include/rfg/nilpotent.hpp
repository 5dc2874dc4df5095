#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/witness.hpp"
#include "rfg/word.hpp"

namespace rfg {

// d x d integral upper unitriangular matrix.
struct UniTriMat {
  int d = 0;
  std::vector<BigInt> e;  // row-major

  static UniTriMat identity(int d);
  static UniTriMat elementary(int d, int i, int j, const BigInt& v);  // E_ij(v), i < j

  const BigInt& at(int i, int j) const { return e[i * d + j]; }
  BigInt& at(int i, int j) { return e[i * d + j]; }
  UniTriMat mul(const UniTriMat& o) const;
  bool is_identity() const;
  std::string key() const;  // canonical encoding, also the cache encoding
};

// The d-1 superdiagonal generators E_{i,i+1}(1).
std::vector<UniTriMat> unitri_generators(int d);

struct NilBallEntry {
  UniTriMat mat;
  int length = 0;
  Word word;  // a geodesic in the superdiagonal generators
};

struct NilBall {
  int d = 0;
  int radius = 0;
  std::vector<NilBallEntry> elements;  // BFS order, identity first
};

// Exact word-metric ball over the symmetric generating set, deduplicated
// by matrix equality.
NilBall unitri_ball(int d, int radius, std::size_t state_cap = 2000000);

struct KCongruenceResult {
  std::uint32_t p = 0;
  BigInt size;  // p^(d(d-1)/2)
  QuotientWitness witness;
};
// Least prime p with g mod p != identity; the quotient is the full
// unitriangular group over Z/p. An upper bound for k(g).
KCongruenceResult k_congruence_unitri(const UniTriMat& g);

bool verify_unitri_witness(const UniTriMat& g, const QuotientWitness& w);

int hirsch_unitri(int d);

enum class NilMethod { congruence, exact };

struct NilGrowthRow {
  int n = 0;
  BigInt f_value;
  Word argmax;
  QuotientWitness witness;
};
// Per-radius maxima of the chosen k-variant over the ball. The exact
// method (d = 3 only) feeds geodesic words into the minimal-quotient
// engine on the Heisenberg presentation.
std::vector<NilGrowthRow> f_nilpotent(int d, int radius, NilMethod method);

}  // namespace rfg
