#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/witness.hpp"
#include "rfg/word.hpp"

namespace rfg {

// k x k integral matrix of determinant 1 (checked on construction).
struct IntMat {
  int k = 0;
  std::vector<BigInt> e;  // row-major

  static IntMat identity(int k);
  static IntMat elementary(int k, int i, int j, const BigInt& v);  // E_ij(v), i != j
  static IntMat from_entries(int k, std::vector<BigInt> entries);  // checks det = 1

  const BigInt& at(int i, int j) const { return e[i * k + j]; }
  BigInt& at(int i, int j) { return e[i * k + j]; }
  IntMat mul(const IntMat& o) const;
  bool is_identity() const;
  bool is_identity_mod(std::uint32_t m) const;
  BigInt det() const;
  BigInt max_abs_entry() const;
  std::string key() const;
};

// All elementary matrices E_ij(+-1), i != j; 2*k*(k-1) of them.
std::vector<IntMat> sl_generators(int k);

struct SlBallEntry {
  IntMat mat;
  int length = 0;
  Word word;
};

struct SlBall {
  int k = 0;
  int radius = 0;
  std::vector<SlBallEntry> elements;
};

// Exact ball; default caps are radius 11 for k = 2 and 6 for k = 3.
SlBall sl_ball(int k, int radius, std::optional<int> radius_cap = std::nullopt);

// |SL_k(Z/m)|, multiplicative over prime powers:
// |SL_k(Z/p^e)| = p^((e-1)(k^2-1)) * |SL_k(F_p)|,
// |SL_k(F_p)| = p^(k(k-1)/2) * prod_{i=2..k} (p^i - 1).
BigInt order_slk_mod(int k, std::uint64_t m);

struct KCongruenceSlResult {
  bool found = false;
  std::uint32_t q = 0;            // the minimizing prime power
  BigInt size;                    // |SL_k(Z/q)|
  QuotientWitness witness;
  std::uint32_t m_max = 0;        // searched bound, for exhaustion reports
};
// Minimal |SL_k(Z/q)| over prime powers q <= m_max with g != I mod q.
// m_max defaults to 2*(largest entry magnitude) + 2. If g reduces to the
// identity at every prime power below m_max the result reports exhaustion.
KCongruenceSlResult k_congruence_sl(const IntMat& g, std::optional<std::uint64_t> m_max = std::nullopt);

bool verify_sl_witness(const IntMat& g, const QuotientWitness& w);

// E_12(psi(n)) in dimension k.
IntMat witness_elementary(int k, unsigned n);

struct SlLowerRow {
  unsigned n = 0;
  std::uint32_t least_q = 0;  // least detecting prime power
  BigInt order;
  bool ok = false;            // least_q > n and order >= n
};
// The lower-bound mechanism at desk scale (k = 3): every prime power <= n
// divides psi(n), so the least detecting prime power exceeds n.
std::vector<SlLowerRow> verify_sl_lower(int k, const std::vector<unsigned>& ns);

struct SlUpperReport {
  bool pass = false;
  double lambda = 0;      // measured per-step entry growth
  double c_constant = 0;  // max over n of K(n) / n^(k^2-1)
  double slope = 0;       // least-squares log-log slope of the K envelope
  std::vector<std::pair<int, BigInt>> envelope;  // n -> max congruence k
  std::string detail;
};
// Upper-bound mechanism: entry growth of ball elements is at most lambda^n
// for the measured lambda, every nonidentity element is visible in some
// congruence quotient, and the envelope's log-log slope stays below
// (k^2 - 1) + 0.5.
SlUpperReport verify_sl_upper(int k, int radius);

}  // namespace rfg
