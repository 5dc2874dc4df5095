#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/witness.hpp"

namespace rfg {

// psi(r) = lcm(1..r); psi(0) = psi(1) = 1.
BigInt psi(unsigned r);

bool is_prime_u64(std::uint64_t n);

// Least q >= 2 with m mod q != 0, plus the Z/q witness. m must be nonzero.
struct KIntResult {
  std::uint32_t q = 0;
  QuotientWitness witness;
};
KIntResult k_int(const BigInt& m);
std::uint32_t k_int_u64(std::uint64_t m);

enum class FIntMethod { exact_scan, lcm_jump };

struct FIntResult {
  std::uint32_t value = 0;
  BigInt argmax;
};
// Max of k_int over 1..n. exact_scan walks every integer; lcm_jump
// evaluates k_int at the largest psi value <= n. The two agree on the
// value (tested invariant); argmax may differ between methods.
FIntResult f_int(std::uint64_t n, FIntMethod method);

// min over nonzero coordinates of k_int; v must be nonzero.
std::uint32_t k_int_vector(const std::vector<BigInt>& v);

struct LcmExtremalReport {
  bool pass = false;
  std::uint64_t counterexample = 0;  // an l with k(l) > k(psi(m)), if any
  std::string detail;
};
// For every m <= M checks that k_int is maximized on [1, psi(m+1)) at
// psi(m). M >= 3.
LcmExtremalReport verify_lcm_extremal(unsigned M);

// ---- quadratic integer rings Z[omega], omega = sqrt(D) or (1+sqrt(D))/2 ----

enum class SplitKind { split, inert, ramified };

struct PrimeSplit {
  std::uint32_t p = 0;
  SplitKind kind = SplitKind::inert;
  std::uint64_t residue_field_size = 0;  // p or p^2
};

struct QuadField {
  long long D = 0;  // squarefree, not 0 or 1

  bool one_mod_four() const { return ((D % 4) + 4) % 4 == 1; }
  long long discriminant() const { return one_mod_four() ? D : 4 * D; }
  // Minimal polynomial of omega is x^2 - t*x + n.
  long long minpoly_t() const { return one_mod_four() ? 1 : 0; }
  long long minpoly_n() const { return one_mod_four() ? (1 - D) / 4 : -D; }
};

void require_valid_field(const QuadField& f);

// Classification of p via the Kronecker symbol of the field discriminant.
PrimeSplit split_type(std::uint32_t p, const QuadField& f);

// Element a + b*omega in the integral basis {1, omega}.
struct QuadInt {
  BigInt a, b;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

struct KRingOptions {
  // Ideal norms are searched up to max(100, 4*ln(height)^2) unless
  // overridden; hitting the bound without a detection is an error, never a
  // silent truncation.
  std::optional<std::uint64_t> norm_bound;
};

struct KRingResult {
  BigInt size;
  QuotientWitness witness;
};
// Minimal order of a finite quotient ring O/I with g not in I. Searches
// prime-ideal powers above ascending rational primes; a minimal detecting
// ideal is always such a power since g outside a product of coprime ideal
// powers misses one factor.
KRingResult k_ring(const QuadInt& g, const QuadField& f, const KRingOptions& opts = {});

bool verify_ring_witness(const QuadInt& g, const QuadField& f, const QuotientWitness& w);

struct RatioRow {
  std::uint64_t n = 0;
  BigInt f_value;
  double ratio = 0;  // F(n) / ln(n)
};
// Empirical F(n)/ln(n) rows for Z or a quadratic ring (word metric with
// generators {1} resp. {1, omega}).
std::vector<RatioRow> ratio_table_log_z(const std::vector<std::uint64_t>& ns);
std::vector<RatioRow> ratio_table_log_quad(const QuadField& f, const std::vector<std::uint64_t>& ns);

// psi values <= limit, starting at psi(2); psi_jumps[i] = psi(m_i) for the
// strictly increasing jump sequence.
std::vector<std::uint64_t> psi_jumps_u64(std::uint64_t limit);

}  // namespace rfg
