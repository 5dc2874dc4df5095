#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rfg/perm.hpp"
#include "rfg/witness.hpp"
#include "rfg/word.hpp"

namespace rfg {

struct Presentation {
  int num_generators = 0;
  std::vector<Word> relators;
};

Presentation free_presentation(int generators);
// <a,b | [a,[a,b]], [b,[a,b]]>, the integral Heisenberg group.
Presentation heisenberg_presentation();
// <a,b | [a,b]>, the rank-2 lattice.
Presentation z2_presentation();

enum class QuotientFilter { any, nilpotent };

struct SearchOptions {
  int degree_max = 8;  // symmetric-group degree scanned exhaustively
  QuotientFilter filter = QuotientFilter::any;
};

// Largest K such that every group of order < K either embeds in the
// symmetric group of the scanned degree or is cyclic (cyclic images are
// enumerated separately, through exponent arithmetic). Finding nothing
// below K certifies k >= K; a hit at order <= K is exactly minimal.
int certified_order_bound(int degree_max);

struct SearchResult {
  bool found = false;
  int k = 0;                 // order of the minimal detecting quotient
  QuotientWitness witness;   // meaningful when found
  int certified_bound = 0;   // nothing found: k >= certified_bound
  int nilpotency_class = 0;  // of the witness image, symmetric-image only
};

// Smallest finite quotient of `pres` (optionally restricted to nilpotent
// quotients) in which `w` survives. Scans generator-image tuples over
// symmetric groups of degree 2..degree_max, first generator restricted to
// conjugacy-class representatives, and minimizes the image order; cyclic
// quotients of every order below the certified bound are enumerated
// directly. Deterministic: the witness is the first hit of minimal order
// in (degree, tuple) scan order. The engine never claims w is trivial.
SearchResult min_quotient(const Presentation& pres, const Word& w, const SearchOptions& opts = {});

// Independent re-check of a returned witness: relators die, w survives,
// and the image order equals the recorded k.
bool verify_quotient_witness(const Presentation& pres, const Word& w, const QuotientWitness& witness);

}  // namespace rfg
