#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfg/bigint.hpp"

namespace rfg {

enum class WitnessKind { symmetric_image, congruence_mod_m, tree_level, residue_field };

std::string witness_kind_name(WitnessKind k);

// Record of a detecting quotient. One struct for every construction the lab
// produces; the kind says which fields are meaningful.
struct QuotientWitness {
  WitnessKind kind = WitnessKind::congruence_mod_m;
  BigInt order;

  // symmetric_image: generator images as 0-based one-line permutations.
  int degree = 0;
  std::vector<std::vector<std::uint8_t>> images;

  // congruence_mod_m: modulus; residues holds cyclic generator images when
  // the quotient is Z/m rather than a matrix congruence quotient.
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> residues;

  // tree_level: truncation level k of the level quotient.
  int level = 0;

  // residue_field: prime ideal power over p with residue degree f and
  // exponent e; root is the image of the ring generator (split/ramified).
  std::uint32_t prime = 0;
  unsigned ideal_exponent = 0;
  unsigned residue_degree = 0;
  long long root = 0;

  std::string describe() const;
  std::string encode() const;
  static std::optional<QuotientWitness> decode(const std::string& s);
};

}  // namespace rfg
