#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rfg/word.hpp"

namespace rfg {

// Permutation of {0..deg-1} with deg <= 16, stored as a one-line image
// table. Composition is left-to-right throughout the lab: (p * q) means
// "apply p, then q", so (p * q)[x] == q[p[x]].
struct Perm {
  static constexpr int kMaxDegree = 16;

  std::uint8_t deg = 0;
  std::array<std::uint8_t, kMaxDegree> img{};

  static Perm identity(int n);
  static Perm from_images(const std::vector<std::uint8_t>& images);

  std::uint8_t apply(std::uint8_t x) const { return img[x]; }
  Perm then(const Perm& q) const;
  Perm inverse() const;
  bool is_identity() const;
  // 4 bits per point; total order and hash key for degree <= 16.
  std::uint64_t pack() const;
  bool operator==(const Perm& o) const { return deg == o.deg && pack() == o.pack(); }
  std::string cycle_string() const;  // e.g. "(1 2)(3 4)" on 1-based points
  std::string one_line() const;      // e.g. "2,1,3"
};

// Product of images along w, leftmost letter acting first. Letters index
// images 1-based; negative letters use the inverse image.
Perm eval_word_perm(const Word& w, const std::vector<Perm>& images, int degree);

// Closure of <gens> by breadth-first multiplication; false if the element
// count would exceed cap (out then holds at least cap+1 elements).
bool closure(const std::vector<Perm>& gens, std::size_t cap, std::vector<Perm>& out);

// Exact order of <gens>; throws if the closure exceeds cap.
std::size_t group_order(const std::vector<Perm>& gens, std::size_t cap);

struct PermGroup {
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // full closure, identity first
  std::size_t order() const { return elements.size(); }
};

PermGroup enumerate_group(const std::vector<Perm>& gens, std::size_t cap);

// Lower central series on the enumerated element set; true iff it reaches
// the trivial group. class_out, when non-null, receives the nilpotency
// class (0 for the trivial group).
bool is_nilpotent(const PermGroup& g, int* class_out = nullptr);

// One representative permutation per cycle type of S_deg, sorted by
// one-line image table. The identity always comes first.
std::vector<Perm> class_representatives(int deg);

}  // namespace rfg
