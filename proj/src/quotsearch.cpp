#include "rfg/quotsearch.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace rfg {

Presentation free_presentation(int generators) {
  if (generators < 1) throw std::invalid_argument("free_presentation: need a generator");
  return Presentation{generators, {}};
}

Presentation heisenberg_presentation() {
  Word a{1}, b{2};
  Word c = commutator(a, b);
  return Presentation{2, {commutator(a, c), commutator(b, c)}};
}

Presentation z2_presentation() { return Presentation{2, {commutator(Word{1}, Word{2})}}; }

int certified_order_bound(int degree_max) {
  // Orders m below the bound are fully covered: every group of order m is
  // cyclic (handled by the residue enumeration) or acts faithfully on
  // degree_max points. The break orders are 4 (Klein four group needs 4
  // points), 8 (quaternion group needs 8) and 16 (Z2 x Z8 needs 10).
  if (degree_max < 2) throw std::invalid_argument("certified_order_bound: degree < 2");
  if (degree_max < 4) return 4;
  if (degree_max < 8) return 8;
  if (degree_max < 16) return 16;
  return 16;  // beyond Q16 territory; the scan never goes there anyway
}

namespace {

// Signed exponent sums of a word per generator.
std::vector<long long> exponent_vector(const Word& w, int gens) {
  std::vector<long long> e(gens, 0);
  for (int letter : w) e[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
  return e;
}

struct CyclicHit {
  int m = 0;
  std::vector<std::uint32_t> residues;
};

// Smallest cyclic quotient Z/m, 2 <= m < bound, detecting w. Lexicographic
// first tuple of generator residues wins.
std::optional<CyclicHit> cyclic_scan(const Presentation& pres, const Word& w, int bound) {
  int g = pres.num_generators;
  std::vector<std::vector<long long>> rel_exp;
  rel_exp.reserve(pres.relators.size());
  for (const auto& r : pres.relators) rel_exp.push_back(exponent_vector(r, g));
  auto w_exp = exponent_vector(w, g);

  for (int m = 2; m < bound; ++m) {
    std::vector<std::uint32_t> e(g, 0);
    while (true) {
      bool ok = true;
      for (const auto& re : rel_exp) {
        long long s = 0;
        for (int i = 0; i < g; ++i) s += re[i] * e[i];
        if (((s % m) + m) % m != 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        long long s = 0;
        for (int i = 0; i < g; ++i) s += w_exp[i] * e[i];
        ok = ((s % m) + m) % m != 0;
      }
      if (ok) {
        std::uint64_t d = m;
        for (int i = 0; i < g; ++i) d = gcd_u64(d, e[i]);
        ok = d == 1;
      }
      if (ok) return CyclicHit{m, e};
      int pos = g - 1;
      while (pos >= 0 && e[pos] == static_cast<std::uint32_t>(m - 1)) e[pos--] = 0;
      if (pos < 0) break;
      ++e[pos];
    }
  }
  return std::nullopt;
}

// Image tuple evaluator with materialized inverse tables.
struct TupleContext {
  int deg = 0;
  std::vector<std::array<std::uint8_t, Perm::kMaxDegree>> fwd, inv;

  void set(std::size_t slot, const Perm& p) {
    for (int i = 0; i < deg; ++i) {
      fwd[slot][i] = p.img[i];
      inv[slot][p.img[i]] = static_cast<std::uint8_t>(i);
    }
  }
  std::uint8_t walk(const Word& w, std::uint8_t x) const {
    for (int letter : w)
      x = letter > 0 ? fwd[letter - 1][x] : inv[-letter - 1][x];
    return x;
  }
  bool kills(const Word& w) const {
    for (int x = 0; x < deg; ++x)
      if (walk(w, static_cast<std::uint8_t>(x)) != x) return false;
    return true;
  }
  bool moves(const Word& w) const {
    for (int x = 0; x < deg; ++x)
      if (walk(w, static_cast<std::uint8_t>(x)) != x) return true;
    return false;
  }
};

struct ScanBest {
  int k = 0;
  int degree = 0;
  std::vector<Perm> images;
  int nil_class = 0;
};

}  // namespace

SearchResult min_quotient(const Presentation& pres, const Word& w0, const SearchOptions& opts) {
  Word w = reduce_word(w0);
  if (w.empty()) throw std::invalid_argument("min_quotient: word reduces to the empty word");
  if (pres.num_generators < 1) throw std::invalid_argument("min_quotient: empty presentation");
  if (max_generator(w) > pres.num_generators)
    throw std::out_of_range("min_quotient: word uses a generator outside the presentation");
  for (const auto& r : pres.relators)
    if (max_generator(r) > pres.num_generators)
      throw std::out_of_range("min_quotient: relator uses a generator outside the presentation");
  int dmax = std::clamp(opts.degree_max, 2, 15);
  const int cert = certified_order_bound(dmax);
  const int g = pres.num_generators;

  auto cyc = cyclic_scan(pres, w, cert);

  ScanBest best;
  best.k = cert + 1;
  std::vector<Perm> closure_buf;

  for (int d = 2; d <= dmax && best.k > 2; ++d) {
    auto reps = class_representatives(d);
    TupleContext ctx;
    ctx.deg = d;
    ctx.fwd.assign(g, {});
    ctx.inv.assign(g, {});
    std::vector<Perm> tuple(g, Perm::identity(d));

    // odometer over generator slots 1..g-1, slot 0 runs over class reps
    std::vector<std::vector<std::uint8_t>> oneline(g);
    for (auto& v : oneline) {
      v.resize(d);
      std::iota(v.begin(), v.end(), std::uint8_t{0});
    }

    std::function<void(std::size_t)> scan_slot = [&](std::size_t slot) {
      if (slot == static_cast<std::size_t>(g)) {
        for (const auto& r : pres.relators)
          if (!ctx.kills(r)) return;
        if (!ctx.moves(w)) return;
        std::size_t cap = static_cast<std::size_t>(std::min(cert, best.k - 1));
        if (!closure(tuple, cap, closure_buf)) return;
        int order = static_cast<int>(closure_buf.size());
        if (order < 2 || order >= best.k) return;
        PermGroup img{tuple, closure_buf};
        int nil_class = 0;
        bool nil = is_nilpotent(img, &nil_class);
        if (opts.filter == QuotientFilter::nilpotent && !nil) return;
        best = ScanBest{order, d, tuple, nil ? nil_class : -1};
        return;
      }
      if (slot == 0) {
        for (const Perm& rep : reps) {
          tuple[0] = rep;
          ctx.set(0, rep);
          scan_slot(1);
          if (best.k == 2) return;
        }
        return;
      }
      std::vector<std::uint8_t>& ol = oneline[slot];
      std::iota(ol.begin(), ol.end(), std::uint8_t{0});
      do {
        Perm p = Perm::identity(d);
        std::copy(ol.begin(), ol.end(), p.img.begin());
        tuple[slot] = p;
        ctx.set(slot, p);
        scan_slot(slot + 1);
        if (best.k == 2) return;
      } while (std::next_permutation(ol.begin(), ol.end()));
    };
    scan_slot(0);
  }

  SearchResult res;
  res.certified_bound = cert;
  bool have_scan = best.k <= cert;
  bool have_cyc = cyc.has_value();
  if (!have_scan && !have_cyc) return res;

  if (have_scan && (!have_cyc || best.k <= cyc->m)) {
    res.found = true;
    res.k = best.k;
    res.nilpotency_class = best.nil_class;
    res.witness.kind = WitnessKind::symmetric_image;
    res.witness.order = BigInt(best.k);
    res.witness.degree = best.degree;
    for (const Perm& p : best.images)
      res.witness.images.emplace_back(p.img.begin(), p.img.begin() + p.deg);
  } else {
    res.found = true;
    res.k = cyc->m;
    res.nilpotency_class = 1;
    res.witness.kind = WitnessKind::congruence_mod_m;
    res.witness.order = BigInt(cyc->m);
    res.witness.modulus = static_cast<std::uint32_t>(cyc->m);
    res.witness.residues = cyc->residues;
  }
  return res;
}

bool verify_quotient_witness(const Presentation& pres, const Word& w0, const QuotientWitness& witness) {
  Word w = reduce_word(w0);
  if (w.empty()) return false;
  if (witness.kind == WitnessKind::symmetric_image) {
    if (witness.images.size() != static_cast<std::size_t>(pres.num_generators)) return false;
    std::vector<Perm> images;
    for (const auto& one : witness.images) {
      if (one.size() != static_cast<std::size_t>(witness.degree)) return false;
      images.push_back(Perm::from_images(one));
    }
    for (const auto& r : pres.relators)
      if (!eval_word_perm(r, images, witness.degree).is_identity()) return false;
    if (eval_word_perm(w, images, witness.degree).is_identity()) return false;
    std::vector<Perm> elems;
    long long k = witness.order.to_i64();
    if (!closure(images, static_cast<std::size_t>(k), elems)) return false;
    return static_cast<long long>(elems.size()) == k;
  }
  if (witness.kind == WitnessKind::congruence_mod_m) {
    int m = static_cast<int>(witness.modulus);
    if (m < 2 || witness.order != BigInt(m)) return false;
    if (witness.residues.size() != static_cast<std::size_t>(pres.num_generators)) return false;
    auto eval = [&](const Word& word) {
      long long s = 0;
      for (int letter : word) {
        long long e = witness.residues[std::abs(letter) - 1];
        s += letter > 0 ? e : -e;
      }
      return ((s % m) + m) % m;
    };
    for (const auto& r : pres.relators)
      if (eval(r) != 0) return false;
    if (eval(w) == 0) return false;
    std::uint64_t d = m;
    for (auto e : witness.residues) d = gcd_u64(d, e);
    return d == 1;
  }
  return false;
}

}  // namespace rfg
