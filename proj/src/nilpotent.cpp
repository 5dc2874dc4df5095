#include "rfg/nilpotent.hpp"

#include <stdexcept>
#include <unordered_map>

#include "rfg/arith.hpp"
#include "rfg/quotsearch.hpp"

namespace rfg {

UniTriMat UniTriMat::identity(int d) {
  if (d < 2) throw std::invalid_argument("UniTriMat: dimension must be >= 2");
  UniTriMat m;
  m.d = d;
  m.e.assign(static_cast<std::size_t>(d) * d, BigInt(0));
  for (int i = 0; i < d; ++i) m.at(i, i) = BigInt(1);
  return m;
}

UniTriMat UniTriMat::elementary(int d, int i, int j, const BigInt& v) {
  if (i >= j || i < 0 || j >= d) throw std::invalid_argument("UniTriMat: E_ij needs i < j");
  UniTriMat m = identity(d);
  m.at(i, j) = v;
  return m;
}

UniTriMat UniTriMat::mul(const UniTriMat& o) const {
  UniTriMat r = identity(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      BigInt s(0);
      for (int k = i; k <= j; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

bool UniTriMat::is_identity() const {
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

std::string UniTriMat::key() const {
  std::string s;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      s += at(i, j).to_string();
      s += ',';
    }
  return s;
}

std::vector<UniTriMat> unitri_generators(int d) {
  if (d < 2) throw std::invalid_argument("unitri_generators: dimension must be >= 2");
  std::vector<UniTriMat> gens;
  for (int i = 0; i + 1 < d; ++i) gens.push_back(UniTriMat::elementary(d, i, i + 1, BigInt(1)));
  return gens;
}

NilBall unitri_ball(int d, int radius, std::size_t state_cap) {
  if (radius < 0) throw std::invalid_argument("unitri_ball: radius must be >= 0");
  NilBall ball;
  ball.d = d;
  ball.radius = radius;
  auto gens = unitri_generators(d);
  std::vector<UniTriMat> sym;
  std::vector<int> letters;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    sym.push_back(gens[i]);
    letters.push_back(static_cast<int>(i) + 1);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    UniTriMat inv = UniTriMat::elementary(d, static_cast<int>(i), static_cast<int>(i) + 1, BigInt(-1));
    sym.push_back(inv);
    letters.push_back(-(static_cast<int>(i) + 1));
  }

  std::unordered_map<std::string, std::size_t> seen;
  ball.elements.push_back({UniTriMat::identity(d), 0, {}});
  seen.emplace(ball.elements[0].mat.key(), 0);
  std::size_t frontier_begin = 0;
  for (int n = 1; n <= radius; ++n) {
    std::size_t frontier_end = ball.elements.size();
    for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx)
      for (std::size_t s = 0; s < sym.size(); ++s) {
        UniTriMat next = ball.elements[idx].mat.mul(sym[s]);
        std::string key = next.key();
        if (seen.count(key)) continue;
        if (ball.elements.size() >= state_cap)
          throw std::runtime_error("unitri_ball: state cap exceeded");
        Word w = ball.elements[idx].word;
        w.push_back(letters[s]);
        seen.emplace(std::move(key), ball.elements.size());
        ball.elements.push_back({std::move(next), n, std::move(w)});
      }
    frontier_begin = frontier_end;
  }
  return ball;
}

KCongruenceResult k_congruence_unitri(const UniTriMat& g) {
  if (g.is_identity()) throw std::invalid_argument("k_congruence_unitri: identity has no detecting quotient");
  for (std::uint32_t p = 2;; ++p) {
    if (!is_prime_u64(p)) continue;
    bool nonzero = false;
    for (int i = 0; i < g.d && !nonzero; ++i)
      for (int j = i + 1; j < g.d && !nonzero; ++j)
        if (g.at(i, j).mod_u32(p) != 0) nonzero = true;
    if (!nonzero) continue;
    KCongruenceResult r;
    r.p = p;
    r.size = BigInt::pow(p, static_cast<unsigned>(hirsch_unitri(g.d)));
    r.witness.kind = WitnessKind::congruence_mod_m;
    r.witness.order = r.size;
    r.witness.modulus = p;
    return r;
  }
}

bool verify_unitri_witness(const UniTriMat& g, const QuotientWitness& w) {
  if (w.kind != WitnessKind::congruence_mod_m) return false;
  std::uint32_t p = w.modulus;
  if (!is_prime_u64(p)) return false;
  bool nonzero = false;
  for (int i = 0; i < g.d; ++i)
    for (int j = i + 1; j < g.d; ++j)
      if (g.at(i, j).mod_u32(p) != 0) nonzero = true;
  return nonzero && w.order == BigInt::pow(p, static_cast<unsigned>(hirsch_unitri(g.d)));
}

int hirsch_unitri(int d) {
  if (d < 2) throw std::invalid_argument("hirsch_unitri: dimension must be >= 2");
  return d * (d - 1) / 2;
}

std::vector<NilGrowthRow> f_nilpotent(int d, int radius, NilMethod method) {
  if (method == NilMethod::exact && d != 3)
    throw std::invalid_argument("f_nilpotent: exact method is implemented for d = 3 only");
  if (method == NilMethod::exact && radius > 8)
    throw std::invalid_argument("f_nilpotent: exact method capped at radius 8");
  NilBall ball = unitri_ball(d, radius);
  Presentation heis = heisenberg_presentation();

  std::vector<NilGrowthRow> rows;
  BigInt best(0);
  Word best_word;
  QuotientWitness best_witness;
  std::size_t idx = 0;
  for (int n = 1; n <= radius; ++n) {
    while (idx < ball.elements.size() && ball.elements[idx].length <= n) {
      const auto& entry = ball.elements[idx];
      ++idx;
      if (entry.length == 0) continue;
      BigInt k;
      QuotientWitness witness;
      if (method == NilMethod::congruence) {
        auto r = k_congruence_unitri(entry.mat);
        k = r.size;
        witness = r.witness;
      } else {
        auto r = min_quotient(heis, entry.word);
        if (!r.found)
          throw std::runtime_error("f_nilpotent: exact engine exhausted below its certified bound");
        k = BigInt(r.k);
        witness = r.witness;
      }
      if (k > best) {
        best = k;
        best_word = entry.word;
        best_witness = witness;
      }
    }
    if (best.is_zero()) continue;  // radius-0 style row: nothing nontrivial yet
    NilGrowthRow row;
    row.n = n;
    row.f_value = best;
    row.argmax = best_word;
    row.witness = best_witness;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rfg
