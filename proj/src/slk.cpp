#include "rfg/slk.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "rfg/arith.hpp"

namespace rfg {

IntMat IntMat::identity(int k) {
  if (k < 2) throw std::invalid_argument("IntMat: dimension must be >= 2");
  IntMat m;
  m.k = k;
  m.e.assign(static_cast<std::size_t>(k) * k, BigInt(0));
  for (int i = 0; i < k; ++i) m.at(i, i) = BigInt(1);
  return m;
}

IntMat IntMat::elementary(int k, int i, int j, const BigInt& v) {
  if (i == j || i < 0 || j < 0 || i >= k || j >= k)
    throw std::invalid_argument("IntMat: E_ij needs distinct indices");
  IntMat m = identity(k);
  m.at(i, j) = v;
  return m;
}

IntMat IntMat::from_entries(int k, std::vector<BigInt> entries) {
  if (entries.size() != static_cast<std::size_t>(k) * k)
    throw std::invalid_argument("IntMat: wrong entry count");
  IntMat m;
  m.k = k;
  m.e = std::move(entries);
  if (m.det() != BigInt(1)) throw std::invalid_argument("IntMat: determinant must be 1");
  return m;
}

IntMat IntMat::mul(const IntMat& o) const {
  IntMat r;
  r.k = k;
  r.e.assign(static_cast<std::size_t>(k) * k, BigInt(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      BigInt s(0);
      for (int t = 0; t < k; ++t) s += at(i, t) * o.at(t, j);
      r.at(i, j) = s;
    }
  return r;
}

bool IntMat::is_identity() const {
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (at(i, j) != BigInt(i == j ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_identity_mod(std::uint32_t m) const {
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::uint32_t want = i == j ? 1 % m : 0;
      if (at(i, j).mod_u32(m) != want) return false;
    }
  return true;
}

namespace {

BigInt det_rec(const IntMat& m, std::vector<int> cols, int row) {
  if (static_cast<std::size_t>(m.k - row) == 1) return m.at(row, cols[0]);
  BigInt s(0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<int> rest;
    for (std::size_t c2 = 0; c2 < cols.size(); ++c2)
      if (c2 != c) rest.push_back(cols[c2]);
    BigInt term = m.at(row, cols[c]) * det_rec(m, rest, row + 1);
    s = (c % 2 == 0) ? s + term : s - term;
  }
  return s;
}

}  // namespace

BigInt IntMat::det() const {
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  return det_rec(*this, cols, 0);
}

BigInt IntMat::max_abs_entry() const {
  BigInt best(0);
  for (const auto& v : e) {
    BigInt a = v.abs();
    if (a > best) best = a;
  }
  return best;
}

std::string IntMat::key() const {
  std::string s;
  for (const auto& v : e) {
    s += v.to_string();
    s += ',';
  }
  return s;
}

std::vector<IntMat> sl_generators(int k) {
  if (k < 2) throw std::invalid_argument("sl_generators: dimension must be >= 2");
  std::vector<IntMat> gens;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      gens.push_back(IntMat::elementary(k, i, j, BigInt(1)));
      gens.push_back(IntMat::elementary(k, i, j, BigInt(-1)));
    }
  return gens;
}

SlBall sl_ball(int k, int radius, std::optional<int> radius_cap) {
  int cap = radius_cap.value_or(k == 2 ? 11 : 6);
  if (radius < 0 || radius > cap)
    throw std::invalid_argument("sl_ball: radius exceeds cap " + std::to_string(cap));
  SlBall ball;
  ball.k = k;
  ball.radius = radius;
  auto gens = sl_generators(k);
  std::vector<int> letters;
  // sl_generators interleaves E_ij(1), E_ij(-1); letters follow that order
  for (std::size_t i = 0; i < gens.size(); i += 2) {
    letters.push_back(static_cast<int>(i / 2) + 1);
    letters.push_back(-(static_cast<int>(i / 2) + 1));
  }

  std::unordered_map<std::string, std::size_t> seen;
  ball.elements.push_back({IntMat::identity(k), 0, {}});
  seen.emplace(ball.elements[0].mat.key(), 0);
  std::size_t frontier_begin = 0;
  for (int n = 1; n <= radius; ++n) {
    std::size_t frontier_end = ball.elements.size();
    for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        IntMat next = ball.elements[idx].mat.mul(gens[s]);
        std::string key = next.key();
        if (seen.count(key)) continue;
        Word w = ball.elements[idx].word;
        w.push_back(letters[s]);
        seen.emplace(std::move(key), ball.elements.size());
        ball.elements.push_back({std::move(next), n, std::move(w)});
      }
    frontier_begin = frontier_end;
  }
  return ball;
}

BigInt order_slk_mod(int k, std::uint64_t m) {
  if (k < 2) throw std::invalid_argument("order_slk_mod: dimension must be >= 2");
  if (m < 2) throw std::invalid_argument("order_slk_mod: modulus must be >= 2");
  BigInt order(1);
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;  // what is left is prime
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::uint32_t p32 = static_cast<std::uint32_t>(p);
    BigInt local = BigInt::pow(p32, (e - 1) * static_cast<unsigned>(k * k - 1));
    local = local * BigInt::pow(p32, static_cast<unsigned>(k * (k - 1) / 2));
    for (int i = 2; i <= k; ++i) {
      BigInt pi = BigInt::pow(p32, static_cast<unsigned>(i));
      local = local * (pi - BigInt(1));
    }
    order = order * local;
  }
  return order;
}

namespace {

bool is_prime_power_u64(std::uint64_t q, std::uint32_t* base = nullptr) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    std::uint64_t r = q;
    while (r % p == 0) r /= p;
    if (base) *base = static_cast<std::uint32_t>(p);
    return r == 1;
  }
  if (base) *base = static_cast<std::uint32_t>(q);
  return true;  // prime
}

}  // namespace

KCongruenceSlResult k_congruence_sl(const IntMat& g, std::optional<std::uint64_t> m_max) {
  if (g.is_identity()) throw std::invalid_argument("k_congruence_sl: identity has no detecting quotient");
  std::uint64_t bound = m_max.value_or(2 * static_cast<std::uint64_t>(g.max_abs_entry().to_double()) + 2);
  KCongruenceSlResult res;
  res.m_max = static_cast<std::uint32_t>(bound);
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (!is_prime_power_u64(q)) continue;
    if (g.is_identity_mod(static_cast<std::uint32_t>(q))) continue;
    BigInt order = order_slk_mod(g.k, q);
    if (!res.found || order < res.size) {
      res.found = true;
      res.q = static_cast<std::uint32_t>(q);
      res.size = order;
    }
  }
  if (res.found) {
    res.witness.kind = WitnessKind::congruence_mod_m;
    res.witness.order = res.size;
    res.witness.modulus = res.q;
  }
  return res;
}

bool verify_sl_witness(const IntMat& g, const QuotientWitness& w) {
  if (w.kind != WitnessKind::congruence_mod_m) return false;
  if (w.modulus < 2 || !is_prime_power_u64(w.modulus)) return false;
  if (g.is_identity_mod(w.modulus)) return false;
  return order_slk_mod(g.k, w.modulus) == w.order;
}

IntMat witness_elementary(int k, unsigned n) {
  if (k < 2) throw std::invalid_argument("witness_elementary: dimension must be >= 2");
  if (n < 1) throw std::invalid_argument("witness_elementary: n must be >= 1");
  return IntMat::elementary(k, 0, 1, psi(n));
}

std::vector<SlLowerRow> verify_sl_lower(int k, const std::vector<unsigned>& ns) {
  if (k <= 2) throw std::invalid_argument("verify_sl_lower: the lower bound needs k > 2");
  std::vector<SlLowerRow> rows;
  for (unsigned n : ns) {
    IntMat g = witness_elementary(k, n);
    SlLowerRow row;
    row.n = n;
    // least detecting prime power, scanned in ascending q
    for (std::uint64_t q = 2;; ++q) {
      if (!is_prime_power_u64(q)) continue;
      if (!g.is_identity_mod(static_cast<std::uint32_t>(q))) {
        row.least_q = static_cast<std::uint32_t>(q);
        break;
      }
    }
    row.order = order_slk_mod(k, row.least_q);
    row.ok = row.least_q > n && row.order >= BigInt(static_cast<long long>(n));
    rows.push_back(row);
  }
  return rows;
}

SlUpperReport verify_sl_upper(int k, int radius) {
  SlUpperReport rep;
  SlBall ball = sl_ball(k, radius);
  int exponent = k * k - 1;

  std::vector<BigInt> envelope(radius + 1, BigInt(0));
  double lambda = 1.0;
  bool mechanism_ok = true;
  for (const auto& entry : ball.elements) {
    if (entry.length == 0) continue;
    // proof mechanism: a nonidentity matrix has an off-diagonal nonzero
    // entry or a diagonal entry != 1
    bool visible = false;
    for (int i = 0; i < k && !visible; ++i)
      for (int j = 0; j < k && !visible; ++j)
        if ((i != j && !entry.mat.at(i, j).is_zero()) ||
            (i == j && entry.mat.at(i, j) != BigInt(1)))
          visible = true;
    if (!visible) mechanism_ok = false;
    double maxabs = entry.mat.max_abs_entry().to_double();
    if (maxabs > 1.0)
      lambda = std::max(lambda, std::pow(maxabs, 1.0 / entry.length));
    auto kc = k_congruence_sl(entry.mat);
    if (!kc.found) {
      mechanism_ok = false;
      continue;
    }
    if (kc.size > envelope[entry.length]) envelope[entry.length] = kc.size;
  }
  // running max: F is a ball maximum
  for (int n = 1; n <= radius; ++n)
    if (envelope[n] < envelope[n - 1]) envelope[n] = envelope[n - 1];

  rep.lambda = lambda;
  double cmax = 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int n = 2; n <= radius; ++n) {
    if (envelope[n].is_zero()) continue;
    double kn = envelope[n].to_double();
    cmax = std::max(cmax, kn / std::pow(static_cast<double>(n), exponent));
    double x = std::log(static_cast<double>(n)), y = std::log(kn);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  rep.c_constant = cmax;
  rep.slope = cnt >= 2 ? (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx) : 0.0;
  for (int n = 1; n <= radius; ++n) rep.envelope.emplace_back(n, envelope[n]);
  rep.pass = mechanism_ok && rep.slope <= exponent + 0.5;
  rep.detail = "lambda=" + std::to_string(rep.lambda) + " C=" + std::to_string(rep.c_constant) +
               " slope=" + std::to_string(rep.slope);
  return rep;
}

}  // namespace rfg
