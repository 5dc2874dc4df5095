#include "rfg/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace rfg {

BigInt psi(unsigned r) {
  BigInt acc(1);
  for (unsigned i = 2; i <= r; ++i) {
    std::uint32_t g = static_cast<std::uint32_t>(gcd_u64(acc.mod_u32(i), i));
    acc = acc.div_u32(g).mul_u32(i);
  }
  return acc;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

KIntResult k_int(const BigInt& m) {
  if (m.is_zero()) throw std::invalid_argument("k_int: element is trivial; k undefined");
  for (std::uint32_t q = 2;; ++q) {
    if (m.mod_u32(q) != 0) {
      KIntResult r;
      r.q = q;
      r.witness.kind = WitnessKind::congruence_mod_m;
      r.witness.order = BigInt(q);
      r.witness.modulus = q;
      r.witness.residues = {1};
      return r;
    }
  }
}

std::uint32_t k_int_u64(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("k_int: element is trivial; k undefined");
  for (std::uint32_t q = 2;; ++q)
    if (m % q != 0) return q;
}

std::vector<std::uint64_t> psi_jumps_u64(std::uint64_t limit) {
  std::vector<std::uint64_t> jumps;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 2;; ++i) {
    std::uint64_t q = acc / gcd_u64(acc, i);
    if (q > limit / i) break;  // psi(i) would exceed limit
    std::uint64_t next = q * i;
    if (next != acc) jumps.push_back(next);
    acc = next;
  }
  return jumps;
}

FIntResult f_int(std::uint64_t n, FIntMethod method) {
  if (n < 1) throw std::invalid_argument("f_int: n must be positive");
  FIntResult r;
  if (method == FIntMethod::exact_scan) {
    std::uint32_t best = 0;
    std::uint64_t arg = 1;
    for (std::uint64_t m = 1; m <= n; ++m) {
      std::uint32_t k = k_int_u64(m);
      if (k > best) {
        best = k;
        arg = m;
      }
    }
    r.value = best;
    r.argmax = BigInt(static_cast<long long>(arg));
    return r;
  }
  auto jumps = psi_jumps_u64(n);
  std::uint64_t arg = jumps.empty() ? 1 : jumps.back();
  r.value = k_int_u64(arg);
  r.argmax = BigInt(static_cast<long long>(arg));
  return r;
}

std::uint32_t k_int_vector(const std::vector<BigInt>& v) {
  std::uint32_t best = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    std::uint32_t k = k_int(x).q;
    if (best == 0 || k < best) best = k;
  }
  if (best == 0) throw std::invalid_argument("k_int_vector: zero vector");
  return best;
}

LcmExtremalReport verify_lcm_extremal(unsigned M) {
  if (M < 3) throw std::invalid_argument("verify_lcm_extremal: M must be >= 3");
  LcmExtremalReport rep;
  // psi values up to psi(M+1); u64 is comfortable for desk-scale M
  std::vector<std::uint64_t> psis(M + 2, 1);
  for (unsigned i = 2; i <= M + 1; ++i) {
    std::uint64_t g = gcd_u64(psis[i - 1], i);
    psis[i] = psis[i - 1] / g * i;
  }
  std::uint32_t running_max = k_int_u64(1);
  for (unsigned m = 2; m <= M; ++m) {
    std::uint32_t at_psi = k_int_u64(psis[m]);
    for (std::uint64_t l = psis[m] + 1; l < psis[m + 1]; ++l) {
      std::uint32_t kl = k_int_u64(l);
      if (kl > at_psi) {
        rep.counterexample = l;
        rep.detail = "k(" + std::to_string(l) + ") = " + std::to_string(kl) +
                     " exceeds k(psi(" + std::to_string(m) + ")) = " + std::to_string(at_psi);
        return rep;
      }
    }
    for (std::uint64_t l = psis[m - 1] + 1; l <= psis[m]; ++l)
      running_max = std::max(running_max, k_int_u64(l));
    if (running_max != at_psi) {
      rep.counterexample = psis[m];
      rep.detail = "max over [1, psi(" + std::to_string(m) + ")] not attained at psi";
      return rep;
    }
  }
  rep.pass = true;
  rep.detail = "k_int maximized at lcm points through psi(" + std::to_string(M + 1) + ")";
  return rep;
}

// ---- quadratic rings ----

void require_valid_field(const QuadField& f) {
  if (f.D == 0 || f.D == 1) throw std::invalid_argument("QuadField: D must not be 0 or 1");
  long long a = f.D < 0 ? -f.D : f.D;
  for (long long d = 2; d * d <= a; ++d)
    if (a % (d * d) == 0) throw std::invalid_argument("QuadField: D must be squarefree");
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (__uint128_t(r) * b) % m;
    b = (__uint128_t(b) * b) % m;
    e >>= 1;
  }
  return r;
}

int legendre_odd(long long a, std::uint32_t p) {
  long long r = a % static_cast<long long>(p);
  if (r < 0) r += p;
  if (r == 0) return 0;
  std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int kronecker_at_prime(long long a, std::uint32_t p) {
  if (p == 2) {
    long long r = ((a % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  return legendre_odd(a, p);
}

// Root of x^2 - t x + n modulo small m by direct scan.
std::optional<std::uint64_t> minpoly_root(std::uint64_t m, long long t, long long n) {
  long long tm = ((t % static_cast<long long>(m)) + m) % static_cast<long long>(m);
  long long nm = ((n % static_cast<long long>(m)) + m) % static_cast<long long>(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    __int128 v = (__int128)r * r - (__int128)tm * r + nm;
    if (((v % (long long)m) + (long long)m) % (long long)m == 0) return r;
  }
  return std::nullopt;
}

// Lift a root of the minimal polynomial mod p^e to mod p^{e+1}; the root
// stays congruent mod p^e. Valid whenever some lift exists (split primes
// always, ramified only at e = 1 handled separately).
std::optional<std::uint64_t> lift_root(std::uint64_t r, std::uint64_t pe, std::uint32_t p,
                                       long long t, long long n) {
  for (std::uint64_t add = 0; add < p; ++add) {
    std::uint64_t cand = r + add * pe;
    __int128 v = (__int128)cand * cand - (__int128)t * cand + n;
    long long m = static_cast<long long>(pe * p);
    if (((v % m) + m) % m == 0) return cand;
  }
  return std::nullopt;
}

// (a + b*root) mod m
std::uint64_t embed_mod(const QuadInt& g, std::uint64_t root, std::uint64_t m) {
  std::uint64_t am = g.a.mod_u32(static_cast<std::uint32_t>(m));
  std::uint64_t bm = g.b.mod_u32(static_cast<std::uint32_t>(m));
  return (am + bm * root) % m;
}

}  // namespace

PrimeSplit split_type(std::uint32_t p, const QuadField& f) {
  require_valid_field(f);
  if (!is_prime_u64(p)) throw std::invalid_argument("split_type: p must be prime");
  int sym = kronecker_at_prime(f.discriminant(), p);
  PrimeSplit s;
  s.p = p;
  if (sym == 0) {
    s.kind = SplitKind::ramified;
    s.residue_field_size = p;
  } else if (sym == 1) {
    s.kind = SplitKind::split;
    s.residue_field_size = p;
  } else {
    s.kind = SplitKind::inert;
    s.residue_field_size = static_cast<std::uint64_t>(p) * p;
  }
  return s;
}

namespace {

struct IdealCandidate {
  std::uint64_t norm = 0;
  QuotientWitness witness;
};

// Minimal-norm prime-ideal power above p avoiding g, if its norm is within
// bound. For a fixed prime ideal P the minimal power missing g is
// P^{v+1} with v = v_P(g).
std::optional<IdealCandidate> best_above_prime(const QuadInt& g, const QuadField& f,
                                               std::uint32_t p, std::uint64_t bound) {
  PrimeSplit s = split_type(p, f);
  long long t = f.minpoly_t(), n = f.minpoly_n();
  std::optional<IdealCandidate> best;
  auto consider = [&](std::uint64_t norm, unsigned e, unsigned deg, long long root) {
    if (norm > bound) return;
    if (best && best->norm <= norm) return;
    IdealCandidate c;
    c.norm = norm;
    c.witness.kind = WitnessKind::residue_field;
    c.witness.order = BigInt(static_cast<long long>(norm));
    c.witness.prime = p;
    c.witness.ideal_exponent = e;
    c.witness.residue_degree = deg;
    c.witness.root = root;
    best = c;
  };

  if (s.kind == SplitKind::inert) {
    // powers of (p): g in (p^j) iff p^j divides both coordinates
    unsigned j = 0;
    BigInt a = g.a, b = g.b;
    std::uint64_t norm = static_cast<std::uint64_t>(p) * p;
    while (norm <= bound && a.divisible_by(p) && b.divisible_by(p)) {
      a = a.div_u32(p);
      b = b.div_u32(p);
      ++j;
      if (norm > bound / (static_cast<std::uint64_t>(p) * p)) {
        norm = bound + 1;
        break;
      }
      norm *= static_cast<std::uint64_t>(p) * p;
    }
    consider(norm, j + 1, 2, -1);
    return best;
  }

  if (s.kind == SplitKind::ramified) {
    auto r0 = minpoly_root(p, t, n);
    if (!r0) return std::nullopt;  // cannot happen for a ramified prime
    unsigned v = 0;
    QuadInt x{g.a, g.b};
    while (true) {
      if (embed_mod(x, *r0, p) != 0) break;
      v += 1;  // x in P
      if (!(x.a.divisible_by(p) && x.b.divisible_by(p))) break;
      x.a = x.a.div_u32(p);
      x.b = x.b.div_u32(p);
      v += 1;  // and in (p) = P^2
    }
    std::uint64_t norm = 1;
    for (unsigned i = 0; i <= v; ++i) {
      if (norm > bound / p) return best;
      norm *= p;
    }
    consider(norm, v + 1, 1, static_cast<long long>(*r0));
    return best;
  }

  // split: two degree-one primes, one per root of the minimal polynomial
  long long tm = ((t % static_cast<long long>(p)) + p) % static_cast<long long>(p);
  std::vector<std::uint64_t> roots;
  for (std::uint64_t r = 0; r < p; ++r) {
    __int128 v = (__int128)r * r - (__int128)tm * r + n;
    if (((v % (long long)p) + (long long)p) % (long long)p == 0) roots.push_back(r);
  }
  for (std::uint64_t r : roots) {
    std::uint64_t mod = p, root = r;
    unsigned v = 0;
    while (embed_mod(g, root, mod) == 0) {
      if (mod > bound / p) {
        mod = bound + 1;
        break;
      }
      auto lifted = lift_root(root, mod, p, t, n);
      if (!lifted) break;
      root = *lifted;
      mod *= p;
      ++v;
    }
    if (mod <= bound) consider(mod, v + 1, 1, static_cast<long long>(root % mod));
  }
  return best;
}

}  // namespace

KRingResult k_ring(const QuadInt& g, const QuadField& f, const KRingOptions& opts) {
  require_valid_field(f);
  if (g.is_zero()) throw std::invalid_argument("k_ring: element is zero; k undefined");
  double height = std::max(g.a.to_double() < 0 ? -g.a.to_double() : g.a.to_double(),
                           g.b.to_double() < 0 ? -g.b.to_double() : g.b.to_double());
  std::uint64_t bound = opts.norm_bound
                            ? *opts.norm_bound
                            : static_cast<std::uint64_t>(
                                  std::max(100.0, 4.0 * std::log(std::max(height, 2.0)) *
                                                      std::log(std::max(height, 2.0))));
  std::optional<IdealCandidate> best;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) <= bound; ++p) {
    if (!is_prime_u64(p)) continue;
    if (best && best->norm <= p) break;  // candidates above p have norm >= p
    auto c = best_above_prime(g, f, p, bound);
    if (c && (!best || c->norm < best->norm)) best = c;
  }
  if (!best)
    throw std::runtime_error("k_ring: no detecting ideal of norm <= " + std::to_string(bound) +
                             "; bound exhausted");
  KRingResult r;
  r.size = best->witness.order;
  r.witness = best->witness;
  return r;
}

bool verify_ring_witness(const QuadInt& g, const QuadField& f, const QuotientWitness& w) {
  if (w.kind != WitnessKind::residue_field) return false;
  std::uint32_t p = w.prime;
  if (!is_prime_u64(p)) return false;
  PrimeSplit s = split_type(p, f);
  unsigned e = w.ideal_exponent;
  if (e < 1) return false;
  if (s.kind == SplitKind::inert) {
    if (w.residue_degree != 2) return false;
    // g not in (p^e) but in (p^{e-1})
    BigInt a = g.a, b = g.b;
    for (unsigned i = 0; i + 1 < e; ++i) {
      if (!(a.divisible_by(p) && b.divisible_by(p))) return false;
      a = a.div_u32(p);
      b = b.div_u32(p);
    }
    if (a.divisible_by(p) && b.divisible_by(p)) return false;
    BigInt norm = BigInt::pow(p, 2 * e);
    return norm == w.order;
  }
  if (s.kind == SplitKind::ramified) {
    auto r0 = minpoly_root(p, f.minpoly_t(), f.minpoly_n());
    if (!r0) return false;
    unsigned v = 0;
    QuadInt x{g.a, g.b};
    while (true) {
      if (embed_mod(x, *r0, p) != 0) break;
      v += 1;
      if (!(x.a.divisible_by(p) && x.b.divisible_by(p))) break;
      x.a = x.a.div_u32(p);
      x.b = x.b.div_u32(p);
      v += 1;
    }
    return e == v + 1 && BigInt::pow(p, e) == w.order;
  }
  // split: witness carries the lifted root modulo p^e
  std::uint64_t mod = 1;
  for (unsigned i = 0; i < e; ++i) mod *= p;
  std::uint64_t root = static_cast<std::uint64_t>(w.root);
  long long t = f.minpoly_t(), n = f.minpoly_n();
  __int128 val = (__int128)root * root - (__int128)t * root + n;
  if (((val % (long long)mod) + (long long)mod) % (long long)mod != 0) return false;
  if (embed_mod(g, root, mod) == 0) return false;
  if (e > 1) {
    std::uint64_t prev = mod / p;
    if (embed_mod(g, root % prev, prev) != 0) return false;  // minimality of the power
  }
  return BigInt::pow(p, e) == w.order;
}

std::vector<RatioRow> ratio_table_log_z(const std::vector<std::uint64_t>& ns) {
  std::vector<RatioRow> rows;
  for (std::uint64_t n : ns) {
    auto f = f_int(n, FIntMethod::lcm_jump);
    RatioRow row;
    row.n = n;
    row.f_value = BigInt(static_cast<long long>(f.value));
    row.ratio = n > 1 ? f.value / std::log(static_cast<double>(n)) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::vector<RatioRow> ratio_table_log_quad(const QuadField& f, const std::vector<std::uint64_t>& ns) {
  require_valid_field(f);
  std::vector<RatioRow> rows;
  for (std::uint64_t n : ns) {
    BigInt best(0);
    for (long long a = -static_cast<long long>(n); a <= static_cast<long long>(n); ++a)
      for (long long b = -static_cast<long long>(n) + std::llabs(a);
           std::llabs(a) + std::llabs(b) <= static_cast<long long>(n); ++b) {
        if (a == 0 && b == 0) continue;
        auto k = k_ring(QuadInt{BigInt(a), BigInt(b)}, f);
        if (k.size > best) best = k.size;
      }
    RatioRow row;
    row.n = n;
    row.f_value = best;
    row.ratio = n > 1 ? best.to_double() / std::log(static_cast<double>(n)) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rfg
