#include "rfg/grig.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace rfg {

namespace {

bool is_klein(char c) { return c == 'b' || c == 'c' || c == 'd'; }

void check_letters(const std::string& w) {
  for (char c : w)
    if (c != 'a' && !is_klein(c))
      throw std::invalid_argument(std::string("grig: bad letter '") + c + "'");
}

void push_reduced(std::string& w, char c) {
  while (true) {
    if (w.empty()) {
      w.push_back(c);
      return;
    }
    char t = w.back();
    if (t == c) {
      w.pop_back();
      return;
    }
    if (is_klein(t) && is_klein(c)) {
      w.pop_back();
      c = static_cast<char>('b' + 'c' + 'd' - t - c);
      continue;  // the merged letter may interact with the new top
    }
    w.push_back(c);
    return;
  }
}

bool swap_parity(const std::string& w) {
  int count = 0;
  for (char c : w)
    if (c == 'a') ++count;
  return count % 2 == 1;
}

char next_in_cycle(char c) { return c == 'b' ? 'c' : c == 'c' ? 'd' : 'b'; }

void apply_letter(char letter, std::string& s) {
  std::size_t pos = 0;
  char cur = letter;
  while (pos < s.size()) {
    if (cur == 'a') {
      s[pos] = s[pos] == '0' ? '1' : '0';
      return;
    }
    if (s[pos] == '0') {
      if (cur != 'd' && pos + 1 < s.size()) s[pos + 1] = s[pos + 1] == '0' ? '1' : '0';
      return;
    }
    cur = next_in_cycle(cur);
    ++pos;
  }
}

}  // namespace

std::string grig_reduce(const std::string& raw) {
  check_letters(raw);
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) push_reduced(out, c);
  return out;
}

bool grig_is_reduced(const std::string& w) { return grig_reduce(w) == w; }

std::string grig_inverse(const std::string& w) { return std::string(w.rbegin(), w.rend()); }

GrigSections grig_sections(const std::string& w) {
  GrigSections s;
  bool eps = false;
  for (char c : w) {
    if (c == 'a') {
      eps = !eps;
      continue;
    }
    char k0, k1;  // b = (a, c), c = (a, d), d = (1, b)
    if (c == 'b') {
      k0 = 'a';
      k1 = 'c';
    } else if (c == 'c') {
      k0 = 'a';
      k1 = 'd';
    } else {
      k0 = 0;
      k1 = 'b';
    }
    char to0 = eps ? k1 : k0;
    char to1 = eps ? k0 : k1;
    if (to0) push_reduced(s.g0, to0);
    if (to1) push_reduced(s.g1, to1);
  }
  s.swap = eps;
  return s;
}

std::string grig_act(const std::string& w, const std::string& bits) {
  check_letters(w);
  std::string s = bits;
  for (char c : w) apply_letter(c, s);
  return s;
}

std::string grig_act_sections(const std::string& w, const std::string& bits) {
  if (bits.empty() || w.empty()) return bits;
  GrigSections secs = grig_sections(w);
  char first = bits[0];
  std::string tail = grig_act_sections(first == '0' ? secs.g0 : secs.g1, bits.substr(1));
  char out = secs.swap ? (first == '0' ? '1' : '0') : first;
  return out + tail;
}

bool grig_is_trivial(const std::string& w) {
  if (w.empty()) return true;
  if (w.size() == 1) return false;
  if (swap_parity(w)) return false;
  GrigSections secs = grig_sections(w);
  return grig_is_trivial(secs.g0) && grig_is_trivial(secs.g1);
}

bool grig_equal(const std::string& u, const std::string& v) {
  return grig_is_trivial(grig_reduce(u + grig_inverse(v)));
}

bool LevelAction::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != i) return false;
  return true;
}

namespace {

std::string leaf_string(std::uint32_t index, int level) {
  std::string s(level, '0');
  for (int j = 0; j < level; ++j)
    if (index & (1u << (level - 1 - j))) s[j] = '1';
  return s;
}

std::uint32_t leaf_index(const std::string& s) {
  std::uint32_t index = 0;
  for (char c : s) index = (index << 1) | (c == '1' ? 1u : 0u);
  return index;
}

// Per-letter leaf tables, built once per level from the defining equations.
const std::array<std::vector<std::uint32_t>, 4>& letter_tables(int level) {
  static std::unordered_map<int, std::array<std::vector<std::uint32_t>, 4>> cache;
  auto it = cache.find(level);
  if (it != cache.end()) return it->second;
  std::array<std::vector<std::uint32_t>, 4> tables;
  const char letters[4] = {'a', 'b', 'c', 'd'};
  std::uint32_t leaves = 1u << level;
  for (int t = 0; t < 4; ++t) {
    tables[t].resize(leaves);
    for (std::uint32_t i = 0; i < leaves; ++i) {
      std::string s = leaf_string(i, level);
      apply_letter(letters[t], s);
      tables[t][i] = leaf_index(s);
    }
  }
  return cache.emplace(level, std::move(tables)).first->second;
}

int letter_slot(char c) { return c == 'a' ? 0 : c == 'b' ? 1 : c == 'c' ? 2 : 3; }

}  // namespace

LevelAction level_action(const std::string& w, int level) {
  if (level < 1 || level > 24) throw std::invalid_argument("level_action: level out of range");
  const auto& tables = letter_tables(level);
  LevelAction act;
  act.level = level;
  act.images.resize(1u << level);
  for (std::uint32_t i = 0; i < act.images.size(); ++i) {
    std::uint32_t x = i;
    for (char c : w) x = tables[letter_slot(c)][x];
    act.images[i] = x;
  }
  return act;
}

int grig_depth(const std::string& w0, int cap) {
  std::string w = grig_reduce(w0);
  if (grig_is_trivial(w)) throw std::invalid_argument("grig_depth: trivial element has no depth");
  for (int k = 1; k <= cap; ++k)
    if (!level_action(w, k).is_identity()) return k;
  throw std::runtime_error("grig_depth: exceeds cap " + std::to_string(cap));
}

namespace {

// Closure of the four generator actions at a fixed level. Levels <= 4 fit
// in packed 64-bit keys; level 5 (4194304 elements of 32 points) uses a
// flat element store with an open-addressed index.
std::size_t closure_order_small(int level) {
  const auto& tables = letter_tables(level);
  std::uint32_t leaves = 1u << level;
  auto pack = [leaves](const std::vector<std::uint32_t>& img) {
    std::uint64_t key = 0;
    for (std::uint32_t i = leaves; i-- > 0;) key = (key << 4) | img[i];
    return key;
  };
  std::vector<std::vector<std::uint32_t>> elems;
  std::vector<std::uint32_t> id(leaves);
  for (std::uint32_t i = 0; i < leaves; ++i) id[i] = i;
  elems.push_back(id);
  std::unordered_set<std::uint64_t> seen{pack(id)};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int t = 0; t < 4; ++t) {
      std::vector<std::uint32_t> next(leaves);
      for (std::uint32_t x = 0; x < leaves; ++x) next[x] = tables[t][elems[i][x]];
      if (seen.insert(pack(next)).second) elems.push_back(std::move(next));
    }
  return elems.size();
}

std::size_t closure_order_level5() {
  const auto& tables = letter_tables(5);
  constexpr std::uint32_t kLeaves = 32;
  using Elem = std::array<std::uint8_t, kLeaves>;
  std::vector<Elem> elems;
  elems.reserve(4500000);
  constexpr std::size_t kSlots = std::size_t{1} << 23;
  std::vector<std::uint32_t> index(kSlots, 0);  // element index + 1

  auto hash = [](const Elem& e) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t v : e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  };
  auto insert_if_new = [&](const Elem& e) {
    std::size_t slot = hash(e) & (kSlots - 1);
    while (true) {
      std::uint32_t entry = index[slot];
      if (entry == 0) {
        elems.push_back(e);
        index[slot] = static_cast<std::uint32_t>(elems.size());
        return true;
      }
      if (elems[entry - 1] == e) return false;
      slot = (slot + 1) & (kSlots - 1);
    }
  };

  Elem id{};
  for (std::uint32_t i = 0; i < kLeaves; ++i) id[i] = static_cast<std::uint8_t>(i);
  insert_if_new(id);
  std::array<Elem, 4> gens{};
  for (int t = 0; t < 4; ++t)
    for (std::uint32_t i = 0; i < kLeaves; ++i)
      gens[t][i] = static_cast<std::uint8_t>(tables[t][i]);

  for (std::size_t i = 0; i < elems.size(); ++i) {
    Elem cur = elems[i];  // copy: elems reallocates while we iterate
    for (int t = 0; t < 4; ++t) {
      Elem next;
      for (std::uint32_t x = 0; x < kLeaves; ++x) next[x] = gens[t][cur[x]];
      insert_if_new(next);
    }
  }
  return elems.size();
}

}  // namespace

BigInt gamma_order(int k, GammaMethod method) {
  if (k < 1) throw std::invalid_argument("gamma_order: level must be >= 1");
  if (method == GammaMethod::formula && k >= 3)
    return BigInt::pow2(5u * (1u << (k - 3)) + 2);
  if (k <= 4) return BigInt(static_cast<long long>(closure_order_small(k)));
  if (k == 5) return BigInt(static_cast<long long>(closure_order_level5()));
  throw std::runtime_error("gamma_order: bfs capped at level 5");
}

bool verify_deep_witness(const std::string& w0, int k) {
  std::string w = grig_reduce(w0);
  if (k < 1) return false;
  GrigSections secs = grig_sections(w);
  if (secs.swap || !grig_is_trivial(secs.g0)) return false;
  if (k == 1) return grig_equal(secs.g1, "abab");
  return verify_deep_witness(secs.g1, k - 1);
}

namespace {

// Lifts per target 1-section letter: the 0-side junk shown alongside.
//   a <- aba (junk c) or aca (junk d)   b <- d (none)
//   c <- b (junk a)                     d <- c (junk a)
// The choice at each 'a' is searched so that the junk word cancels.
bool junk_dfs(const std::string& w, std::size_t pos, std::string stack,
              std::vector<char>& choices, std::unordered_set<std::string>& dead) {
  while (pos < w.size() && w[pos] != 'a') {
    if (w[pos] == 'c' || w[pos] == 'd') push_reduced(stack, 'a');
    ++pos;
  }
  if (pos == w.size()) return stack.empty();
  std::string key = std::to_string(pos) + "|" + stack;
  if (dead.count(key)) return false;
  for (char j : {'c', 'd'}) {
    std::string s2 = stack;
    push_reduced(s2, j);
    choices.push_back(j);
    if (junk_dfs(w, pos + 1, std::move(s2), choices, dead)) return true;
    choices.pop_back();
  }
  dead.insert(std::move(key));
  return false;
}

std::string lift_one_level(const std::string& w) {
  std::vector<char> choices;
  std::unordered_set<std::string> dead;
  if (!junk_dfs(w, 0, "", choices, dead))
    throw std::runtime_error("grig_witness_deep: no junk-cancelling lift exists");
  std::string out;
  std::size_t a_seen = 0;
  for (char c : w) {
    switch (c) {
      case 'a': out += choices[a_seen++] == 'c' ? "aba" : "aca"; break;
      case 'b': out += 'd'; break;
      case 'c': out += 'b'; break;
      case 'd': out += 'c'; break;
    }
  }
  return grig_reduce(out);
}

}  // namespace

std::string grig_witness_deep(int k) {
  if (k < 1) throw std::invalid_argument("grig_witness_deep: k must be >= 1");
  std::string w = grig_reduce("abab" "d" "baba" "d");  // = (abad)^2, the level-1 element
  if (!verify_deep_witness(w, 1))
    throw std::runtime_error("grig_witness_deep: base element failed verification");
  for (int level = 1; level < k; ++level) {
    std::string next;
    // the short route: conjugation by a single generator, verified
    for (char x : {'b', 'c', 'd'}) {
      std::string cand = grig_reduce(std::string(1, x) + w + std::string(1, x));
      if (verify_deep_witness(cand, level + 1)) {
        next = cand;
        break;
      }
    }
    if (next.empty()) next = lift_one_level(w);
    if (!verify_deep_witness(next, level + 1))
      throw std::runtime_error("grig_witness_deep: lifted element failed verification");
    w = next;
  }
  return w;
}

KGrigResult k_congruence_grig(const std::string& w0) {
  std::string w = grig_reduce(w0);
  if (grig_is_trivial(w)) throw std::invalid_argument("k_congruence_grig: trivial element");
  KGrigResult r;
  r.depth = grig_depth(w);
  r.upper = gamma_order(r.depth, r.depth >= 3 ? GammaMethod::formula : GammaMethod::bfs);
  int low_level = std::max(1, r.depth - 6);
  r.lower = gamma_order(low_level, low_level >= 3 ? GammaMethod::formula : GammaMethod::bfs);
  r.witness.kind = WitnessKind::tree_level;
  r.witness.order = r.upper;
  r.witness.level = r.depth;
  return r;
}

bool verify_grig_witness(const std::string& w, const QuotientWitness& witness) {
  if (witness.kind != WitnessKind::tree_level) return false;
  if (witness.level < 1) return false;
  if (level_action(grig_reduce(w), witness.level).is_identity()) return false;
  int level = witness.level;
  BigInt expect = level >= 3 ? gamma_order(level, GammaMethod::formula)
                             : gamma_order(level, GammaMethod::bfs);
  return expect == witness.order;
}

GrigGrowth f_grig(int radius) {
  if (radius < 0 || radius > 12) throw std::invalid_argument("f_grig: radius capped at 12");
  GrigGrowth growth;

  // BFS over reduced words; group-level dedup by level-8 fingerprint with
  // an exact trivial-test fallback.
  std::vector<std::string> current{""};
  std::unordered_map<std::string, std::vector<std::size_t>> by_fingerprint;
  auto fingerprint = [](const std::string& w) {
    LevelAction act = level_action(w, 8);
    std::string fp(act.images.size(), '\0');
    for (std::size_t i = 0; i < act.images.size(); ++i) fp[i] = static_cast<char>(act.images[i]);
    return fp;
  };
  by_fingerprint[fingerprint("")].push_back(SIZE_MAX);  // identity sentinel

  BigInt best(0);
  std::string best_word;
  int best_depth = 0;
  for (int n = 1; n <= radius; ++n) {
    std::vector<std::string> next_words;
    for (const std::string& base : current)
      for (char c : {'a', 'b', 'c', 'd'}) {
        std::string cand = base;
        push_reduced(cand, c);
        if (cand.size() != base.size() + 1) continue;  // not a fresh reduced word
        std::string fp = fingerprint(cand);
        auto& bucket = by_fingerprint[fp];
        bool dup = false;
        for (std::size_t idx : bucket) {
          const std::string& other = idx == SIZE_MAX ? std::string() : growth.ball[idx].word;
          if (grig_equal(cand, other)) {
            dup = true;
            break;
          }
        }
        if (dup) continue;
        bucket.push_back(growth.ball.size());
        int depth = grig_depth(cand);
        growth.ball.push_back({cand, n, depth});
        next_words.push_back(cand);
        BigInt upper = depth >= 3 ? gamma_order(depth, GammaMethod::formula)
                                  : gamma_order(depth, GammaMethod::bfs);
        if (upper > best) {
          best = upper;
          best_word = cand;
          best_depth = depth;
        }
      }
    current = std::move(next_words);
    if (best.is_zero()) continue;
    GrigGrowthRow row;
    row.n = n;
    row.f_value = best;
    row.argmax = best_word;
    row.witness.kind = WitnessKind::tree_level;
    row.witness.order = best;
    row.witness.level = best_depth;
    growth.rows.push_back(row);
  }
  return growth;
}

}  // namespace rfg
