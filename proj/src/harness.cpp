#include "rfg/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rfg/arith.hpp"
#include "rfg/grig.hpp"
#include "rfg/nilpotent.hpp"
#include "rfg/quotsearch.hpp"
#include "rfg/slk.hpp"

namespace rfg {

namespace {

struct GroupId {
  std::string kind;  // z, zd, quad, free, heis, unitri, sl, grig
  long long param = 0;
};

GroupId parse_group(const std::string& id) {
  auto open = id.find('(');
  if (open == std::string::npos) {
    if (id == "z" || id == "heis" || id == "grig") return {id, 0};
    throw std::invalid_argument("unknown group id: " + id);
  }
  auto close = id.find(')', open);
  if (close == std::string::npos || close + 1 != id.size())
    throw std::invalid_argument("unknown group id: " + id);
  GroupId g;
  g.kind = id.substr(0, open);
  g.param = std::stoll(id.substr(open + 1, close - open - 1));
  if (g.kind == "zd" && g.param >= 1 && g.param <= 4) return g;
  if (g.kind == "quad") return g;
  if (g.kind == "free" && g.param == 2) return g;
  if (g.kind == "unitri" && g.param >= 2 && g.param <= 5) return g;
  if (g.kind == "sl" && (g.param == 2 || g.param == 3)) return g;
  throw std::invalid_argument("unknown group id: " + id);
}

std::string encode_vector(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string encode_mat_entries(const std::vector<BigInt>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + e[i].to_string();
  return s;
}

// All reduced words of the free group on `gens` generators up to `radius`.
std::vector<Word> reduced_words_up_to(int gens, int radius) {
  std::vector<Word> all{{}};
  std::size_t level_begin = 0;
  for (int n = 1; n <= radius; ++n) {
    std::size_t level_end = all.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int letter = -gens; letter <= gens; ++letter) {
        if (letter == 0) continue;
        if (!all[i].empty() && all[i].back() == -letter) continue;
        Word w = all[i];
        w.push_back(letter);
        all.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return all;
}

QuotientFilter filter_for(const std::string& method) {
  if (method == "nilpotent") return QuotientFilter::nilpotent;
  return QuotientFilter::any;
}

// Engine call with optional cache; cached witnesses are re-verified and
// recomputed on any mismatch.
SearchResult cached_min_quotient(const Presentation& pres, const Word& w,
                                 const std::string& group_id, const std::string& variant,
                                 const GrowthOptions& opts, ResultCache* cache) {
  SearchOptions sopts;
  sopts.degree_max = opts.quotsearch_degree_max;
  sopts.filter = variant == "nilpotent" ? QuotientFilter::nilpotent : QuotientFilter::any;
  std::string key = cache_key(group_id, format_word(w), variant);
  if (cache) {
    if (auto hit = cache->load(key)) {
      if (verify_quotient_witness(pres, w, hit->second) && hit->second.order == hit->first) {
        SearchResult r;
        r.found = true;
        r.k = static_cast<int>(hit->first.to_i64());
        r.witness = hit->second;
        r.certified_bound = certified_order_bound(sopts.degree_max);
        return r;
      }
    }
  }
  SearchResult r = min_quotient(pres, w, sopts);
  if (cache && r.found) cache->store(key, BigInt(r.k), r.witness);
  return r;
}

void append_row(GrowthTable& table, int n, const BigInt& f, const std::string& argmax,
                int word_length, const QuotientWitness& witness, const std::string& method) {
  GrowthRow row;
  row.n = n;
  row.f_value = f;
  row.argmax = argmax;
  row.word_length = word_length;
  row.witness = witness;
  row.method = method;
  table.rows.push_back(std::move(row));
}

}  // namespace

std::string cache_key(const std::string& group_id, const std::string& element,
                      const std::string& variant) {
  return group_id + "|" + element + "|" + variant;
}

GrowthTable compute_growth(const std::string& group_id, int radius, const std::string& method,
                           const GrowthOptions& opts) {
  if (radius < 0) throw std::invalid_argument("compute_growth: negative radius");
  GroupId gid = parse_group(group_id);
  GrowthTable table;
  table.group_id = group_id;
  std::optional<ResultCache> cache;
  if (opts.use_cache) cache.emplace();

  if (gid.kind == "z") {
    FIntMethod m;
    std::string mname;
    if (method == "exact" || method == "exact-scan") {
      m = FIntMethod::exact_scan;
      mname = "exact-scan";
    } else if (method == "lcm" || method == "lcm-jump") {
      m = FIntMethod::lcm_jump;
      mname = "lcm-jump";
    } else {
      throw std::invalid_argument("z: method must be exact|lcm");
    }
    for (int n = 1; n <= radius; ++n) {
      auto f = f_int(static_cast<std::uint64_t>(n), m);
      auto ki = k_int(f.argmax);
      append_row(table, n, BigInt(static_cast<long long>(f.value)), f.argmax.to_string(),
                 static_cast<int>(f.argmax.to_i64()), ki.witness, mname);
    }
  } else if (gid.kind == "zd") {
    if (method != "exact") throw std::invalid_argument("zd: method must be exact");
    int d = static_cast<int>(gid.param);
    if (radius > 60) throw std::invalid_argument("zd: radius capped at 60");
    std::uint32_t best = 0;
    std::vector<long long> best_v;
    for (int n = 1; n <= radius; ++n) {
      // new boxes only: some coordinate hits +-n
      std::vector<long long> v(d, -n);
      while (true) {
        bool boundary = false;
        for (long long c : v)
          if (c == n || c == -n) boundary = true;
        bool zero = true;
        for (long long c : v)
          if (c != 0) zero = false;
        if (boundary && !zero) {
          std::vector<BigInt> bv;
          for (long long c : v) bv.emplace_back(c);
          std::uint32_t k = k_int_vector(bv);
          if (k > best) {
            best = k;
            best_v = v;
          }
        }
        int pos = d - 1;
        while (pos >= 0 && v[pos] == n) v[pos--] = -n;
        if (pos < 0) break;
        ++v[pos];
      }
      QuotientWitness w;
      w.kind = WitnessKind::congruence_mod_m;
      w.order = BigInt(best);
      w.modulus = best;
      long long linf = 0;
      for (long long c : best_v) linf = std::max(linf, std::llabs(c));
      append_row(table, n, BigInt(best), encode_vector(best_v), static_cast<int>(linf), w, "exact");
    }
  } else if (gid.kind == "quad") {
    if (method != "exact") throw std::invalid_argument("quad: method must be exact");
    QuadField f{gid.param};
    require_valid_field(f);
    if (radius > 40) throw std::invalid_argument("quad: radius capped at 40");
    BigInt best(0);
    std::string best_enc;
    int best_len = 0;
    QuotientWitness best_w;
    for (int n = 1; n <= radius; ++n) {
      for (long long a = -n; a <= n; ++a)
        for (long long b = -(n - std::llabs(a)); std::llabs(a) + std::llabs(b) <= n; ++b) {
          if (a == 0 && b == 0) continue;
          if (std::llabs(a) + std::llabs(b) != n) continue;  // new shell only
          auto kr = k_ring(QuadInt{BigInt(a), BigInt(b)}, f);
          if (kr.size > best) {
            best = kr.size;
            best_enc = std::to_string(a) + "," + std::to_string(b);
            best_len = n;
            best_w = kr.witness;
          }
        }
      append_row(table, n, best, best_enc, best_len, best_w, "exact");
    }
  } else if (gid.kind == "free") {
    if (method != "exact" && method != "nilpotent")
      throw std::invalid_argument("free: method must be exact|nilpotent");
    if (radius > 6) throw std::invalid_argument("free: radius capped at 6");
    Presentation pres = free_presentation(2);
    std::string variant = method == "exact" ? "any" : "nilpotent";
    auto words = reduced_words_up_to(2, radius);
    BigInt best(0);
    std::string best_enc;
    int best_len = 0;
    QuotientWitness best_w;
    std::size_t idx = 1;  // skip the empty word
    for (int n = 1; n <= radius; ++n) {
      for (; idx < words.size() && static_cast<int>(words[idx].size()) <= n; ++idx) {
        auto r = cached_min_quotient(pres, words[idx], group_id, variant, opts,
                                     cache ? &*cache : nullptr);
        if (!r.found)
          throw std::runtime_error("free growth: engine exhausted below its certified bound at word " +
                                   format_word(words[idx]));
        if (BigInt(r.k) > best) {
          best = BigInt(r.k);
          best_enc = format_word(words[idx]);
          best_len = static_cast<int>(words[idx].size());
          best_w = r.witness;
        }
      }
      append_row(table, n, best, best_enc, best_len, best_w, method);
    }
  } else if (gid.kind == "heis" || gid.kind == "unitri") {
    int d = gid.kind == "heis" ? 3 : static_cast<int>(gid.param);
    bool exact_mode = method == "exact" || method == "nilpotent";
    if (gid.kind == "unitri" && exact_mode)
      throw std::invalid_argument("unitri: method must be congruence");
    if (!exact_mode && method != "congruence")
      throw std::invalid_argument(gid.kind + ": method must be exact|nilpotent|congruence");
    if (exact_mode && radius > 8) throw std::invalid_argument("heis exact: radius capped at 8");
    NilBall ball = unitri_ball(d, radius);
    Presentation pres = heisenberg_presentation();
    std::string variant = method == "nilpotent" ? "nilpotent" : "any";
    BigInt best(0);
    std::string best_enc;
    int best_len = 0;
    QuotientWitness best_w;
    std::size_t idx = 1;
    for (int n = 1; n <= radius; ++n) {
      for (; idx < ball.elements.size() && ball.elements[idx].length <= n; ++idx) {
        const auto& entry = ball.elements[idx];
        BigInt k;
        QuotientWitness w;
        if (exact_mode) {
          auto r = cached_min_quotient(pres, entry.word, group_id, variant, opts,
                                       cache ? &*cache : nullptr);
          if (!r.found)
            throw std::runtime_error("heis growth: engine exhausted below its certified bound at " +
                                     format_word(entry.word));
          k = BigInt(r.k);
          w = r.witness;
        } else {
          auto r = k_congruence_unitri(entry.mat);
          k = r.size;
          w = r.witness;
        }
        if (k > best) {
          best = k;
          best_enc = format_word(entry.word);
          best_len = entry.length;
          best_w = w;
        }
      }
      append_row(table, n, best, best_enc, best_len, best_w, method);
    }
  } else if (gid.kind == "sl") {
    if (method != "congruence") throw std::invalid_argument("sl: method must be congruence");
    int k = static_cast<int>(gid.param);
    SlBall ball = sl_ball(k, radius);
    BigInt best(0);
    std::string best_enc;
    int best_len = 0;
    QuotientWitness best_w;
    std::size_t idx = 1;
    for (int n = 1; n <= radius; ++n) {
      for (; idx < ball.elements.size() && ball.elements[idx].length <= n; ++idx) {
        const auto& entry = ball.elements[idx];
        auto r = k_congruence_sl(entry.mat);
        if (!r.found) throw std::runtime_error("sl growth: congruence scan exhausted");
        if (r.size > best) {
          best = r.size;
          best_enc = encode_mat_entries(entry.mat.e);
          best_len = entry.length;
          best_w = r.witness;
        }
      }
      append_row(table, n, best, best_enc, best_len, best_w, "congruence");
    }
  } else if (gid.kind == "grig") {
    if (method != "congruence") throw std::invalid_argument("grig: method must be congruence");
    GrigGrowth growth = f_grig(radius);
    for (const auto& row : growth.rows)
      append_row(table, row.n, row.f_value, row.argmax, static_cast<int>(row.argmax.size()),
                 row.witness, "congruence");
  }

  for (std::size_t i = 1; i < table.rows.size(); ++i)
    if (table.rows[i].f_value < table.rows[i - 1].f_value)
      throw std::logic_error("compute_growth: table not monotone");
  if (!verify_growth_table(table)) throw std::logic_error("compute_growth: witness re-verification failed");
  return table;
}

bool verify_growth_table(const GrowthTable& table) {
  GroupId gid = parse_group(table.group_id);
  auto parse_ints = [](const std::string& s) {
    std::vector<BigInt> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(BigInt::from_decimal(part));
    return out;
  };
  auto word_to_unitri = [](int d, const Word& w) {
    auto gens = unitri_generators(d);
    UniTriMat m = UniTriMat::identity(d);
    for (int letter : w)
      m = m.mul(letter > 0 ? gens[letter - 1]
                           : UniTriMat::elementary(d, -letter - 1, -letter, BigInt(-1)));
    return m;
  };
  for (const auto& row : table.rows) {
    const QuotientWitness& w = row.witness;
    if (row.f_value != w.order) return false;
    if (gid.kind == "z" || gid.kind == "zd") {
      if (w.kind != WitnessKind::congruence_mod_m || w.modulus < 2) return false;
      bool moved = false;
      for (const auto& v : parse_ints(row.argmax))
        if (v.mod_u32(w.modulus) != 0) moved = true;
      if (!moved) return false;
    } else if (gid.kind == "quad") {
      auto v = parse_ints(row.argmax);
      if (v.size() != 2 || !verify_ring_witness(QuadInt{v[0], v[1]}, QuadField{gid.param}, w))
        return false;
    } else if (gid.kind == "free") {
      if (!verify_quotient_witness(free_presentation(2), parse_word(row.argmax), w)) return false;
    } else if (gid.kind == "heis" || gid.kind == "unitri") {
      int d = gid.kind == "heis" ? 3 : static_cast<int>(gid.param);
      Word word = parse_word(row.argmax);
      if (row.method == "congruence") {
        if (!verify_unitri_witness(word_to_unitri(d, word), w)) return false;
      } else {
        if (!verify_quotient_witness(heisenberg_presentation(), word, w)) return false;
      }
    } else if (gid.kind == "sl") {
      auto v = parse_ints(row.argmax);
      if (!verify_sl_witness(IntMat::from_entries(static_cast<int>(gid.param), std::move(v)), w))
        return false;
    } else if (gid.kind == "grig") {
      if (!verify_grig_witness(row.argmax, w)) return false;
    }
  }
  return true;
}

std::string growth_csv(const GrowthTable& table) {
  auto field = [](const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
  };
  std::string out = "n,F,argmax,word_length,witness_kind,witness_order,method\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.n) + "," + row.f_value.to_string() + "," + field(row.argmax) + "," +
           std::to_string(row.word_length) + "," + witness_kind_name(row.witness.kind) + "," +
           row.witness.order.to_string() + "," + row.method + "\n";
  }
  return out;
}

KValResult compute_kval(const std::string& group_id, const std::string& element,
                        const std::string& variant, int qmax) {
  GroupId gid = parse_group(group_id);
  KValResult res;
  auto parse_ints = [](const std::string& s) {
    std::vector<BigInt> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(BigInt::from_decimal(part));
    return out;
  };

  if (gid.kind == "z") {
    auto ki = k_int(BigInt::from_decimal(element));
    res.k = BigInt(ki.q);
    res.witness = ki.witness;
  } else if (gid.kind == "zd") {
    auto v = parse_ints(element);
    if (static_cast<long long>(v.size()) != gid.param)
      throw std::invalid_argument("kval: expected " + std::to_string(gid.param) + " coordinates");
    std::uint32_t k = k_int_vector(v);
    res.k = BigInt(k);
    res.witness.kind = WitnessKind::congruence_mod_m;
    res.witness.order = res.k;
    res.witness.modulus = k;
  } else if (gid.kind == "quad") {
    QuadField f{gid.param};
    auto v = parse_ints(element);
    if (v.size() != 2) throw std::invalid_argument("kval: quad element is a,b");
    auto kr = k_ring(QuadInt{v[0], v[1]}, f);
    res.k = kr.size;
    res.witness = kr.witness;
  } else if (gid.kind == "free" || gid.kind == "heis") {
    Presentation pres = gid.kind == "free" ? free_presentation(2) : heisenberg_presentation();
    Word w = parse_word(element);
    if (variant != "any" && variant != "nilpotent" && !(gid.kind == "heis" && variant == "congruence"))
      throw std::invalid_argument("kval: variant " + variant + " is not defined for " + gid.kind);
    if (gid.kind == "heis" && variant == "congruence") {
      auto gens = unitri_generators(3);
      UniTriMat m = UniTriMat::identity(3);
      for (int letter : w) {
        UniTriMat g = letter > 0 ? gens[letter - 1]
                                 : UniTriMat::elementary(3, -letter - 1, -letter, BigInt(-1));
        m = m.mul(g);
      }
      auto r = k_congruence_unitri(m);
      res.k = r.size;
      res.witness = r.witness;
      res.note = "upper bound via reduction mod " + std::to_string(r.p);
    } else {
      SearchOptions sopts;
      sopts.degree_max = qmax;
      sopts.filter = filter_for(variant);
      auto r = min_quotient(pres, w, sopts);
      if (!r.found) {
        res.found = false;
        res.k = BigInt(r.certified_bound);
        res.note = "every quotient of order < " + std::to_string(r.certified_bound) +
                   " was excluded; k >= " + std::to_string(r.certified_bound);
      } else {
        res.k = BigInt(r.k);
        res.witness = r.witness;
      }
    }
  } else if (gid.kind == "unitri") {
    auto v = parse_ints(element);
    int d = static_cast<int>(gid.param);
    UniTriMat m = UniTriMat::identity(d);
    if (static_cast<int>(v.size()) != d * d) throw std::invalid_argument("kval: bad matrix size");
    m.e = v;
    auto r = k_congruence_unitri(m);
    res.k = r.size;
    res.witness = r.witness;
  } else if (gid.kind == "sl") {
    auto v = parse_ints(element);
    int k = static_cast<int>(gid.param);
    IntMat m = IntMat::from_entries(k, std::move(v));
    auto r = k_congruence_sl(m);
    if (!r.found) {
      res.found = false;
      res.note = "exhausted prime powers up to " + std::to_string(r.m_max);
    } else {
      res.k = r.size;
      res.witness = r.witness;
      res.note = "congruence-minimal value (exact up to essential quotients for k > 2)";
    }
  } else if (gid.kind == "grig") {
    auto r = k_congruence_grig(element);
    res.k = r.upper;
    res.witness = r.witness;
    res.note = "bracket [" + r.lower.to_string() + ", " + r.upper.to_string() + "] at depth " +
               std::to_string(r.depth);
  }
  return res;
}

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  j["tool_version"] = kToolVersion;
  return j.dump(2);
}

ResultCache::ResultCache(std::optional<std::string> dir) {
  if (dir) {
    dir_ = *dir;
  } else if (const char* env = std::getenv("RFG_CACHE")) {
    dir_ = env;
  } else {
    dir_ = ".rfg_cache";
  }
  std::filesystem::create_directories(dir_);
}

std::string ResultCache::file_for(const std::string&) const { return dir_ + "/records.tsv"; }

std::optional<std::pair<BigInt, QuotientWitness>> ResultCache::load(const std::string& key) const {
  std::ifstream in(file_for(key));
  if (!in) return std::nullopt;
  std::string line;
  std::optional<std::pair<BigInt, QuotientWitness>> hit;
  while (std::getline(in, line)) {
    auto t1 = line.find('\t');
    if (t1 == std::string::npos) continue;
    auto t2 = line.find('\t', t1 + 1);
    auto t3 = line.find('\t', t2 + 1);
    if (t2 == std::string::npos || t3 == std::string::npos) continue;
    if (line.substr(0, t1) != key) continue;
    if (line.substr(t3 + 1) != kToolVersion) continue;  // version mismatch invalidates
    auto witness = QuotientWitness::decode(line.substr(t2 + 1, t3 - t2 - 1));
    if (!witness) continue;
    try {
      hit = {BigInt::from_decimal(line.substr(t1 + 1, t2 - t1 - 1)), *witness};
    } catch (const std::exception&) {
      continue;
    }
  }
  return hit;  // last record wins
}

void ResultCache::store(const std::string& key, const BigInt& k, const QuotientWitness& witness) {
  std::ofstream out(file_for(key), std::ios::app);
  out << key << '\t' << k.to_string() << '\t' << witness.encode() << '\t' << kToolVersion << '\n';
}

}  // namespace rfg
