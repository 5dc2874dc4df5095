#include "rfg/perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rfg {

Perm Perm::identity(int n) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("Perm: degree out of range");
  Perm p;
  p.deg = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::from_images(const std::vector<std::uint8_t>& images) {
  Perm p = identity(static_cast<int>(images.size()));
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || seen[images[i]])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[images[i]] = true;
    p.img[i] = images[i];
  }
  return p;
}

Perm Perm::then(const Perm& q) const {
  Perm r;
  r.deg = deg;
  for (int i = 0; i < deg; ++i) r.img[i] = q.img[img[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.deg = deg;
  for (int i = 0; i < deg; ++i) r.img[img[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < deg; ++i)
    if (img[i] != i) return false;
  return true;
}

std::uint64_t Perm::pack() const {
  std::uint64_t key = 0;
  for (int i = deg; i-- > 0;) key = (key << 4) | img[i];
  return key;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < deg; ++i) {
    if (seen[i] || img[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = img[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string Perm::one_line() const {
  std::string out;
  for (int i = 0; i < deg; ++i) out += (i ? "," : "") + std::to_string(img[i] + 1);
  return out;
}

Perm eval_word_perm(const Word& w, const std::vector<Perm>& images, int degree) {
  Perm r = Perm::identity(degree);
  for (int i = 0; i < degree; ++i) {
    std::uint8_t x = static_cast<std::uint8_t>(i);
    for (int letter : w) {
      std::size_t idx = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
      if (idx >= images.size()) throw std::out_of_range("eval_word: letter out of range");
      const Perm& p = images[idx];
      if (letter > 0) {
        x = p.img[x];
      } else {
        // inverse image lookup without materializing the inverse
        for (int y = 0; y < degree; ++y)
          if (p.img[y] == x) {
            x = static_cast<std::uint8_t>(y);
            break;
          }
      }
    }
    r.img[i] = x;
  }
  return r;
}

bool closure(const std::vector<Perm>& gens, std::size_t cap, std::vector<Perm>& out) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  out.clear();
  out.push_back(Perm::identity(gens[0].deg));
  std::unordered_set<std::uint64_t> seen{out[0].pack()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& g : gens) {
      Perm next = out[i].then(g);
      if (seen.insert(next.pack()).second) {
        out.push_back(next);
        if (out.size() > cap) return false;
      }
    }
  }
  return true;
}

std::size_t group_order(const std::vector<Perm>& gens, std::size_t cap) {
  std::vector<Perm> elems;
  if (!closure(gens, cap, elems)) throw std::runtime_error("group_order: order exceeds cap");
  return elems.size();
}

PermGroup enumerate_group(const std::vector<Perm>& gens, std::size_t cap) {
  PermGroup g;
  g.generators = gens;
  if (!closure(gens, cap, g.elements)) throw std::runtime_error("enumerate_group: order exceeds cap");
  return g;
}

namespace {

// Subgroup generated by `seed` inside an ambient finite group, as packed keys.
std::unordered_set<std::uint64_t> subgroup_closure(const std::vector<Perm>& seed, int deg) {
  std::vector<Perm> elems{Perm::identity(deg)};
  std::unordered_set<std::uint64_t> seen{elems[0].pack()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& s : seed) {
      Perm next = elems[i].then(s);
      if (seen.insert(next.pack()).second) elems.push_back(next);
    }
  return seen;
}

}  // namespace

bool is_nilpotent(const PermGroup& g, int* class_out) {
  if (g.elements.empty()) throw std::invalid_argument("is_nilpotent: group not enumerated");
  int deg = g.elements[0].deg;
  // gamma_1 = G
  std::vector<Perm> gamma = g.elements;
  int cls = 0;
  while (true) {
    if (gamma.size() == 1) {
      if (class_out) *class_out = cls;
      return true;
    }
    // gamma_{i+1} = <[G, gamma_i]>
    std::vector<Perm> comms;
    std::unordered_set<std::uint64_t> comm_keys;
    for (const Perm& x : g.elements)
      for (const Perm& y : gamma) {
        Perm c = x.inverse().then(y.inverse()).then(x).then(y);
        if (comm_keys.insert(c.pack()).second) comms.push_back(c);
      }
    auto next_keys = subgroup_closure(comms, deg);
    if (next_keys.size() == gamma.size()) return false;  // series stabilized above 1
    std::vector<Perm> next;
    for (const Perm& e : g.elements)
      if (next_keys.count(e.pack())) next.push_back(e);
    gamma = std::move(next);
    ++cls;
  }
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Perm> class_representatives(int deg) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions_rec(deg, deg, cur, parts);
  std::vector<Perm> reps;
  reps.reserve(parts.size());
  for (const auto& part : parts) {
    Perm p = Perm::identity(deg);
    int base = 0;
    for (int len : part) {
      for (int i = 0; i < len; ++i) p.img[base + i] = static_cast<std::uint8_t>(base + (i + 1) % len);
      base += len;
    }
    reps.push_back(p);
  }
  std::sort(reps.begin(), reps.end(), [](const Perm& a, const Perm& b) {
    return std::lexicographical_compare(a.img.begin(), a.img.begin() + a.deg,
                                        b.img.begin(), b.img.begin() + b.deg);
  });
  return reps;
}

}  // namespace rfg
