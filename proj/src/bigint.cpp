#include "rfg/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace rfg {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  while (u) {
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<std::uint32_t> r(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    r[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  r[hi.size()] = static_cast<std::uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(s);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (sign_ == 0) return o;
  if (o.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == o.sign_) {
    r.mag_ = add_mag(mag_, o.mag_);
    r.sign_ = sign_;
  } else {
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = sub_mag(mag_, o.mag_);
      r.sign_ = sign_;
    } else {
      r.mag_ = sub_mag(o.mag_, mag_);
      r.sign_ = o.sign_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (sign_ == 0 || o.sign_ == 0) return BigInt();
  BigInt r;
  r.mag_.assign(mag_.size() + o.mag_.size(), 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.mag_.size(); ++j) {
      std::uint64_t cur = r.mag_[i + j] + carry +
                          static_cast<std::uint64_t>(mag_[i]) * o.mag_[j];
      r.mag_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r.mag_[i + o.mag_.size()] += static_cast<std::uint32_t>(carry);
  }
  r.sign_ = sign_ * o.sign_;
  r.trim();
  return r;
}

BigInt BigInt::mul_u32(std::uint32_t m) const {
  if (sign_ == 0 || m == 0) return BigInt();
  BigInt r;
  r.sign_ = sign_;
  r.mag_.assign(mag_.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(mag_[i]) * m + carry;
    r.mag_[i] = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  r.mag_[mag_.size()] = static_cast<std::uint32_t>(carry);
  r.trim();
  return r;
}

BigInt BigInt::div_u32(std::uint32_t d) const {
  if (d == 0) throw std::invalid_argument("BigInt: division by zero");
  if (sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = sign_;
  r.mag_.assign(mag_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | mag_[i];
    r.mag_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  r.trim();
  return r;
}

std::uint32_t BigInt::mod_u32(std::uint32_t d) const {
  if (d == 0) throw std::invalid_argument("BigInt: modulus zero");
  std::uint64_t rem = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) rem = ((rem << 32) | mag_[i]) % d;
  if (sign_ < 0 && rem != 0) rem = d - rem;
  return static_cast<std::uint32_t>(rem);
}

int BigInt::compare(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
  int c = cmp_mag(mag_, o.mag_);
  return sign_ >= 0 ? c : -c;
}

BigInt BigInt::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty decimal string");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: bad decimal string");
  BigInt r;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad decimal digit");
    r = r.mul_u32(10) + BigInt(s[i] - '0');
  }
  if (neg) r = -r;
  return r;
}

BigInt BigInt::pow2(unsigned e) {
  BigInt r;
  r.sign_ = 1;
  r.mag_.assign(e / 32 + 1, 0);
  r.mag_[e / 32] = std::uint32_t{1} << (e % 32);
  return r;
}

BigInt BigInt::pow(std::uint32_t base, unsigned e) {
  BigInt r(1);
  for (unsigned i = 0; i < e; ++i) r = r.mul_u32(base);
  return r;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> chunks;
  BigInt cur = abs();
  while (!cur.is_zero()) {
    chunks.push_back(cur.mod_u32(1000000000u));
    cur = cur.div_u32(1000000000u);
  }
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

double BigInt::to_double() const {
  double r = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
  return sign_ < 0 ? -r : r;
}

std::size_t BigInt::bit_length() const {
  if (mag_.empty()) return 0;
  std::uint32_t top = mag_.back();
  std::size_t bits = 0;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits + 32 * (mag_.size() - 1);
}

long long BigInt::to_i64() const {
  if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in int64");
  unsigned long long u = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (sign_ >= 0) {
    if (u > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit in int64");
    return static_cast<long long>(u);
  }
  if (u > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit in int64");
  return -static_cast<long long>(u - 1) - 1;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace rfg
