#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rfg {

// Arbitrary-precision signed integer, sign/magnitude with 32-bit limbs.
// Implements exactly what the lab needs: exact ring arithmetic, division
// and remainder by machine-word divisors, powers of two, decimal I/O.
// There is deliberately no general big/big division; nothing here needs it.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_decimal(std::string_view s);
  static BigInt pow2(unsigned e);
  static BigInt pow(std::uint32_t base, unsigned e);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const;

  BigInt abs() const;
  BigInt operator-() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  BigInt mul_u32(std::uint32_t m) const;
  // Truncated quotient of the magnitude, sign preserved. d must be nonzero.
  BigInt div_u32(std::uint32_t d) const;
  // Mathematical residue in [0, d): (-5).mod_u32(3) == 1.
  std::uint32_t mod_u32(std::uint32_t d) const;
  bool divisible_by(std::uint32_t d) const { return mod_u32(d) == 0; }

  int compare(const BigInt& o) const;
  bool operator==(const BigInt& o) const { return compare(o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(o) != 0; }
  bool operator<(const BigInt& o) const { return compare(o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
  bool operator>(const BigInt& o) const { return compare(o) > 0; }
  bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

  std::string to_string() const;
  // Lossy; used only for ratio reporting and search bounds.
  double to_double() const;
  std::size_t bit_length() const;
  // Value as int64 if it fits, throws otherwise.
  long long to_i64() const;

 private:
  int sign_ = 0;                      // -1, 0, +1
  std::vector<std::uint32_t> mag_;    // little-endian, no trailing zeros

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace rfg
