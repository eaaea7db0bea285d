#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace npcurve {

// All zeta/L-polynomial arithmetic is exact and unbounded; hull and stratum
// computations use exact rationals. Nothing in the library rounds.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
  BigInt acc = 1, b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline std::uint64_t u64_pow_checked(std::uint64_t base, std::uint32_t e, std::uint64_t limit) {
  // Returns base^e or limit+1 if the power exceeds limit.
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (base != 0 && acc > limit / base) return limit + 1;
    acc *= base;
    if (acc > limit) return limit + 1;
  }
  return acc;
}

// Trial division; intended for characteristics bounded at 2^26.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline BigInt rat_floor(const Rat& r) {
  BigInt n = rat_num(r), d = rat_den(r);  // d > 0 canonical
  BigInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline BigInt rat_ceil(const Rat& r) {
  BigInt n = rat_num(r), d = rat_den(r);
  BigInt q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

// p-adic valuation of a nonzero integer.
inline std::int64_t p_valuation(BigInt v, const BigInt& p) {
  if (v == 0) return -1;
  if (v < 0) v = -v;
  std::int64_t k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace npcurve
