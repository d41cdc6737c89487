#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pi2 {

using BigInt = mpz_class;

/// Least non-negative residue of a modulo m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::int64_t mod_floor(const BigInt& a, std::int64_t m) {
  return mod_floor(a, BigInt(static_cast<long>(m))).get_si();
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace pi2
