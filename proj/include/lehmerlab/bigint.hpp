#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lehmerlab {

using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace lehmerlab
