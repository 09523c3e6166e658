#pragma once

#include <gmpxx.h>

#include <string>

namespace azeta {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline bool is_integer(const BigRational& q) {
  return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace azeta
