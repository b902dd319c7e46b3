#pragma once

#include <string>

#include <gmpxx.h>

namespace weaksort {

using BigInt = mpz_class;
using Rational = mpq_class;

/// binom(n, k) with binom(n, k) = 0 for k < 0 or k > n, and n < 0.
BigInt binomial(long n, long k);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

} // namespace weaksort
