// Exact arithmetic aliases. All counting and polynomial math is exact;
// no floating point is used anywhere in the library.
#pragma once

#include <gmpxx.h>

#include <string>

namespace chromix {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical text form: "7", "-2/3". Denominator omitted when 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace chromix
