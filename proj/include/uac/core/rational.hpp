#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace uac {

using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" or "p" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Least common multiple of the denominators.
BigInt common_denominator(const std::vector<Rational>& v);

/// Fractional part in [0,1).
Rational frac(const Rational& r);

std::int64_t to_int64(const BigInt& z);

}  // namespace uac
