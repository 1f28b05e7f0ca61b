#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign). Throws InvalidArgument on malformed
/// text or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer lcm_of_denominators(std::span<const Rational> values);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace fatpoints
