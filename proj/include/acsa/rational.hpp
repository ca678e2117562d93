#pragma once

#include <gmpxx.h>

#include <string>

namespace acsa
{

/// Exact rational number. Canonical form: positive denominator, reduced,
/// zero stored as 0/1 (maintained by GMP).
using Rational = mpq_class;

/// Build a canonical Rational from an integer pair.
Rational make_rational(long long num, long long den = 1);

/// Parse "p/q" or "p" (optional sign, decimal digits). Throws parse_error on
/// malformed text or zero denominator.
Rational parse_rational(const std::string& s);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& q);

} // namespace acsa
