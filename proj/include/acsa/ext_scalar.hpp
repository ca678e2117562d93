#pragma once

#include "acsa/rational.hpp"

#include <string>
#include <utility>

namespace acsa
{

/// Split a nonzero integer as n = outer^2 * square_free. The square-free
/// part carries the sign of n; outer is positive. square_free = 1 means n is
/// a perfect square ("unit" radicand).
std::pair<long long, mpz_class> normalize_radicand(const mpz_class& n);

/// Element of Q, Q(sqrt(s1)) or Q(sqrt(s1), sqrt(s2)): coefficients c[0..3]
/// over the basis {1, sqrt(s1), sqrt(s2), sqrt(s1)*sqrt(s2)}. Radicands are
/// square-free, not 0 or 1, stored sorted ascending; unused trailing basis
/// elements are dropped, so a rational value always has k = 0. Equality is
/// field equality: operands are first brought to a common radicand set.
class ExtScalar
{
public:
  Rational c[4];
  long long s[2] = {0, 0};
  int k = 0;

  ExtScalar() = default;
  ExtScalar(const Rational& q) { c[0] = q; }
  ExtScalar(long long n) { c[0] = Rational(static_cast<long>(n)); }

  /// coeff * sqrt(sf); sf must be square-free and != 0, 1.
  static ExtScalar radical(const Rational& coeff, long long sf);

  bool is_zero() const { return k == 0 && c[0] == 0; }
  bool is_rational() const { return k == 0; }

  /// The embedded rational value; throws if the element is irrational.
  Rational rational_value() const;

  /// Drop unused radicands and restore the ascending radicand order.
  void canonicalize();
};

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
ExtScalar operator-(const ExtScalar& a);
ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
ExtScalar operator/(const ExtScalar& a, const ExtScalar& b);
bool operator==(const ExtScalar& a, const ExtScalar& b);
bool operator!=(const ExtScalar& a, const ExtScalar& b);
ExtScalar& operator+=(ExtScalar& a, const ExtScalar& b);
ExtScalar& operator-=(ExtScalar& a, const ExtScalar& b);
ExtScalar& operator*=(ExtScalar& a, const ExtScalar& b);

/// Multiplicative inverse. Throws precondition_error on zero.
ExtScalar inverse(const ExtScalar& a);

/// Exact square root of a nonzero rational: a rational when q is a perfect
/// square, otherwise coeff * sqrt(sf) with one adjoined radicand. The
/// returned root has a positive leading coefficient; the other root is its
/// negative. Throws precondition_error on q = 0.
ExtScalar sqrt_exact(const Rational& q);

/// Exact square root within Q(sqrt(s1), sqrt(s2)) where possible: handles
/// rational arguments and perfect squares of single-radicand fields. Throws
/// unsupported_extension when the root does not lie in a supported field.
ExtScalar sqrt_ext(const ExtScalar& a);

/// Total order used only for canonical orientation choices: lexicographic on
/// (c0, c1, c2, c3) after merging to a common radicand set.
bool scalar_less(const ExtScalar& a, const ExtScalar& b);

/// Human-readable form, e.g. "3/2", "2*sqrt(-1)", "1 + 1/2*sqrt(2)".
std::string scalar_str(const ExtScalar& a);

/// Inverse of scalar_str; radicands must be square-free and not 0 or 1.
/// Throws parse_error on malformed input.
ExtScalar parse_scalar(const std::string& s);

} // namespace acsa
