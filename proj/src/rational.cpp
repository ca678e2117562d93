#include "acsa/rational.hpp"

#include "acsa/errors.hpp"

#include <cctype>

namespace acsa
{

Rational make_rational(long long num, long long den)
{
  if (den == 0)
    throw precondition_error("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s)
{
  // Accept only [sign] digits [/ digits]; GMP is laxer (whitespace, bases).
  auto digits = [](const std::string& t) -> bool {
    if (t.empty())
      return false;
    for (char ch : t)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        return false;
    return true;
  };
  std::string body = s;
  if (!body.empty() && (body[0] == '+' || body[0] == '-'))
    body = body.substr(1);
  const auto slash = body.find('/');
  bool ok;
  if (slash == std::string::npos)
    ok = digits(body);
  else
    ok = digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok)
    throw parse_error("malformed rational \"" + s + "\"");

  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw parse_error("malformed rational \"" + s + "\"");
  if (q.get_den() == 0)
    throw parse_error("rational with zero denominator \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

} // namespace acsa
