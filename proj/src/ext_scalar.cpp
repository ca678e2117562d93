#include "acsa/ext_scalar.hpp"

#include "acsa/errors.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace acsa
{

namespace
{
// gmpxx lacks long long constructors; radicands fit in long on this platform.
mpz_class mpz_ll(long long v) { return mpz_class(static_cast<long>(v)); }
} // namespace

std::pair<long long, mpz_class> normalize_radicand(const mpz_class& n)
{
  if (n == 0)
    throw precondition_error("radicand of zero");
  mpz_class m = abs(n);
  mpz_class outer = 1;
  mpz_class sf = 1;
  for (mpz_class p = 2; p * p <= m; p += (p == 2) ? 1 : 2)
  {
    if (m % p == 0)
    {
      int e = 0;
      while (m % p == 0)
      {
        m /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i)
        outer *= p;
      if (e % 2)
        sf *= p;
    }
  }
  sf *= m; // remaining cofactor is 1 or prime
  if (n < 0)
    sf = -sf;
  if (!sf.fits_slong_p())
    throw unsupported_extension("radicand too large: " + sf.get_str());
  return {sf.get_si(), outer};
}

ExtScalar ExtScalar::radical(const Rational& coeff, long long sf)
{
  if (sf == 0)
    throw precondition_error("radicand of zero");
  auto [sfp, outer] = normalize_radicand(mpz_ll(sf));
  ExtScalar r;
  if (sfp == 1)
  {
    r.c[0] = coeff * Rational(outer);
    return r;
  }
  r.k = 1;
  r.s[0] = sfp;
  r.c[1] = coeff * Rational(outer);
  r.canonicalize();
  return r;
}

Rational ExtScalar::rational_value() const
{
  if (k != 0)
    throw precondition_error("scalar is not rational: " + scalar_str(*this));
  return c[0];
}

void ExtScalar::canonicalize()
{
  if (k == 2 && c[2] == 0 && c[3] == 0)
  {
    s[1] = 0;
    k = 1;
  }
  else if (k == 2 && c[1] == 0 && c[3] == 0)
  {
    c[1] = c[2];
    c[2] = 0;
    s[0] = s[1];
    s[1] = 0;
    k = 1;
  }
  if (k == 1 && c[1] == 0)
  {
    s[0] = 0;
    k = 0;
  }
  if (k == 2 && s[0] > s[1])
  {
    std::swap(s[0], s[1]);
    swap(c[1], c[2]);
  }
  if (k < 2)
  {
    c[2] = 0;
    c[3] = 0;
  }
  if (k < 1)
    c[1] = 0;
}

namespace
{

// q * sqrt(r) with r square-free; r == 1 marks the rational part.
struct Term
{
  long long r;
  Rational q;
};

// sqrt(s1)*sqrt(s2) = sigma * sqrt(s1*s2): the formal basis product picks up
// a minus sign exactly when both radicands are negative (i * i = -1).
int product_sign(long long s1, long long s2) { return (s1 < 0 && s2 < 0) ? -1 : 1; }

void push_terms(const ExtScalar& a, std::vector<Term>& out)
{
  if (a.c[0] != 0)
    out.push_back({1, a.c[0]});
  if (a.k >= 1 && a.c[1] != 0)
    out.push_back({a.s[0], a.c[1]});
  if (a.k == 2 && a.c[2] != 0)
    out.push_back({a.s[1], a.c[2]});
  if (a.k == 2 && a.c[3] != 0)
  {
    auto [sf, outer] = normalize_radicand(mpz_ll(a.s[0]) * mpz_ll(a.s[1]));
    out.push_back({sf, a.c[3] * Rational(outer) * product_sign(a.s[0], a.s[1])});
  }
}

// Rewrite q * sqrt(r) over the radicand set (t, tk) and accumulate into e.
void add_term(ExtScalar& e, long long r, const Rational& q, const long long t[2],
              int tk)
{
  if (r == 1)
  {
    e.c[0] += q;
    return;
  }
  if (tk >= 1 && r == t[0])
  {
    e.c[1] += q;
    return;
  }
  if (tk == 2 && r == t[1])
  {
    e.c[2] += q;
    return;
  }
  if (tk == 2)
  {
    auto [sf, outer] = normalize_radicand(mpz_ll(t[0]) * mpz_ll(t[1]));
    if (r == sf)
    {
      e.c[3] += q * product_sign(t[0], t[1]) / Rational(outer);
      return;
    }
  }
  throw unsupported_extension("sqrt(" + std::to_string(r)
                              + ") does not lie in the common field");
}

// Bring a and b to one radicand set covering all their terms. The union of
// the stored sets is preferred so representations stay stable; decomposed
// term radicands are the fallback.
void merge(ExtScalar& a, ExtScalar& b)
{
  if (a.k == b.k && a.s[0] == b.s[0] && a.s[1] == b.s[1])
    return;
  std::vector<Term> ta, tb;
  push_terms(a, ta);
  push_terms(b, tb);

  long long t[2] = {0, 0};
  int tk = -1;
  std::set<long long> stored;
  for (int i = 0; i < a.k; ++i)
    stored.insert(a.s[i]);
  for (int i = 0; i < b.k; ++i)
    stored.insert(b.s[i]);
  if (stored.size() <= 2)
  {
    tk = 0;
    for (long long v : stored)
      t[tk++] = v;
  }
  else
  {
    std::set<long long> rset;
    for (const auto& tm : ta)
      if (tm.r != 1)
        rset.insert(tm.r);
    for (const auto& tm : tb)
      if (tm.r != 1)
        rset.insert(tm.r);
    std::vector<long long> rs(rset.begin(), rset.end());
    if (rs.size() <= 2)
    {
      tk = 0;
      for (long long v : rs)
        t[tk++] = v;
    }
    else if (rs.size() == 3)
    {
      // A pair (ri, rj) can carry the third radicand only as sqrt(ri * rj).
      for (int i = 0; i < 3 && tk < 0; ++i)
        for (int j = i + 1; j < 3 && tk < 0; ++j)
        {
          long long third = rs[3 - i - j];
          auto [sf, outer] = normalize_radicand(mpz_ll(rs[i]) * mpz_ll(rs[j]));
          if (sf == third)
          {
            t[0] = rs[i];
            t[1] = rs[j];
            tk = 2;
          }
        }
      if (tk < 0)
        throw unsupported_extension("three independent radicands required");
    }
    else
      throw unsupported_extension("more than two independent radicands required");
  }

  ExtScalar na, nb;
  na.k = nb.k = tk;
  na.s[0] = nb.s[0] = t[0];
  na.s[1] = nb.s[1] = t[1];
  for (const auto& tm : ta)
    add_term(na, tm.r, tm.q, t, tk);
  for (const auto& tm : tb)
    add_term(nb, tm.r, tm.q, t, tk);
  a = na; // not canonicalized: the pair must keep the shared set
  b = nb;
}

} // namespace

ExtScalar operator+(const ExtScalar& a0, const ExtScalar& b0)
{
  if (a0.k == 0 && b0.k == 0)
  {
    ExtScalar r;
    r.c[0] = a0.c[0] + b0.c[0];
    return r;
  }
  ExtScalar a = a0, b = b0;
  merge(a, b);
  for (int i = 0; i < 4; ++i)
    a.c[i] += b.c[i];
  a.canonicalize();
  return a;
}

ExtScalar operator-(const ExtScalar& a0, const ExtScalar& b0)
{
  if (a0.k == 0 && b0.k == 0)
  {
    ExtScalar r;
    r.c[0] = a0.c[0] - b0.c[0];
    return r;
  }
  ExtScalar a = a0, b = b0;
  merge(a, b);
  for (int i = 0; i < 4; ++i)
    a.c[i] -= b.c[i];
  a.canonicalize();
  return a;
}

ExtScalar operator-(const ExtScalar& a)
{
  ExtScalar r = a;
  for (int i = 0; i < 4; ++i)
    r.c[i] = -r.c[i];
  return r;
}

ExtScalar operator*(const ExtScalar& a0, const ExtScalar& b0)
{
  // Scaling by a rational keeps the canonical form, zero aside.
  if (a0.k == 0 || b0.k == 0)
  {
    const ExtScalar& scale = a0.k == 0 ? a0 : b0;
    const ExtScalar& field = a0.k == 0 ? b0 : a0;
    if (scale.c[0] == 0)
      return ExtScalar();
    ExtScalar r = field;
    for (int i = 0; i < 4; ++i)
      r.c[i] *= scale.c[0];
    return r;
  }
  ExtScalar a = a0, b = b0;
  merge(a, b);
  const Rational S1(static_cast<long>(a.k >= 1 ? a.s[0] : 0));
  const Rational S2(static_cast<long>(a.k == 2 ? a.s[1] : 0));
  ExtScalar r;
  r.k = a.k;
  r.s[0] = a.s[0];
  r.s[1] = a.s[1];
  r.c[0] = a.c[0] * b.c[0] + S1 * a.c[1] * b.c[1] + S2 * a.c[2] * b.c[2]
           + S1 * S2 * a.c[3] * b.c[3];
  r.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0] + S2 * (a.c[2] * b.c[3] + a.c[3] * b.c[2]);
  r.c[2] = a.c[0] * b.c[2] + a.c[2] * b.c[0] + S1 * (a.c[1] * b.c[3] + a.c[3] * b.c[1]);
  r.c[3] = a.c[0] * b.c[3] + a.c[3] * b.c[0] + a.c[1] * b.c[2] + a.c[2] * b.c[1];
  r.canonicalize();
  return r;
}

ExtScalar inverse(const ExtScalar& a)
{
  if (a.is_zero())
    throw precondition_error("inverse of zero");
  if (a.k == 0)
    return ExtScalar(Rational(1) / a.c[0]);
  // Conjugate over sqrt(s1); the product lies in a strictly smaller field.
  ExtScalar u = a;
  u.c[1] = -u.c[1];
  u.c[3] = -u.c[3];
  return u * inverse(a * u);
}

ExtScalar operator/(const ExtScalar& a, const ExtScalar& b)
{
  if (b.is_zero())
    throw precondition_error("division by zero");
  return a * inverse(b);
}

bool operator==(const ExtScalar& a0, const ExtScalar& b0)
{
  ExtScalar a = a0, b = b0;
  try
  {
    merge(a, b);
  }
  catch (const unsupported_extension&)
  {
    // Equal values decompose identically, so an impossible merge means
    // the values differ.
    return false;
  }
  for (int i = 0; i < 4; ++i)
    if (a.c[i] != b.c[i])
      return false;
  return true;
}

bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

ExtScalar& operator+=(ExtScalar& a, const ExtScalar& b) { return a = a + b; }
ExtScalar& operator-=(ExtScalar& a, const ExtScalar& b) { return a = a - b; }
ExtScalar& operator*=(ExtScalar& a, const ExtScalar& b) { return a = a * b; }

ExtScalar sqrt_exact(const Rational& q)
{
  if (q == 0)
    throw precondition_error("square root of zero");
  mpz_class n = q.get_num() * q.get_den();
  auto [sf, outer] = normalize_radicand(n);
  Rational coeff(outer, q.get_den());
  coeff.canonicalize();
  if (sf == 1)
    return ExtScalar(coeff);
  return ExtScalar::radical(coeff, sf);
}

ExtScalar sqrt_ext(const ExtScalar& a)
{
  if (a.k == 0)
    return sqrt_exact(a.c[0]);
  if (a.k == 2)
    throw unsupported_extension("square root over two radicands");
  // a = c0 + c1*sqrt(s) with c1 != 0. A root u + v*sqrt(s) needs
  // u^2 + s*v^2 = c0 and 2uv = c1, so u^2 is a root of
  // t^2 - c0*t + s*c1^2/4 with discriminant c0^2 - s*c1^2.
  const Rational S(static_cast<long>(a.s[0]));
  const Rational disc = a.c[0] * a.c[0] - S * a.c[1] * a.c[1];
  if (disc > 0)
  {
    const ExtScalar rd = sqrt_exact(disc);
    if (rd.is_rational())
    {
      for (int sign = 1; sign >= -1; sign -= 2)
      {
        Rational t = (a.c[0] + Rational(sign) * rd.c[0]) / 2;
        if (t <= 0)
          continue;
        const ExtScalar ru = sqrt_exact(t);
        if (!ru.is_rational())
          continue;
        const Rational u = ru.c[0];
        return ExtScalar(u) + ExtScalar::radical(a.c[1] / (2 * u), a.s[0]);
      }
    }
  }
  throw unsupported_extension("square root leaves the supported fields");
}

bool scalar_less(const ExtScalar& a0, const ExtScalar& b0)
{
  ExtScalar a = a0, b = b0;
  try
  {
    merge(a, b);
  }
  catch (const unsupported_extension&)
  {
    if (a.k != b.k)
      return a.k < b.k;
    if (a.s[0] != b.s[0])
      return a.s[0] < b.s[0];
    return a.s[1] < b.s[1];
  }
  for (int i = 0; i < 4; ++i)
  {
    const int c = cmp(a.c[i], b.c[i]);
    if (c != 0)
      return c < 0;
  }
  return false;
}

std::string scalar_str(const ExtScalar& a)
{
  auto radical_name = [](long long r) { return "sqrt(" + std::to_string(r) + ")"; };
  std::string out;
  auto add = [&](const Rational& q, const std::string& rad) {
    if (q == 0)
      return;
    std::string piece;
    if (rad.empty())
      piece = rational_str(q);
    else if (q == 1)
      piece = rad;
    else if (q == -1)
      piece = "-" + rad;
    else
      piece = rational_str(q) + "*" + rad;
    if (!out.empty())
    {
      if (!piece.empty() && piece[0] == '-')
        out += " - ", piece = piece.substr(1);
      else
        out += " + ";
    }
    out += piece;
  };
  add(a.c[0], "");
  if (a.k >= 1)
    add(a.c[1], radical_name(a.s[0]));
  if (a.k == 2)
  {
    add(a.c[2], radical_name(a.s[1]));
    add(a.c[3], radical_name(a.s[0]) + "*" + radical_name(a.s[1]));
  }
  return out.empty() ? "0" : out;
}

ExtScalar parse_scalar(const std::string& s)
{
  // one factor: a rational or "sqrt(<integer>)"
  auto parse_factor = [&](const std::string& f, ExtScalar& acc) {
    if (f.rfind("sqrt(", 0) == 0 && f.back() == ')')
    {
      const std::string body = f.substr(5, f.size() - 6);
      long long r = 0;
      try
      {
        size_t used = 0;
        r = std::stoll(body, &used);
        if (used != body.size())
          throw std::invalid_argument(body);
      }
      catch (const std::exception&)
      {
        throw parse_error("bad radicand in \"" + s + "\"");
      }
      if (r == 0 || r == 1 || normalize_radicand(mpz_ll(r)).second != 1)
        throw parse_error("radicand must be square-free and not 0 or 1 in \"" +
                          s + "\"");
      acc *= ExtScalar::radical(1, r);
    }
    else
    {
      acc *= ExtScalar(parse_rational(f));
    }
  };

  // terms are joined by " + " or " - "; signs inside terms have no spaces
  ExtScalar out;
  size_t pos = 0;
  int sign = 1;
  while (pos <= s.size())
  {
    size_t end = s.size();
    int next_sign = 1;
    for (size_t i = pos; i + 2 < s.size(); ++i)
      if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') &&
          s[i + 2] == ' ')
      {
        end = i;
        next_sign = s[i + 1] == '+' ? 1 : -1;
        break;
      }
    std::string term = s.substr(pos, end - pos);
    if (term.empty())
      throw parse_error("empty term in \"" + s + "\"");
    // a leading minus on a coefficient-free radical, e.g. "-sqrt(2)"
    int tsign = 1;
    if (term.rfind("-sqrt(", 0) == 0)
    {
      tsign = -1;
      term = term.substr(1);
    }
    ExtScalar val(static_cast<long long>(tsign));
    size_t fpos = 0;
    while (fpos < term.size())
    {
      size_t fend = term.find('*', fpos);
      if (fend == std::string::npos)
        fend = term.size();
      // a '*' inside "sqrt(...)" cannot occur; radicands are integers
      parse_factor(term.substr(fpos, fend - fpos), val);
      fpos = fend + 1;
    }
    out += ExtScalar(static_cast<long long>(sign)) * val;
    if (end == s.size())
      break;
    pos = end + 3;
    sign = next_sign;
  }
  return out;
}

} // namespace acsa
