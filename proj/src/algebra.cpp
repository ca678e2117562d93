#include "acsa/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "acsa/errors.hpp"

namespace acsa
{

char idx_char(Idx n)
{
  switch (n)
  {
  case Idx::zero:
    return '0';
  case Idx::x:
    return 'x';
  case Idx::y:
    return 'y';
  default:
    return 'z';
  }
}

Idx idx_from_char(char c)
{
  switch (c)
  {
  case '0':
    return Idx::zero;
  case 'x':
    return Idx::x;
  case 'y':
    return Idx::y;
  case 'z':
    return Idx::z;
  default:
    throw precondition_error(std::string("invalid index symbol '") + c + "'");
  }
}

int hat(Idx a, Idx n) { return (n == Idx::zero || n == a) ? 1 : -1; }

Character character_eval(Idx n)
{
  return {n, {hat(Idx::x, n), hat(Idx::y, n), hat(Idx::z, n)}};
}

Perm identity_perm() { return {Idx::zero, Idx::x, Idx::y, Idx::z}; }

Perm compose(const Perm& p, const Perm& q)
{
  Perm r;
  for (int i = 0; i < 4; ++i)
    r[i] = p[static_cast<int>(q[i])];
  return r;
}

Perm inverse(const Perm& p)
{
  Perm r;
  for (int i = 0; i < 4; ++i)
    r[static_cast<int>(p[i])] = static_cast<Idx>(i);
  return r;
}

Perm parse_perm(const std::string& s)
{
  Perm p = identity_perm();
  std::array<bool, 4> seen = {false, false, false, false};
  std::size_t i = 0;
  bool any = false;
  while (i < s.size())
  {
    if (std::isspace(static_cast<unsigned char>(s[i])))
    {
      ++i;
      continue;
    }
    if (s[i] != '(')
      throw precondition_error("invalid permutation: expected '('");
    ++i;
    std::vector<Idx> cycle;
    while (i < s.size() && s[i] != ')')
    {
      if (std::isspace(static_cast<unsigned char>(s[i])))
      {
        ++i;
        continue;
      }
      const Idx n = idx_from_char(s[i]);
      if (seen[static_cast<int>(n)])
        throw precondition_error("invalid permutation: repeated symbol");
      seen[static_cast<int>(n)] = true;
      cycle.push_back(n);
      ++i;
    }
    if (i == s.size())
      throw precondition_error("invalid permutation: missing ')'");
    ++i;
    any = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[static_cast<int>(cycle[k])] = cycle[(k + 1) % cycle.size()];
  }
  if (!any)
    throw precondition_error("invalid permutation: empty string");
  return p;
}

std::string perm_str(const Perm& p)
{
  std::string out;
  std::array<bool, 4> done = {false, false, false, false};
  for (int i = 0; i < 4; ++i)
  {
    if (done[i] || p[i] == static_cast<Idx>(i))
      continue;
    out += '(';
    int j = i;
    for (;;)
    {
      done[j] = true;
      out += idx_char(static_cast<Idx>(j));
      j = static_cast<int>(p[j]);
      if (j == i)
        break;
      out += ' ';
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Perm> all_perms()
{
  std::array<int, 4> v = {0, 1, 2, 3};
  std::vector<Perm> out;
  do
  {
    Perm p;
    for (int i = 0; i < 4; ++i)
      p[i] = static_cast<Idx>(v[i]);
    out.push_back(p);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Automorphism automorphism_from_perm(const Perm& p)
{
  Automorphism a;
  a.perm = p;
  const Idx m = p[0];
  Perm kappa = identity_perm();
  if (m != Idx::zero)
  {
    // The sign-flip factor swaps 0 with m and swaps the other two symbols.
    std::vector<int> rest;
    for (int g = 1; g <= 3; ++g)
      if (static_cast<Idx>(g) != m)
        rest.push_back(g);
    kappa[0] = m;
    kappa[static_cast<int>(m)] = Idx::zero;
    kappa[rest[0]] = static_cast<Idx>(rest[1]);
    kappa[rest[1]] = static_cast<Idx>(rest[0]);
  }
  const Perm s = compose(kappa, p);
  for (int g = 1; g <= 3; ++g)
  {
    const Idx t = s[g];
    const int sign = (m == Idx::zero || t == m) ? 1 : -1;
    a.images[g - 1] = {t, sign};
  }
  return a;
}

RelationReport check_relations_xyz(const Mat& x, const Mat& y, const Mat& z)
{
  if (x.rows() != y.rows() || x.rows() != z.rows() || !x.is_square()
      || !y.is_square() || !z.is_square())
    throw precondition_error("generator matrices must be square of one order");
  RelationReport r;
  r.residuals.push_back(anticommutator(x, y) - ExtScalar(2) * z);
  r.residuals.push_back(anticommutator(y, z) - ExtScalar(2) * x);
  r.residuals.push_back(anticommutator(z, x) - ExtScalar(2) * y);
  r.ok = true;
  for (const auto& m : r.residuals)
    if (!m.is_zero())
      r.ok = false;
  return r;
}

RelationReport check_relations_xy(const Mat& x, const Mat& y)
{
  if (x.rows() != y.rows() || !x.is_square() || !y.is_square())
    throw precondition_error("generator matrices must be square of one order");
  RelationReport r;
  const Mat xx = x * x;
  const Mat yy = y * y;
  r.residuals.push_back(xx * y + ExtScalar(2) * (x * y * x) + y * xx
                        - ExtScalar(4) * y);
  r.residuals.push_back(yy * x + ExtScalar(2) * (y * x * y) + x * yy
                        - ExtScalar(4) * x);
  r.ok = r.residuals[0].is_zero() && r.residuals[1].is_zero();
  return r;
}

Mat h_element(Idx n, const Mat& x, const Mat& y, const Mat& z)
{
  const Character f = character_eval(n);
  return ExtScalar(f.values[0]) * x + ExtScalar(f.values[1]) * y
         + ExtScalar(f.values[2]) * z;
}

} // namespace acsa
