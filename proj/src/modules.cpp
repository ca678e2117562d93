#include "acsa/modules.hpp"

#include <algorithm>

#include "acsa/errors.hpp"
#include "acsa/spectral.hpp"

namespace acsa
{

namespace
{

int sgn(int i) { return i % 2 == 0 ? 1 : -1; }

Idx third(Idx a, Idx b)
{
  for (Idx g : {Idx::x, Idx::y, Idx::z})
    if (g != a && g != b)
      return g;
  throw precondition_error("no third generator");
}

void check_generator(Idx g)
{
  if (g == Idx::zero)
    throw precondition_error("generator must be x, y, or z");
}

} // namespace

// The B display also covers odd d, where it is reducible.
std::array<Mat, 3> closed_form_rep(const ModuleType& t, Idx a, Idx b)
{
  check_generator(a);
  check_generator(b);
  if (a == b)
    throw precondition_error("the basis pair needs two distinct generators");
  const int d = t.d;
  const int n1 = d + 1;
  const Idx c = third(a, b);
  Mat ma(n1, n1), mb(n1, n1), mc(n1, n1);
  if (t.kind == Kind::B)
  {
    for (int i = 0; i <= d; ++i)
      ma(i, i) = ExtScalar(sgn(i) * (d - 2 * i));
    for (int i = 1; i <= d; ++i)
    {
      mb(i - 1, i) = ExtScalar(d - i + 1);
      mc(i - 1, i) = ExtScalar(sgn(i - 1) * (d - i + 1));
    }
    for (int i = 0; i < d; ++i)
    {
      mb(i + 1, i) = ExtScalar(i + 1);
      mc(i + 1, i) = ExtScalar(sgn(i) * (i + 1));
    }
  }
  else
  {
    const int ha = hat(a, t.n);
    const int hb = hat(b, t.n) * sgn(d);
    const int hc = hat(c, t.n);
    for (int i = 0; i <= d; ++i)
      ma(i, i) = ExtScalar(ha * sgn(d + i) * (2 * d - 2 * i + 1));
    for (int i = 1; i <= d; ++i)
    {
      mb(i - 1, i) = ExtScalar(hb * (2 * d - i + 2));
      mc(i - 1, i) = ExtScalar(hc * sgn(i - 1) * (2 * d - i + 2));
    }
    for (int i = 0; i < d; ++i)
    {
      mb(i + 1, i) = ExtScalar(hb * (i + 1));
      mc(i + 1, i) = ExtScalar(hc * sgn(i) * (i + 1));
    }
    mb(d, d) = ExtScalar(hb * (d + 1));
    mc(d, d) = ExtScalar(hc * sgn(d) * (d + 1));
  }
  return {std::move(ma), std::move(mb), std::move(mc)};
}

bool operator==(const ModuleType& a, const ModuleType& b)
{
  if (a.kind != b.kind || a.d != b.d)
    return false;
  return a.kind == Kind::B || a.n == b.n;
}

bool operator!=(const ModuleType& a, const ModuleType& b) { return !(a == b); }

std::string type_str(const ModuleType& t)
{
  if (t.kind == Kind::B)
    return "B(" + std::to_string(t.d) + ")";
  return std::string("AB(") + std::to_string(t.d) + "," + idx_char(t.n) + ")";
}

const Mat& ModuleRep::generator(Idx g) const
{
  switch (g)
  {
  case Idx::x:
    return x;
  case Idx::y:
    return y;
  case Idx::z:
    return z;
  default:
    throw precondition_error("generator must be x, y, or z");
  }
}

ModuleRep construct(const ModuleType& t)
{
  if (t.d < 0)
    throw precondition_error("diameter must be nonnegative");
  if (t.kind == Kind::B && t.d % 2 != 0)
    throw precondition_error("type B requires an even diameter");
  auto cf = closed_form_rep(t, Idx::x, Idx::y);
  ModuleRep m;
  m.type = t;
  m.x = std::move(cf[0]);
  m.y = std::move(cf[1]);
  m.z = std::move(cf[2]);
  m.basis.kind = BasisTag::Kind::constructor;
  return m;
}

ReducibleB construct_reducible_B(int d)
{
  if (d < 0 || d % 2 == 0)
    throw precondition_error("the reducible B family needs an odd diameter");
  ModuleType t;
  t.kind = Kind::B;
  t.d = d;
  auto cf = closed_form_rep(t, Idx::x, Idx::y);
  ReducibleB r;
  r.d = d;
  r.x = std::move(cf[0]);
  r.y = std::move(cf[1]);
  r.z = std::move(cf[2]);
  for (int i = 0; i <= (d - 1) / 2; ++i)
  {
    std::vector<ExtScalar> plus(d + 1, ExtScalar(0)), minus(d + 1, ExtScalar(0));
    plus[i] = ExtScalar(1);
    plus[d - i] += ExtScalar(1);
    minus[i] = ExtScalar(1);
    minus[d - i] -= ExtScalar(1);
    r.v1.push_back(std::move(plus));
    r.v2.push_back(std::move(minus));
  }
  return r;
}

ModuleType classify_by_traces(const Mat& x, const Mat& y, const Mat& z)
{
  if (!x.is_square() || x.rows() != y.rows() || x.rows() != z.rows())
    throw precondition_error("generator matrices must be square of one order");
  const int n1 = x.rows();
  if (n1 == 0)
    throw precondition_error("order must be positive");
  const int d = n1 - 1;
  const std::array<ExtScalar, 3> tr = {x.trace(), y.trace(), z.trace()};
  if (tr[0].is_zero() && tr[1].is_zero() && tr[2].is_zero())
  {
    if (d % 2 != 0)
      throw precondition_error("traces match no module type");
    ModuleType t;
    t.kind = Kind::B;
    t.d = d;
    return t;
  }
  for (Idx n : {Idx::zero, Idx::x, Idx::y, Idx::z})
  {
    bool match = true;
    for (int g = 1; g <= 3; ++g)
      if (tr[g - 1]
          != ExtScalar(static_cast<long long>(sgn(d))
                       * hat(static_cast<Idx>(g), n) * n1))
        match = false;
    if (match)
      return {Kind::AB, d, n};
  }
  throw precondition_error("traces match no module type");
}

const std::vector<Rational>& EigTable::of(Idx g) const
{
  switch (g)
  {
  case Idx::x:
    return x;
  case Idx::y:
    return y;
  case Idx::z:
    return z;
  default:
    throw precondition_error("generator must be x, y, or z");
  }
}

EigTable eig_tables(const ModuleType& t)
{
  EigTable e;
  for (int g = 1; g <= 3; ++g)
  {
    std::vector<Rational>& v = g == 1 ? e.x : (g == 2 ? e.y : e.z);
    for (int i = 0; i <= t.d; ++i)
      v.emplace_back(t.kind == Kind::B
                         ? sgn(i) * (t.d - 2 * i)
                         : hat(static_cast<Idx>(g), t.n) * sgn(t.d + i)
                               * (2 * t.d - 2 * i + 1));
  }
  return e;
}

std::vector<Rational> standard_ordering(std::vector<Rational> values)
{
  std::vector<Rational> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw precondition_error("ordering input has a repeated value");
  if (values.size() <= 1)
    return values;
  auto has = [&](const Rational& v)
  { return std::binary_search(sorted.begin(), sorted.end(), v); };
  auto neighbors = [&](const Rational& v)
  {
    std::vector<Rational> r;
    const Rational cand[2] = {Rational(2) - v, Rational(-2) - v};
    for (const Rational& c : cand)
      if (c != v && has(c))
        r.push_back(c);
    return r;
  };
  std::vector<Rational> ends;
  for (const auto& v : sorted)
    if (neighbors(v).size() == 1)
      ends.push_back(v);
  if (ends.size() != 2)
    throw precondition_error("values do not form a single adjacency path");
  std::vector<Rational> out = {std::max(ends[0], ends[1])};
  while (out.size() < values.size())
  {
    const auto nb = neighbors(out.back());
    const Rational* next = nullptr;
    for (const auto& c : nb)
      if (out.size() < 2 || c != out[out.size() - 2])
        next = &c;
    if (!next)
      throw precondition_error("values do not form a single adjacency path");
    out.push_back(*next);
  }
  return out;
}

namespace
{

std::vector<ExtScalar> to_ext(const std::vector<Rational>& v)
{
  std::vector<ExtScalar> out;
  out.reserve(v.size());
  for (const auto& r : v)
    out.emplace_back(r);
  return out;
}

// First nonzero coordinate becomes 1.
void normalize_vector(std::vector<ExtScalar>& v)
{
  for (const auto& e : v)
    if (!e.is_zero())
    {
      const ExtScalar s = inverse(e);
      for (auto& w : v)
        w = s * w;
      return;
    }
  throw precondition_error("cannot normalize the zero vector");
}

} // namespace

Mat six_bases(const ModuleRep& m, Idx a, Idx b)
{
  check_generator(a);
  check_generator(b);
  if (a == b)
    throw precondition_error("six bases need two distinct generators");
  const Mat& ma = m.generator(a);
  const Mat& mb = m.generator(b);
  const int n1 = ma.rows();
  const EigTable tab = eig_tables(m.type);
  const auto sa = primitive_idempotents(ma, to_ext(tab.of(a)));
  const auto sb = primitive_idempotents(mb, to_ext(tab.of(b)));
  // Seed: a spanning vector of the first b-eigenspace, read off the first
  // nonzero column of its idempotent.
  const Mat& e0 = sb.idempotents[0];
  std::vector<ExtScalar> seed;
  for (int j = 0; j < n1 && seed.empty(); ++j)
    for (int i = 0; i < n1; ++i)
      if (!e0(i, j).is_zero())
      {
        seed.resize(n1);
        for (int k = 0; k < n1; ++k)
          seed[k] = e0(k, j);
        break;
      }
  if (seed.empty())
    throw error("first idempotent of the seed generator vanished");
  normalize_vector(seed);
  Mat w(n1, n1);
  for (int i = 0; i < n1; ++i)
  {
    const auto col = matvec(sa.idempotents[i], seed);
    bool zero = true;
    for (int k = 0; k < n1; ++k)
    {
      w(k, i) = col[k];
      if (!col[k].is_zero())
        zero = false;
    }
    if (zero)
      throw error("six-bases column vanished");
  }
  if (rank(w) != n1)
    throw error("six-bases columns are dependent");
  return w;
}

std::array<Mat, 3> representation_in_basis(const ModuleRep& m, Idx a, Idx b)
{
  const Mat w = six_bases(m, a, b);
  const Mat wi = inverse(w);
  const Idx c = third(a, b);
  return {wi * m.generator(a) * w, wi * m.generator(b) * w,
          wi * m.generator(c) * w};
}

Mat canonical_basis(const Mat& x, const Mat& y, const Mat& z,
                    const ModuleType& t)
{
  const int d = t.d;
  const int n1 = d + 1;
  int eps = 1, delta = 1;
  long long theta0 = d;
  if (t.kind == Kind::AB)
  {
    eps = hat(Idx::x, t.n) * sgn(d);
    delta = hat(Idx::y, t.n) * sgn(d);
    theta0 = static_cast<long long>(eps) * (2 * d + 1);
  }
  Mat shifted = x;
  for (int i = 0; i < n1; ++i)
    shifted(i, i) -= ExtScalar(theta0);
  const auto ker = nullspace(shifted);
  if (ker.size() != 1)
    throw precondition_error("top eigenspace is not one-dimensional");
  std::vector<ExtScalar> w = ker[0];
  normalize_vector(w);
  const Mat plus = y + ExtScalar(eps) * z;
  const Mat minus = y - ExtScalar(eps) * z;
  Mat out(n1, n1);
  for (int k = 0; k < n1; ++k)
    out(k, 0) = w[k];
  for (int i = 1; i <= d; ++i)
  {
    w = matvec(i % 2 == 1 ? plus : minus, w);
    const ExtScalar scale(make_rational(eps, 2 * i));
    bool zero = true;
    for (auto& e : w)
    {
      e = scale * e;
      if (!e.is_zero())
        zero = false;
    }
    if (zero)
      throw precondition_error("canonical basis recursion collapsed");
    const int ds = (delta < 0 && i % 2 == 1) ? -1 : 1;
    for (int k = 0; k < n1; ++k)
      out(k, i) = ExtScalar(ds) * w[k];
  }
  return out;
}

IsoResult module_isomorphism(const ModuleRep& m1, const ModuleRep& m2)
{
  IsoResult r;
  if (m1.x.rows() != m2.x.rows())
  {
    r.reason = "non-isomorphic: orders differ";
    return r;
  }
  const ModuleType t1 = classify_by_traces(m1.x, m1.y, m1.z);
  const ModuleType t2 = classify_by_traces(m2.x, m2.y, m2.z);
  if (t1 != t2)
  {
    for (Idx g : {Idx::x, Idx::y, Idx::z})
    {
      const ExtScalar tr1 = m1.generator(g).trace();
      const ExtScalar tr2 = m2.generator(g).trace();
      if (tr1 != tr2)
      {
        r.reason = std::string("non-isomorphic: trace of ") + idx_char(g)
                   + " differs (" + scalar_str(tr1) + " vs " + scalar_str(tr2)
                   + ")";
        return r;
      }
    }
    r.reason = "non-isomorphic: types differ";
    return r;
  }
  const Mat w1 = canonical_basis(m1.x, m1.y, m1.z, t1);
  const Mat w2 = canonical_basis(m2.x, m2.y, m2.z, t2);
  Mat p = w2 * inverse(w1);
  for (Idx g : {Idx::x, Idx::y, Idx::z})
    if (p * m1.generator(g) != m2.generator(g) * p)
    {
      r.reason = "intertwiner verification failed";
      return r;
    }
  r.isomorphic = true;
  r.intertwiner = std::move(p);
  return r;
}

ModuleRep twist(const ModuleRep& m, const Automorphism& s)
{
  const Automorphism inv = automorphism_from_perm(inverse(s.perm));
  auto image = [&](int g)
  {
    const auto& im = inv.images[g];
    return ExtScalar(im.sign) * m.generator(im.target);
  };
  ModuleRep out;
  out.x = image(0);
  out.y = image(1);
  out.z = image(2);
  out.type = m.type;
  if (m.type.kind == Kind::AB)
    out.type.n = s.perm[static_cast<int>(m.type.n)];
  out.basis.kind = BasisTag::Kind::ambient;
  return out;
}

Mat evaluate_h(Idx n, const ModuleRep& m)
{
  return h_element(n, m.x, m.y, m.z);
}

ExtScalar h_trace(Idx n, const ModuleRep& m) { return evaluate_h(n, m).trace(); }

namespace
{

Mat nonzero_rows(const Mat& m)
{
  std::vector<std::vector<ExtScalar>> rows;
  for (int i = 0; i < m.rows(); ++i)
  {
    bool zero = true;
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        zero = false;
    if (!zero)
    {
      std::vector<ExtScalar> r(m.cols());
      for (int j = 0; j < m.cols(); ++j)
        r[j] = m(i, j);
      rows.push_back(std::move(r));
    }
  }
  return Mat(std::move(rows));
}

// Dimension of the smallest subspace containing seed and closed under x, y, z.
int closure_rank(const Mat& x, const Mat& y, const Mat& z,
                 const std::vector<ExtScalar>& seed)
{
  const int n = x.rows();
  std::vector<std::vector<ExtScalar>> rows = {seed};
  Mat span = nonzero_rows(rref(Mat(std::move(rows))));
  for (;;)
  {
    std::vector<std::vector<ExtScalar>> grown;
    for (int i = 0; i < span.rows(); ++i)
    {
      std::vector<ExtScalar> v(n);
      for (int j = 0; j < n; ++j)
        v[j] = span(i, j);
      grown.push_back(v);
      for (const Mat* g : {&x, &y, &z})
        grown.push_back(matvec(*g, v));
    }
    const Mat next = nonzero_rows(rref(Mat(std::move(grown))));
    if (next.rows() == span.rows() || next.rows() == n)
      return next.rows();
    span = next;
  }
}

} // namespace

bool is_irreducible(const Mat& x, const Mat& y, const Mat& z)
{
  const int n = x.rows();
  if (n == 0)
    return false;
  if (n == 1)
    return true;
  // Any proper invariant subspace contains an eigenvector of each generator,
  // and for a generator with simple rational spectrum the eigenvectors are
  // determined up to scale.  So the module is irreducible exactly when every
  // eigenvector of one such generator generates the whole space.
  for (const Mat* g : {&x, &y, &z})
  {
    std::vector<std::pair<Rational, int>> ev;
    try
    {
      ev = rational_eigenvalues(*g);
    }
    catch (const error&)
    {
      continue;
    }
    bool simple = true;
    for (const auto& e : ev)
      if (e.second != 1)
        simple = false;
    if (!simple)
      continue;
    for (const auto& e : ev)
    {
      Mat shifted = *g;
      for (int i = 0; i < n; ++i)
        shifted(i, i) -= ExtScalar(e.first);
      const auto ker = nullspace(shifted);
      if (closure_rank(x, y, z, ker[0]) < n)
        return false;
    }
    return true;
  }
  throw precondition_error(
      "irreducibility test requires a generator with simple rational spectrum");
}

} // namespace acsa
