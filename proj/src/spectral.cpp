#include "acsa/spectral.hpp"

#include <algorithm>
#include <cstddef>

#include "acsa/errors.hpp"

namespace acsa
{

std::vector<ExtScalar> char_poly(const Mat& m)
{
  if (!m.is_square())
    throw precondition_error("char_poly requires a square matrix");
  const int n = m.rows();
  std::vector<ExtScalar> c(n + 1, ExtScalar(0));
  c[n] = ExtScalar(1);
  if (n == 0)
    return c;
  // Faddeev-LeVerrier recurrence; the only divisions are by 1..n.
  Mat nk = m;
  for (int k = 1; k <= n; ++k)
  {
    if (k > 1)
      nk = m * nk;
    const ExtScalar ck = nk.trace() / ExtScalar(k);
    c[n - k] = -ck;
    if (k < n)
      for (int i = 0; i < n; ++i)
        nk(i, i) -= ck;
  }
  return c;
}

namespace
{

// All positive divisors of v > 0 by trial division.
std::vector<mpz_class> divisors(mpz_class v)
{
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class f = 2;
  while (f * f <= v)
  {
    if (v % f == 0)
    {
      int e = 0;
      while (v % f == 0)
      {
        v /= f;
        ++e;
      }
      fac.emplace_back(f, e);
    }
    f += (f == 2) ? 1 : 2;
  }
  if (v > 1)
    fac.emplace_back(v, 1);
  std::vector<mpz_class> divs = {mpz_class(1)};
  for (const auto& [p, e] : fac)
  {
    const std::size_t base = divs.size();
    mpz_class pw = 1;
    for (int i = 1; i <= e; ++i)
    {
      pw *= p;
      for (std::size_t j = 0; j < base; ++j)
        divs.push_back(divs[j] * pw);
    }
  }
  return divs;
}

mpz_class horner(const std::vector<mpz_class>& p, const mpz_class& r)
{
  mpz_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    v = v * r + *it;
  return v;
}

// Divide the monic polynomial p by (mu - r); the remainder must vanish.
void deflate(std::vector<mpz_class>& p, const mpz_class& r)
{
  const int deg = static_cast<int>(p.size()) - 1;
  std::vector<mpz_class> q(deg);
  q[deg - 1] = p[deg];
  for (int i = deg - 1; i >= 1; --i)
    q[i - 1] = p[i] + r * q[i];
  p = std::move(q);
}

} // namespace

std::vector<std::pair<Rational, int>> rational_eigenvalues(const Mat& m)
{
  const auto cp = char_poly(m);
  const int n = m.rows();
  std::vector<Rational> q(n + 1);
  for (int i = 0; i <= n; ++i)
  {
    if (!cp[i].is_rational())
      throw precondition_error(
          "characteristic polynomial does not split over the rationals");
    q[i] = cp[i].rational_value();
  }
  mpz_class lcm = 1;
  for (const auto& c : q)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  // Substitute mu = lcm * lambda: the coefficients a_i = q_i lcm^(n-i) are
  // integers and the polynomial in mu stays monic, so rational roots of the
  // original are integer roots mu / lcm here.
  std::vector<mpz_class> a(n + 1);
  mpz_class pw = 1;
  for (int i = n; i >= 0; --i)
  {
    mpz_class t = q[i].get_num() * pw;
    mpz_divexact(a[i].get_mpz_t(), t.get_mpz_t(), q[i].get_den_mpz_t());
    pw *= lcm;
  }
  std::vector<mpz_class> roots;
  int zeros = 0;
  while (zeros < n && a[zeros] == 0)
    ++zeros;
  for (int i = 0; i < zeros; ++i)
    roots.emplace_back(0);
  std::vector<mpz_class> p(a.begin() + zeros, a.end());
  if (p.size() > 1)
  {
    mpz_class c0 = abs(p[0]);
    for (const auto& dv : divisors(c0))
      for (int sign : {1, -1})
      {
        const mpz_class r = sign * dv;
        while (p.size() > 1 && horner(p, r) == 0)
        {
          deflate(p, r);
          roots.push_back(r);
        }
      }
  }
  if (p.size() > 1)
    throw precondition_error(
        "characteristic polynomial does not split over the rationals");
  std::vector<std::pair<Rational, int>> out;
  for (const auto& r : roots)
  {
    Rational lam(r, lcm);
    lam.canonicalize();
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& e) { return e.first == lam; });
    if (it == out.end())
      out.emplace_back(lam, 1);
    else
      ++it->second;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a_, const auto& b_) { return a_.first > b_.first; });
  return out;
}

SpectralData primitive_idempotents(const Mat& m,
                                   const std::vector<ExtScalar>& ordering)
{
  if (!m.is_square())
    throw precondition_error("idempotents require a square matrix");
  const int n = m.rows();
  if (static_cast<int>(ordering.size()) != n)
    throw precondition_error("eigenvalue ordering does not match the order");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ordering[i] == ordering[j])
        throw precondition_error("degenerate spectrum: repeated eigenvalue");
  std::vector<Mat> pre(n + 1), suf(n + 1);
  pre[0] = Mat::identity(n);
  suf[n] = Mat::identity(n);
  for (int j = 0; j < n; ++j)
  {
    Mat fj = m;
    for (int i = 0; i < n; ++i)
      fj(i, i) -= ordering[j];
    pre[j + 1] = pre[j] * fj;
    Mat fk = m;
    const int k = n - 1 - j;
    for (int i = 0; i < n; ++i)
      fk(i, i) -= ordering[k];
    suf[k] = fk * suf[k + 1];
  }
  if (!pre[n].is_zero())
    throw precondition_error("ordering does not match the spectrum");
  SpectralData out;
  out.eigenvalues = ordering;
  for (int i = 0; i < n; ++i)
  {
    ExtScalar denom(1);
    for (int j = 0; j < n; ++j)
      if (j != i)
        denom *= ordering[i] - ordering[j];
    Mat ei = inverse(denom) * (pre[i] * suf[i + 1]);
    if (ei.is_zero())
      throw precondition_error("ordering does not match the spectrum");
    out.idempotents.push_back(std::move(ei));
  }
  return out;
}

TridiagonalProfile tridiagonal_profile(const Mat& m)
{
  if (!m.is_square())
    throw precondition_error("profile requires a square matrix");
  const int n = m.rows();
  TridiagonalProfile p;
  p.is_tridiagonal = true;
  for (int i = 0; i < n; ++i)
  {
    for (int j = 0; j < n; ++j)
      if ((i > j + 1 || j > i + 1) && !m(i, j).is_zero())
        p.is_tridiagonal = false;
    p.diagonal.push_back(m(i, i));
  }
  if (!p.is_tridiagonal || n == 0)
    return p;
  p.is_irreducible = true;
  for (int i = 0; i + 1 < n; ++i)
    if (m(i, i + 1).is_zero() || m(i + 1, i).is_zero())
      p.is_irreducible = false;
  const bool first = !m(0, 0).is_zero();
  const bool last = !m(n - 1, n - 1).is_zero();
  bool interior = true;
  for (int i = 1; i + 1 < n; ++i)
    if (!m(i, i).is_zero())
      interior = false;
  if (!first && !last && interior)
    p.cls = ProfileClass::bipartite;
  else if (n == 1)
    p.cls = ProfileClass::almost_bipartite_last;
  else if (interior && first && !last)
    p.cls = ProfileClass::almost_bipartite_first;
  else if (interior && !first && last)
    p.cls = ProfileClass::almost_bipartite_last;
  return p;
}

} // namespace acsa
