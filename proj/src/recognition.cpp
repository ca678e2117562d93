#include "acsa/recognition.hpp"

#include "acsa/algebra.hpp"
#include "acsa/errors.hpp"

#include <string>

namespace acsa
{

namespace
{

// p^2 q + 2 p q p + q p^2
Mat cubic_lhs(const Mat& p, const Mat& q)
{
  const Mat pp = p * p;
  return pp * q + ExtScalar(2) * (p * q * p) + q * pp;
}

// l == factor * q for a single scalar factor
bool proportional(const Mat& l, const Mat& q, ExtScalar& factor)
{
  factor = ExtScalar();
  bool found = false;
  for (int i = 0; i < q.rows() && !found; ++i)
    for (int j = 0; j < q.cols() && !found; ++j)
      if (!q(i, j).is_zero())
      {
        factor = l(i, j) / q(i, j);
        found = true;
      }
  if (!found)
    return l.is_zero();
  return (l - factor * q).is_zero();
}

// representative with positive leading coefficient
ExtScalar canonical_sign(const ExtScalar& v)
{
  for (int i = 0; i < 4; ++i)
    if (v.c[i] != 0)
      return v.c[i] < 0 ? -v : v;
  return v;
}

ExtScalar sqrt_any(const ExtScalar& v)
{
  const ExtScalar r = v.is_rational() ? sqrt_exact(v.rational_value())
                                      : sqrt_ext(v);
  return canonical_sign(r);
}

BasisTag ambient_tag()
{
  BasisTag t;
  t.kind = BasisTag::Kind::ambient;
  return t;
}

struct Extraction
{
  bool ok = false;
  ExtScalar zeta;
  std::string certificate;
};

// The scalar zeta with m = zeta (p q + q p), or a certificate quoting the
// expansion of m over {I, p, q, p q, q p} when no such scalar exists.
Extraction mixed_coefficient(const Mat& p, const Mat& q, const Mat& m,
                             const std::string& mn, const std::string& pn,
                             const std::string& qn)
{
  Extraction out;
  ExtScalar zeta;
  if (proportional(m, anticommutator(p, q), zeta) && !zeta.is_zero())
  {
    out.ok = true;
    out.zeta = zeta;
    return out;
  }
  const std::string span = "I, " + pn + ", " + qn + ", " + pn + " " + qn +
                           ", " + qn + " " + pn;
  const XSpaceExpansion e = xspace_expand(p, q, m);
  if (!e.in_span)
  {
    out.certificate = mn + " lies outside the span of " + span;
    return out;
  }
  out.certificate = "no nonzero scalar zeta satisfies " + mn + " = zeta (" +
                    pn + " " + qn + " + " + qn + " " + pn +
                    "); the expansion of " + mn + " over " + span + " is (" +
                    scalar_str(e.alpha[0]) + ", " + scalar_str(e.alpha[1]) +
                    ", " + scalar_str(e.alpha[2]) + ", " +
                    scalar_str(e.alpha[3]) + ", " + scalar_str(e.alpha[4]) +
                    ")";
  return out;
}

} // namespace

PairRecognition recognize_pair(const Mat& a, const Mat& a_star)
{
  const PairAnalysis p = analyze_pair(a, a_star);
  if (!p.is_leonard)
    throw precondition_error("recognition requires a Leonard pair");
  const BipClass c = bip_class_of(p.bip_class);
  if (c != bip_class_of(p.dual_bip_class) || c == BipClass::other)
    throw precondition_error("recognition requires a totally bipartite or "
                             "totally almost bipartite pair");
  if (p.d < 3)
    throw precondition_error("recognition requires diameter at least three");
  if (is_bannai_ito(p) != BIVerdict::yes)
    throw precondition_error(
        "recognition requires Bannai-Ito eigenvalue ratios");

  PairRecognition out;
  if (!proportional(cubic_lhs(a, a_star), a_star, out.rho) ||
      !proportional(cubic_lhs(a_star, a), a, out.rho_star))
    throw precondition_error("the operators fail the cubic relations");
  if (out.rho.is_zero() || out.rho_star.is_zero())
    throw precondition_error(
        "a vanishing cubic parameter contradicts irreducibility");

  const ExtScalar half(Rational(1, 2));
  if (c == BipClass::bipartite)
  {
    out.xi = half * sqrt_any(out.rho);
    out.xi_star = half * sqrt_any(out.rho_star);
  }
  else
  {
    // the trace determines the scalar rationally: rho = 4 tr(A)^2 / (d+1)^2
    const ExtScalar den(static_cast<long long>(p.d + 1));
    out.xi = canonical_sign(a.trace() / den);
    out.xi_star = canonical_sign(a_star.trace() / den);
    if (ExtScalar(4) * out.xi * out.xi != out.rho ||
        ExtScalar(4) * out.xi_star * out.xi_star != out.rho_star)
      throw precondition_error("trace and cubic parameter disagree");
  }

  const Mat x = inverse(out.xi) * a;
  const Mat y = inverse(out.xi_star) * a_star;
  const Mat z = half * anticommutator(x, y);
  if (!check_relations_xyz(x, y, z).ok)
    throw precondition_error(
        "the rescaled operators do not satisfy the defining relations");
  out.type = classify_by_traces(x, y, z);
  out.module = ModuleRep{out.type, x, y, z, ambient_tag()};
  return out;
}

std::array<PairRecognition, 4> pair_choices(const PairRecognition& r)
{
  std::array<PairRecognition, 4> out;
  int idx = 0;
  for (long long s1 : {1LL, -1LL})
    for (long long s2 : {1LL, -1LL})
    {
      PairRecognition c = r;
      c.xi = ExtScalar(s1) * r.xi;
      c.xi_star = ExtScalar(s2) * r.xi_star;
      c.module.x = ExtScalar(s1) * r.module.x;
      c.module.y = ExtScalar(s2) * r.module.y;
      c.module.z = ExtScalar(s1 * s2) * r.module.z;
      c.type = classify_by_traces(c.module.x, c.module.y, c.module.z);
      c.module.type = c.type;
      out[idx++] = c;
    }
  return out;
}

std::array<Mat, 3> extend_pair_to_triple(const PairRecognition& r,
                                         const ExtScalar& xi_eps)
{
  if (xi_eps.is_zero())
    throw precondition_error("the extension scalar must be nonzero");
  return {r.xi * r.module.x, r.xi_star * r.module.y, xi_eps * r.module.z};
}

TripleOutcome recognize_triple(const Mat& a, const Mat& a_star,
                               const Mat& a_eps)
{
  const TripleAnalysis t = verify_triple(a, a_star, a_eps);
  if (!t.is_leonard)
    throw precondition_error("recognition requires a Leonard triple");
  if (t.cls == TripleClass::other)
    throw precondition_error("recognition requires a totally bipartite or "
                             "totally almost bipartite triple");
  if (!t.is_BI)
    throw precondition_error(
        "recognition requires Bannai-Ito eigenvalue ratios");
  if (t.d < 2)
    throw precondition_error("recognition requires diameter at least two");

  TripleOutcome out;
  const Extraction ee = mixed_coefficient(a, a_star, a_eps, "A^eps", "A", "A*");
  if (!ee.ok)
  {
    out.certificate = ee.certificate;
    return out;
  }
  const Extraction ez = mixed_coefficient(a_star, a_eps, a, "A", "A*", "A^eps");
  if (!ez.ok)
  {
    out.certificate = ez.certificate;
    return out;
  }
  const Extraction es = mixed_coefficient(a_eps, a, a_star, "A*", "A^eps", "A");
  if (!es.ok)
  {
    out.certificate = es.certificate;
    return out;
  }
  const ExtScalar& zeta = ez.zeta;
  const ExtScalar& zeta_star = es.zeta;
  const ExtScalar& zeta_eps = ee.zeta;

  ExtScalar rho, rho_star, rho_eps;
  if (!proportional(cubic_lhs(a, a_star), a_star, rho))
  {
    out.certificate = "the cubic relation fails for the pair (A, A*)";
    return out;
  }
  if (!proportional(cubic_lhs(a_star, a_eps), a_eps, rho_star))
  {
    out.certificate = "the cubic relation fails for the pair (A*, A^eps)";
    return out;
  }
  if (!proportional(cubic_lhs(a_eps, a), a, rho_eps))
  {
    out.certificate = "the cubic relation fails for the pair (A^eps, A)";
    return out;
  }
  const ExtScalar one(1);
  const ExtScalar p1 = rho * zeta_star * zeta_eps;
  const ExtScalar p2 = rho_star * zeta_eps * zeta;
  const ExtScalar p3 = rho_eps * zeta * zeta_star;
  if (p1 != one || p2 != one || p3 != one)
  {
    out.certificate =
        "the cubic parameters and mixed coefficients are inconsistent: the "
        "products rho zeta* zeta^eps, rho* zeta^eps zeta, rho^eps zeta zeta* "
        "equal (" + scalar_str(p1) + ", " + scalar_str(p2) + ", " +
        scalar_str(p3) + ") instead of (1, 1, 1)";
    return out;
  }

  TripleRecognition rec;
  rec.zeta = zeta;
  rec.zeta_star = zeta_star;
  rec.zeta_eps = zeta_eps;
  const ExtScalar four(4);
  rec.xi = sqrt_any(inverse(four * zeta_star * zeta_eps));
  rec.xi_star = sqrt_any(inverse(four * zeta_eps * zeta));
  rec.xi_eps = inverse(ExtScalar(8) * zeta * zeta_star * zeta_eps) /
               (rec.xi * rec.xi_star);

  const Mat x = inverse(rec.xi) * a;
  const Mat y = inverse(rec.xi_star) * a_star;
  const Mat z = inverse(rec.xi_eps) * a_eps;
  if (!check_relations_xyz(x, y, z).ok)
  {
    out.certificate =
        "the rescaled operators do not satisfy the defining relations";
    return out;
  }
  rec.type = classify_by_traces(x, y, z);
  rec.module = ModuleRep{rec.type, x, y, z, ambient_tag()};
  out.ok = true;
  out.recognition = rec;
  return out;
}

std::array<Mat, 3> counterexample_d2()
{
  const ExtScalar i = ExtScalar::radical(make_rational(1), -1);
  Mat a(3, 3), a_star(3, 3), a_eps(3, 3);
  a(0, 0) = ExtScalar(2);
  a(2, 2) = ExtScalar(-2);
  a_star(0, 1) = ExtScalar(2);
  a_star(1, 0) = ExtScalar(1);
  a_star(1, 2) = ExtScalar(1);
  a_star(2, 1) = ExtScalar(2);
  a_eps(0, 1) = ExtScalar(-2) * i;
  a_eps(1, 0) = i;
  a_eps(1, 2) = -i;
  a_eps(2, 1) = ExtScalar(2) * i;
  return {std::move(a), std::move(a_star), std::move(a_eps)};
}

IsoDecision pair_isomorphism(const Mat& a, const Mat& a_star, const Mat& b,
                             const Mat& b_star)
{
  const PairRecognition r1 = recognize_pair(a, a_star);
  const PairRecognition r2 = recognize_pair(b, b_star);
  IsoDecision out;
  if (r1.type.kind != r2.type.kind)
  {
    out.discriminant = "bipartite class";
    return out;
  }
  if (r1.type.d != r2.type.d)
  {
    out.discriminant = "diameter";
    return out;
  }
  if (r1.type.kind == Kind::B)
  {
    if (r1.rho != r2.rho)
    {
      out.discriminant = "rho";
      return out;
    }
    if (r1.rho_star != r2.rho_star)
    {
      out.discriminant = "rho_star";
      return out;
    }
  }
  else
  {
    if (a.trace() != b.trace())
    {
      out.discriminant = "tr(A)";
      return out;
    }
    if (a_star.trace() != b_star.trace())
    {
      out.discriminant = "tr(A*)";
      return out;
    }
  }
  const IsoResult iso = module_isomorphism(r1.module, r2.module);
  if (!iso.isomorphic)
    throw error("equal invariants must yield isomorphic modules");
  const Mat& p = iso.intertwiner;
  if (!(p * a - b * p).is_zero() || !(p * a_star - b_star * p).is_zero())
    throw error("intertwiner fails to match the operators");
  out.isomorphic = true;
  out.intertwiner = p;
  return out;
}

IsoDecision triple_isomorphism(const Mat& a, const Mat& a_star,
                               const Mat& a_eps, const Mat& b,
                               const Mat& b_star, const Mat& b_eps)
{
  const TripleOutcome o1 = recognize_triple(a, a_star, a_eps);
  if (!o1.ok)
    throw precondition_error(o1.certificate);
  const TripleOutcome o2 = recognize_triple(b, b_star, b_eps);
  if (!o2.ok)
    throw precondition_error(o2.certificate);
  const TripleRecognition& r1 = *o1.recognition;
  const TripleRecognition& r2 = *o2.recognition;
  if (r1.type.d < 3 || r2.type.d < 3)
    throw precondition_error(
        "isomorphism classification requires diameter at least three");
  IsoDecision out;
  if (r1.type.kind != r2.type.kind)
  {
    out.discriminant = "bipartite class";
    return out;
  }
  if (r1.type.d != r2.type.d)
  {
    out.discriminant = "diameter";
    return out;
  }
  if (r1.type.kind == Kind::B)
  {
    if (r1.zeta != r2.zeta)
    {
      out.discriminant = "zeta";
      return out;
    }
    if (r1.zeta_star != r2.zeta_star)
    {
      out.discriminant = "zeta_star";
      return out;
    }
    if (r1.zeta_eps != r2.zeta_eps)
    {
      out.discriminant = "zeta_eps";
      return out;
    }
  }
  else
  {
    if (a.trace() != b.trace())
    {
      out.discriminant = "tr(A)";
      return out;
    }
    if (a_star.trace() != b_star.trace())
    {
      out.discriminant = "tr(A*)";
      return out;
    }
    if (a_eps.trace() != b_eps.trace())
    {
      out.discriminant = "tr(A^eps)";
      return out;
    }
  }
  const IsoResult iso = module_isomorphism(r1.module, r2.module);
  if (!iso.isomorphic)
    throw error("equal invariants must yield isomorphic modules");
  const Mat& p = iso.intertwiner;
  if (!(p * a - b * p).is_zero() || !(p * a_star - b_star * p).is_zero() ||
      !(p * a_eps - b_eps * p).is_zero())
    throw error("intertwiner fails to match the operators");
  out.isomorphic = true;
  out.intertwiner = p;
  return out;
}

} // namespace acsa
