#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acsa/errors.hpp"
#include "acsa/leonard.hpp"
#include "acsa/modules.hpp"

#include <random>

using namespace acsa;

namespace
{

Mat from_ints(const std::vector<std::vector<long long>>& rows)
{
  std::vector<std::vector<ExtScalar>> out;
  for (const auto& r : rows)
  {
    std::vector<ExtScalar> row;
    for (long long v : r)
      row.push_back(ExtScalar(v));
    out.push_back(row);
  }
  return Mat(out);
}

std::vector<ModuleType> all_types(int dmax)
{
  std::vector<ModuleType> out;
  for (int d = 0; d <= dmax; d += 2)
    out.push_back({Kind::B, d, Idx::zero});
  for (int d = 0; d <= dmax; ++d)
    for (Idx n : {Idx::zero, Idx::x, Idx::y, Idx::z})
      out.push_back({Kind::AB, d, n});
  return out;
}

// the order-3 matrices over Q(i) carrying a totally bipartite Leonard
// triple that admits no normalized module structure
struct CounterTriple
{
  Mat a, a_star, a_eps;
};

CounterTriple counterexample()
{
  const ExtScalar i = ExtScalar::radical(1, -1);
  CounterTriple t;
  t.a = from_ints({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});
  t.a_star = from_ints({{0, 2, 0}, {1, 0, 1}, {0, 2, 0}});
  Mat e(3, 3);
  e(0, 1) = ExtScalar(-2) * i;
  e(1, 0) = i;
  e(1, 2) = -i;
  e(2, 1) = ExtScalar(2) * i;
  t.a_eps = e;
  return t;
}

Rational rand_rational(std::mt19937& rng)
{
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  int p = num(rng);
  if (p == 0)
    p = 1;
  return make_rational(p, den(rng));
}

} // namespace

TEST_CASE("analyze_pair on canonical modules")
{
  const ModuleRep b4 = construct({Kind::B, 4, Idx::zero});
  const PairAnalysis p = analyze_pair(b4.x, b4.y);
  CHECK(p.d == 4);
  CHECK(p.is_leonard);
  CHECK(p.theta == std::vector<Rational>{4, -2, 0, 2, -4});
  CHECK(p.theta_star == std::vector<Rational>{4, -2, 0, 2, -4});
  CHECK(p.bip_class == ProfileClass::bipartite);
  CHECK(p.dual_bip_class == ProfileClass::bipartite);
  for (const auto& v : p.a_diag)
    CHECK(v.is_zero());
  for (const auto& v : p.a_star_diag)
    CHECK(v.is_zero());
  CHECK(p.is_BI);

  const ModuleRep ab = construct({Kind::AB, 3, Idx::x});
  const PairAnalysis q = analyze_pair(ab.x, ab.y);
  CHECK(q.is_leonard);
  // x-spectrum (-7,5,-3,1) reorients to start from the larger endpoint
  CHECK(q.theta == std::vector<Rational>{1, -3, 5, -7});
  CHECK(q.theta_star == std::vector<Rational>{7, -5, 3, -1});
  CHECK(q.bip_class == ProfileClass::almost_bipartite_last);
  CHECK(q.dual_bip_class == ProfileClass::almost_bipartite_first);
  CHECK(q.a_diag[3] == ExtScalar(-4));
  CHECK(q.a_star_diag[0] == ExtScalar(4));
  for (int i = 0; i < 3; ++i)
  {
    CHECK(q.a_diag[i].is_zero());
    CHECK(q.a_star_diag[i + 1].is_zero());
  }
  CHECK(q.is_BI);

  // role swap mirrors the analysis
  const PairAnalysis r = analyze_pair(ab.y, ab.x);
  CHECK(r.is_leonard);
  CHECK(r.theta == q.theta_star);
  CHECK(r.theta_star == q.theta);
  CHECK(r.bip_class == q.dual_bip_class);

  CHECK_THROWS_AS(analyze_pair(Mat::identity(2), Mat::identity(2)),
                  precondition_error);

  // x alone against itself has no coupling path
  const PairAnalysis s = analyze_pair(b4.x, b4.x);
  CHECK(!s.is_leonard);
}

TEST_CASE("analyze_pair across families")
{
  for (const ModuleType& t : all_types(6))
  {
    if (t.d < 1)
      continue;
    const ModuleRep m = construct(t);
    const PairAnalysis p = analyze_pair(m.x, m.y);
    CHECK(p.is_leonard);
    CHECK(p.theta == standard_ordering(eig_tables(t).x));
    CHECK(p.theta_star == standard_ordering(eig_tables(t).y));
    CHECK(p.is_BI);
    const BipClass want =
        t.kind == Kind::B ? BipClass::bipartite : BipClass::almost_bipartite;
    CHECK(bip_class_of(p.bip_class) == want);
    CHECK(bip_class_of(p.dual_bip_class) == want);
    // bipartite spectra are antisymmetric
    if (t.kind == Kind::B)
      for (int i = 0; i <= t.d; ++i)
        CHECK(p.theta[i] == -p.theta[t.d - i]);
  }
}

TEST_CASE("fit_AW canonical and scaled")
{
  const ModuleRep b4 = construct({Kind::B, 4, Idx::zero});
  const AWParams w = fit_AW(analyze_pair(b4.x, b4.y));
  CHECK(w.unique);
  CHECK(w.beta == ExtScalar(-2));
  CHECK(w.gamma.is_zero());
  CHECK(w.gamma_star.is_zero());
  CHECK(w.rho == ExtScalar(4));
  CHECK(w.rho_star == ExtScalar(4));
  CHECK(w.omega.is_zero());
  CHECK(w.eta.is_zero());
  CHECK(w.eta_star.is_zero());

  const ModuleRep b6 = construct({Kind::B, 6, Idx::zero});
  const AWParams ws =
      fit_AW(analyze_pair(ExtScalar(3) * b6.x, ExtScalar(Rational(1, 2)) * b6.y));
  CHECK(ws.beta == ExtScalar(-2));
  CHECK(ws.rho == ExtScalar(36));
  CHECK(ws.rho_star == ExtScalar(1));
  CHECK(ws.gamma.is_zero());
  CHECK(ws.gamma_star.is_zero());
  CHECK(ws.omega.is_zero());
  CHECK(ws.eta.is_zero());
  CHECK(ws.eta_star.is_zero());

  const ModuleRep ab = construct({Kind::AB, 4, Idx::zero});
  const AWParams wa = fit_AW(analyze_pair(ab.x, ab.y));
  CHECK(wa.beta == ExtScalar(-2));
  CHECK(wa.rho == ExtScalar(4));
  CHECK(wa.rho_star == ExtScalar(4));
  CHECK(wa.gamma.is_zero());
  CHECK(wa.gamma_star.is_zero());
  CHECK(wa.omega.is_zero());
  CHECK(wa.eta.is_zero());
  CHECK(wa.eta_star.is_zero());
}

TEST_CASE("fit_AW random rational scalings")
{
  std::mt19937 rng(412);
  for (const ModuleType& t : all_types(6))
  {
    if (t.d < 3)
      continue;
    const ModuleRep m = construct(t);
    for (int trial = 0; trial < 3; ++trial)
    {
      const Rational xi = rand_rational(rng);
      const Rational xs = rand_rational(rng);
      const AWParams w = fit_AW(
          analyze_pair(ExtScalar(xi) * m.x, ExtScalar(xs) * m.y));
      CHECK(w.unique);
      CHECK(w.beta == ExtScalar(-2));
      CHECK(w.rho == ExtScalar(Rational(4 * xi * xi)));
      CHECK(w.rho_star == ExtScalar(Rational(4 * xs * xs)));
      CHECK(w.gamma.is_zero());
      CHECK(w.gamma_star.is_zero());
      CHECK(w.omega.is_zero());
      CHECK(w.eta.is_zero());
      CHECK(w.eta_star.is_zero());
    }
  }
}

TEST_CASE("fit_AW below the uniqueness diameter")
{
  const ModuleRep b2 = construct({Kind::B, 2, Idx::zero});
  const AWParams w = fit_AW(analyze_pair(b2.x, b2.y));
  CHECK(!w.unique);
  CHECK(w.rho == ExtScalar(4));
  CHECK(w.rho_star == ExtScalar(4));
}

TEST_CASE("bannai_ito ratio verdicts")
{
  const ModuleRep b4 = construct({Kind::B, 4, Idx::zero});
  CHECK(is_bannai_ito(analyze_pair(b4.x, b4.y)) == BIVerdict::yes);

  PairAnalysis geom;
  geom.d = 3;
  geom.is_leonard = true;
  geom.theta = {1, 2, 4, 8};
  geom.theta_star = {1, 2, 4, 8};
  CHECK(is_bannai_ito(geom) == BIVerdict::no);

  PairAnalysis ab3;
  ab3.d = 3;
  ab3.is_leonard = true;
  ab3.theta = {-7, 5, -3, 1};
  ab3.theta_star = {-7, 5, -3, 1};
  CHECK(is_bannai_ito(ab3) == BIVerdict::yes);

  const ModuleRep b2 = construct({Kind::B, 2, Idx::zero});
  CHECK(is_bannai_ito(analyze_pair(b2.x, b2.y)) == BIVerdict::indeterminate);
}

TEST_CASE("refined relation residuals")
{
  const ModuleRep b4 = construct({Kind::B, 4, Idx::zero});
  const RefinedReport ok =
      check_refined_relations(b4.x, b4.y, ExtScalar(4), ExtScalar(4));
  CHECK(ok.ok);
  CHECK(ok.residual.is_zero());
  CHECK(ok.residual_star.is_zero());

  const RefinedReport bad =
      check_refined_relations(b4.x, b4.y, ExtScalar(5), ExtScalar(4));
  CHECK(!bad.ok);
  // the residual collapses to (4 - 5) y
  CHECK(bad.residual == -b4.y);

  const CounterTriple c = counterexample();
  CHECK(check_refined_relations(c.a, c.a_star, ExtScalar(4), ExtScalar(4)).ok);
  CHECK(check_refined_relations(c.a_star, c.a_eps, ExtScalar(4), ExtScalar(4)).ok);
  CHECK(check_refined_relations(c.a_eps, c.a, ExtScalar(4), ExtScalar(4)).ok);
}

TEST_CASE("xspace expansion")
{
  const ModuleRep b4 = construct({Kind::B, 4, Idx::zero});
  const XSpaceExpansion e = xspace_expand(b4.x, b4.y, b4.z);
  CHECK(e.in_span);
  CHECK(e.unique);
  CHECK(e.alpha[0].is_zero());
  CHECK(e.alpha[1].is_zero());
  CHECK(e.alpha[2].is_zero());
  CHECK(e.alpha[3] == ExtScalar(Rational(1, 2)));
  CHECK(e.alpha[4] == ExtScalar(Rational(1, 2)));

  const XSpaceExpansion self = xspace_expand(b4.x, b4.y, b4.x);
  CHECK(self.in_span);
  CHECK(self.alpha[0].is_zero());
  CHECK(self.alpha[1] == ExtScalar(1));
  CHECK(self.alpha[2].is_zero());
  CHECK(self.alpha[3].is_zero());
  CHECK(self.alpha[4].is_zero());

  Mat out(5, 5);
  for (int i = 0; i < 5; ++i)
    out(i, i) = ExtScalar(i + 1);
  const XSpaceExpansion miss = xspace_expand(b4.x, b4.y, out);
  CHECK(!miss.in_span);
  CHECK(miss.unique);

  // order 2 leaves at most four dimensions for the five operators
  const ModuleRep ab1 = construct({Kind::AB, 1, Idx::zero});
  const XSpaceExpansion low = xspace_expand(ab1.x, ab1.y, ab1.x);
  CHECK(low.in_span);
  CHECK(!low.unique);
}

TEST_CASE("independence of the cubic words")
{
  const ModuleRep b4 = construct({Kind::B, 4, Idx::zero});
  CHECK(lin_independence_check(b4.x, b4.y));
  const ModuleRep ab5 = construct({Kind::AB, 5, Idx::x});
  CHECK(lin_independence_check(ab5.x, ab5.y));
  for (const ModuleType& t : all_types(6))
  {
    if (t.d < 3)
      continue;
    const ModuleRep m = construct(t);
    CHECK(lin_independence_check(m.x, m.y));
  }
  // at diameter 1 the words can coincide: an involution collapses them
  const Mat inv = from_ints({{1, 0}, {0, -1}});
  const Mat flip = from_ints({{0, 1}, {1, 0}});
  CHECK(!lin_independence_check(inv, flip));
  // yet the canonical diameter-1 pair happens to keep them independent
  const ModuleRep ab1 = construct({Kind::AB, 1, Idx::zero});
  CHECK(lin_independence_check(ab1.x, ab1.y));
}

TEST_CASE("verify_triple verdicts")
{
  const ModuleRep b6 = construct({Kind::B, 6, Idx::zero});
  const TripleAnalysis tb = verify_triple(b6.x, b6.y, b6.z);
  CHECK(tb.d == 6);
  CHECK(tb.is_leonard);
  CHECK(tb.cls == TripleClass::totally_bipartite);
  CHECK(tb.is_BI);
  for (int k = 0; k < 3; ++k)
    CHECK(tb.theta[k] ==
          standard_ordering(eig_tables(b6.type).of(
              k == 0 ? Idx::x : k == 1 ? Idx::y : Idx::z)));

  const ModuleRep ab4 = construct({Kind::AB, 4, Idx::y});
  const TripleAnalysis ta = verify_triple(ab4.x, ab4.y, ab4.z);
  CHECK(ta.is_leonard);
  CHECK(ta.cls == TripleClass::totally_almost_bipartite);
  CHECK(ta.is_BI);

  const CounterTriple c = counterexample();
  const TripleAnalysis tc = verify_triple(c.a, c.a_star, c.a_eps);
  CHECK(tc.d == 2);
  CHECK(tc.is_leonard);
  CHECK(tc.cls == TripleClass::totally_bipartite);

  // a diagonal pair in the triple breaks the coupling path
  const TripleAnalysis bad = verify_triple(b6.x, b6.x, b6.z);
  CHECK(!bad.is_leonard);
}

TEST_CASE("verify_triple across families")
{
  for (const ModuleType& t : all_types(5))
  {
    if (t.d < 1)
      continue;
    const ModuleRep m = construct(t);
    const TripleAnalysis a = verify_triple(m.x, m.y, m.z);
    CHECK(a.is_leonard);
    const TripleClass want = t.kind == Kind::B
                                 ? TripleClass::totally_bipartite
                                 : TripleClass::totally_almost_bipartite;
    CHECK(a.cls == want);
    CHECK(a.is_BI);
  }
}
