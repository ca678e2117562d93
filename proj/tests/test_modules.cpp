#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acsa/errors.hpp"
#include "acsa/modules.hpp"
#include "acsa/spectral.hpp"

using namespace acsa;

namespace
{

Mat from_ints(const std::vector<std::vector<long long>>& rows)
{
  std::vector<std::vector<ExtScalar>> e;
  for (const auto& r : rows)
  {
    std::vector<ExtScalar> row;
    for (long long v : r)
      row.emplace_back(v);
    e.push_back(std::move(row));
  }
  return Mat(std::move(e));
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

constexpr int sgn(int i) { return i % 2 == 0 ? 1 : -1; }

} // namespace

TEST_CASE("construct oracles")
{
  SUBCASE("B(2)")
  {
    const auto m = construct({Kind::B, 2, Idx::zero});
    CHECK(m.x == from_ints({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
    CHECK(m.y == from_ints({{0, 2, 0}, {1, 0, 1}, {0, 2, 0}}));
    CHECK(m.z == from_ints({{0, 2, 0}, {1, 0, -1}, {0, -2, 0}}));
  }
  SUBCASE("diameter zero gives the characters")
  {
    for (Idx n : {Idx::zero, Idx::x, Idx::y, Idx::z})
    {
      const auto m = construct({Kind::AB, 0, n});
      const auto f = character_eval(n).values;
      CHECK(m.x(0, 0) == ExtScalar(f[0]));
      CHECK(m.y(0, 0) == ExtScalar(f[1]));
      CHECK(m.z(0, 0) == ExtScalar(f[2]));
    }
    const auto b0 = construct({Kind::B, 0, Idx::zero});
    CHECK(b0.x.is_zero());
    CHECK(b0.y.is_zero());
    CHECK(b0.z.is_zero());
  }
  SUBCASE("AB(1,0)")
  {
    const auto m = construct({Kind::AB, 1, Idx::zero});
    CHECK(m.x == from_ints({{-3, 0}, {0, 1}}));
    CHECK(m.y == from_ints({{0, -3}, {-1, -2}}));
    CHECK(m.z == from_ints({{0, 3}, {1, -2}}));
  }
  SUBCASE("odd diameter B rejected")
  {
    CHECK_THROWS_AS(construct({Kind::B, 3, Idx::zero}), precondition_error);
    CHECK_THROWS_AS(construct({Kind::B, -2, Idx::zero}), precondition_error);
  }
}

TEST_CASE("relations and irreducibility")
{
  for (const auto& t : all_types(6))
  {
    CAPTURE(type_str(t));
    const auto m = construct(t);
    CHECK(check_relations_xyz(m.x, m.y, m.z).ok);
    CHECK(check_relations_xy(m.x, m.y).ok);
    CHECK(is_irreducible(m.x, m.y, m.z));
  }
}

TEST_CASE("trace tables")
{
  for (const auto& t : all_types(6))
  {
    CAPTURE(type_str(t));
    const auto m = construct(t);
    for (Idx g : {Idx::x, Idx::y, Idx::z})
    {
      const long long expect =
          t.kind == Kind::B
              ? 0
              : static_cast<long long>(sgn(t.d)) * hat(g, t.n) * (t.d + 1);
      CHECK(m.generator(g).trace() == ExtScalar(expect));
    }
    for (Idx n : {Idx::zero, Idx::x, Idx::y, Idx::z})
    {
      const long long expect =
          t.kind == Kind::B
              ? 0
              : (n == t.n ? 3LL * sgn(t.d) * (t.d + 1)
                          : static_cast<long long>(sgn(t.d + 1)) * (t.d + 1));
      CHECK(h_trace(n, m) == ExtScalar(expect));
    }
  }
}

TEST_CASE("eigenvalue tables")
{
  SUBCASE("oracles")
  {
    const auto b4 = eig_tables({Kind::B, 4, Idx::zero});
    CHECK(b4.x == std::vector<Rational>{4, -2, 0, 2, -4});
    CHECK(b4.y == b4.x);
    const auto ab20 = eig_tables({Kind::AB, 2, Idx::zero});
    CHECK(ab20.z == std::vector<Rational>{5, -3, 1});
    const auto ab2y = eig_tables({Kind::AB, 2, Idx::y});
    CHECK(ab2y.x == std::vector<Rational>{-5, 3, -1});
    CHECK(ab2y.y == std::vector<Rational>{5, -3, 1});
  }
  for (const auto& t : all_types(6))
  {
    CAPTURE(type_str(t));
    const auto m = construct(t);
    const auto tab = eig_tables(t);
    for (Idx g : {Idx::x, Idx::y, Idx::z})
    {
      const auto& theta = tab.of(g);
      // matches the actual spectrum of the matrix
      const auto ev = rational_eigenvalues(m.generator(g));
      CHECK(ev.size() == theta.size());
      for (const auto& [lam, mult] : ev)
      {
        CHECK(mult == 1);
        CHECK(std::count(theta.begin(), theta.end(), lam) == 1);
      }
      // consecutive terms adjacent under 2-lambda or -2-lambda
      for (std::size_t i = 0; i + 1 < theta.size(); ++i)
      {
        const bool adj = theta[i + 1] == Rational(2) - theta[i]
                         || theta[i + 1] == Rational(-2) - theta[i];
        CHECK(adj);
      }
    }
    // theta_i = (-1)^i (theta_0 - 2 eps i) for the x ordering
    if (t.d >= 1)
    {
      const auto& theta = tab.x;
      for (int eps : {1, -1})
      {
        bool all = true;
        for (int i = 0; i <= t.d; ++i)
          if (theta[i] != Rational(sgn(i)) * (theta[0] - Rational(2 * eps * i)))
            all = false;
        if (theta[1] == Rational(2) - theta[0])
          CHECK(all == (eps == 1));
      }
    }
    // bipartite antisymmetry
    if (t.kind == Kind::B)
      for (int i = 0; i <= t.d; ++i)
        CHECK(tab.x[i] == -tab.x[t.d - i]);
  }
}

TEST_CASE("standard_ordering")
{
  CHECK(standard_ordering({4, -2, 0, 2, -4})
        == std::vector<Rational>{4, -2, 0, 2, -4});
  CHECK(standard_ordering({-4, 4, 2, 0, -2})
        == std::vector<Rational>{4, -2, 0, 2, -4});
  CHECK(standard_ordering({1}) == std::vector<Rational>{1});
  CHECK(standard_ordering({-7, 5, -3, 1})
        == std::vector<Rational>{1, -3, 5, -7});
  CHECK_THROWS_AS(standard_ordering({0, 5}), precondition_error);
  CHECK_THROWS_AS(standard_ordering({0, 2, 2}), precondition_error);
  // two disjoint adjacent pairs do not chain
  CHECK_THROWS_AS(standard_ordering({0, 2, 7, -9}), precondition_error);
}

TEST_CASE("six bases")
{
  SUBCASE("(x,y) recovers the defining basis")
  {
    for (const auto& t : all_types(4))
    {
      CAPTURE(type_str(t));
      const auto m = construct(t);
      CHECK(six_bases(m, Idx::x, Idx::y) == Mat::identity(t.d + 1));
    }
  }
  SUBCASE("all ordered pairs invertible on B(4)")
  {
    const auto m = construct({Kind::B, 4, Idx::zero});
    for (Idx a : {Idx::x, Idx::y, Idx::z})
      for (Idx b : {Idx::x, Idx::y, Idx::z})
      {
        if (a == b)
          continue;
        CHECK(rank(six_bases(m, a, b)) == 5);
      }
  }
  CHECK_THROWS_AS(six_bases(construct({Kind::B, 2, Idx::zero}), Idx::x, Idx::x),
                  precondition_error);
}

TEST_CASE("representation in a basis matches the closed forms")
{
  SUBCASE("frozen entries")
  {
    // c-matrix of B(2) at (x, y)
    const auto b2 = closed_form_rep({Kind::B, 2, Idx::zero}, Idx::x, Idx::y);
    CHECK(b2[2] == from_ints({{0, 2, 0}, {1, 0, -1}, {0, -2, 0}}));
    // a-matrix of B(4) is diag(d, 2-d, d-4, ..., -d)
    const auto b4 = closed_form_rep({Kind::B, 4, Idx::zero}, Idx::y, Idx::z);
    for (int i = 0; i <= 4; ++i)
      CHECK(b4[0](i, i) == ExtScalar(sgn(i) * (4 - 2 * i)));
    // b-matrix corner block of AB(3,x) at (y, z): rows d and d carry d, d+1
    const auto ab = closed_form_rep({Kind::AB, 3, Idx::x}, Idx::y, Idx::z);
    const int hb = hat(Idx::z, Idx::x) * sgn(3);
    CHECK(ab[1](3, 2) == ExtScalar(hb * 3));
    CHECK(ab[1](3, 3) == ExtScalar(hb * 4));
  }
  SUBCASE("(x,y) display equals the constructor output")
  {
    const auto ab3x = construct({Kind::AB, 3, Idx::x});
    const auto rep = representation_in_basis(ab3x, Idx::x, Idx::y);
    CHECK(rep[0] == ab3x.x);
    CHECK(rep[1] == ab3x.y);
    CHECK(rep[2] == ab3x.z);
  }
  SUBCASE("all pairs, all types")
  {
    for (const auto& t : all_types(4))
    {
      CAPTURE(type_str(t));
      const auto m = construct(t);
      for (Idx a : {Idx::x, Idx::y, Idx::z})
        for (Idx b : {Idx::x, Idx::y, Idx::z})
        {
          if (a == b)
            continue;
          const auto got = representation_in_basis(m, a, b);
          const auto want = closed_form_rep(t, a, b);
          CHECK(got[0] == want[0]);
          CHECK(got[1] == want[1]);
          CHECK(got[2] == want[2]);
        }
    }
  }
}

TEST_CASE("classify_by_traces")
{
  const auto b4 = construct({Kind::B, 4, Idx::zero});
  CHECK(classify_by_traces(b4.x, b4.y, b4.z) == ModuleType{Kind::B, 4, Idx::zero});
  const auto ab3x = construct({Kind::AB, 3, Idx::x});
  CHECK(classify_by_traces(ab3x.x, ab3x.y, ab3x.z)
        == ModuleType{Kind::AB, 3, Idx::x});
  for (const auto& t : all_types(6))
  {
    const auto m = construct(t);
    CHECK(classify_by_traces(m.x, m.y, m.z) == t);
  }
  // traces matching no row
  const Mat bad = from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(classify_by_traces(ExtScalar(1) * bad, ExtScalar(-1) * bad,
                                     ExtScalar(-1) * bad),
                  precondition_error);
}

TEST_CASE("twisting")
{
  const auto rho_x = automorphism_from_perm(parse_perm("(0 x)(y z)"));
  SUBCASE("B type is fixed")
  {
    const auto m = construct({Kind::B, 4, Idx::zero});
    for (const auto& p : all_perms())
    {
      const auto tw = twist(m, automorphism_from_perm(p));
      CHECK(check_relations_xyz(tw.x, tw.y, tw.z).ok);
      CHECK(classify_by_traces(tw.x, tw.y, tw.z) == m.type);
    }
  }
  SUBCASE("AB index moves by the permutation")
  {
    const auto m = construct({Kind::AB, 2, Idx::zero});
    const auto tw = twist(m, rho_x);
    CHECK(tw.type == ModuleType{Kind::AB, 2, Idx::x});
    CHECK(classify_by_traces(tw.x, tw.y, tw.z) == tw.type);
    const auto c3 = automorphism_from_perm(parse_perm("(x y z)"));
    const auto m2 = construct({Kind::AB, 3, Idx::x});
    CHECK(classify_by_traces(twist(m2, c3).x, twist(m2, c3).y, twist(m2, c3).z)
          == ModuleType{Kind::AB, 3, Idx::y});
  }
}

TEST_CASE("module_isomorphism")
{
  SUBCASE("identity on itself")
  {
    const auto m = construct({Kind::AB, 3, Idx::z});
    const auto r = module_isomorphism(m, m);
    REQUIRE(r.isomorphic);
    CHECK(r.intertwiner == Mat::identity(4));
  }
  SUBCASE("twists of B(6)")
  {
    const auto m = construct({Kind::B, 6, Idx::zero});
    for (const auto& p : all_perms())
    {
      const auto tw = twist(m, automorphism_from_perm(p));
      const auto r = module_isomorphism(m, tw);
      REQUIRE(r.isomorphic);
      for (Idx g : {Idx::x, Idx::y, Idx::z})
        CHECK(r.intertwiner * m.generator(g)
              == tw.generator(g) * r.intertwiner);
    }
  }
  SUBCASE("conjugated copies")
  {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> ent(-2, 2);
    for (const auto& t : all_types(3))
    {
      const auto m = construct(t);
      const int n1 = t.d + 1;
      Mat p(n1, n1);
      for (;;)
      {
        for (int i = 0; i < n1; ++i)
          for (int j = 0; j < n1; ++j)
            p(i, j) = ExtScalar(ent(rng));
        if (rank(p) == n1)
          break;
      }
      const Mat pi = inverse(p);
      ModuleRep c;
      c.type = t;
      c.basis.kind = BasisTag::Kind::ambient;
      c.x = p * m.x * pi;
      c.y = p * m.y * pi;
      c.z = p * m.z * pi;
      const auto r = module_isomorphism(m, c);
      REQUIRE(r.isomorphic);
      for (Idx g : {Idx::x, Idx::y, Idx::z})
        CHECK(r.intertwiner * m.generator(g)
              == c.generator(g) * r.intertwiner);
    }
  }
  SUBCASE("different types rejected with a trace witness")
  {
    const auto a = construct({Kind::AB, 3, Idx::zero});
    const auto b = construct({Kind::AB, 3, Idx::x});
    const auto r = module_isomorphism(a, b);
    CHECK(!r.isomorphic);
    CHECK(r.reason.find("trace of y") != std::string::npos);
  }
}

TEST_CASE("reducible B family at odd diameter")
{
  for (int d : {1, 3, 5})
  {
    const auto r = construct_reducible_B(d);
    CHECK(check_relations_xyz(r.x, r.y, r.z).ok);
    CHECK(!is_irreducible(r.x, r.y, r.z));
    CHECK(static_cast<int>(r.v1.size()) == (d + 1) / 2);
    CHECK(static_cast<int>(r.v2.size()) == (d + 1) / 2);
    for (const auto* part : {&r.v1, &r.v2})
    {
      // span is invariant: appending images does not raise the rank
      std::vector<std::vector<ExtScalar>> rows = *part;
      const int base = rank(Mat(rows));
      CHECK(base == static_cast<int>(part->size()));
      for (const auto& v : *part)
        for (const Mat* g : {&r.x, &r.y, &r.z})
          rows.push_back(matvec(*g, v));
      CHECK(rank(Mat(rows)) == base);
    }
  }
  CHECK_THROWS_AS(construct_reducible_B(2), precondition_error);
}
