#pragma once

#include <array>
#include <string>
#include <vector>

#include "acsa/algebra.hpp"
#include "acsa/matrix.hpp"

namespace acsa
{

enum class Kind
{
  B,
  AB
};

// B(d) with d even, or AB(d, n) with n one of 0, x, y, z.
struct ModuleType
{
  Kind kind = Kind::B;
  int d = 0;
  Idx n = Idx::zero;
};

bool operator==(const ModuleType& a, const ModuleType& b);
bool operator!=(const ModuleType& a, const ModuleType& b);
std::string type_str(const ModuleType& t);

struct BasisTag
{
  enum class Kind
  {
    // the defining basis {v_i} of the constructor
    constructor,
    // {e_i^a v^b} for an ordered generator pair (a, b)
    pair,
    // whatever coordinates the input matrices carried (twists, recognition)
    ambient
  };
  Kind kind = Kind::constructor;
  Idx a = Idx::x;
  Idx b = Idx::y;
};

struct ModuleRep
{
  ModuleType type;
  Mat x, y, z;
  BasisTag basis;

  const Mat& generator(Idx g) const;
};

// Generator matrices in the defining basis. B requires even d.
ModuleRep construct(const ModuleType& t);

// The B-family matrices at odd d, which are reducible, along with bases of
// the two invariant summands span{v_i + v_(d-i)} and span{v_i - v_(d-i)}.
struct ReducibleB
{
  int d = 0;
  Mat x, y, z;
  std::vector<std::vector<ExtScalar>> v1, v2;
};

ReducibleB construct_reducible_B(int d);

// Type from the order and the trace triple; throws precondition_error when
// the traces match no family.
ModuleType classify_by_traces(const Mat& x, const Mat& y, const Mat& z);

// Ordered spectra of the three generators, each in the ordering of the
// closed-form tables.
struct EigTable
{
  std::vector<Rational> x, y, z;

  const std::vector<Rational>& of(Idx g) const;
};

EigTable eig_tables(const ModuleType& t);

// Order the set as a path under the adjacency "mu = 2 - lambda or
// mu = -2 - lambda", starting from the larger endpoint. Throws
// precondition_error when the values do not form a single path.
std::vector<Rational> standard_ordering(std::vector<Rational> values);

// The display matrices of the ordered generators (a, b, c) in the
// {e_i^a v^b} basis, built directly from the closed-form entry formulas;
// construct(t) is the (x, y) case.
std::array<Mat, 3> closed_form_rep(const ModuleType& t, Idx a, Idx b);

// Columns i = 0..d are e_i^a v^b, where v^b spans the first b-eigenspace
// and has its first nonzero coordinate normalized to 1.
Mat six_bases(const ModuleRep& m, Idx a, Idx b);

// Matrices of the generators (a, b, c) in the six_bases(m, a, b) basis,
// with c the remaining generator.
std::array<Mat, 3> representation_in_basis(const ModuleRep& m, Idx a, Idx b);

// Columns are the canonical basis vectors rebuilt from the highest
// eigenvector of x by the two-term recursion; conjugating by the result
// brings any isomorphic copy to the constructor matrices.
Mat canonical_basis(const Mat& x, const Mat& y, const Mat& z,
                    const ModuleType& t);

struct IsoResult
{
  bool isomorphic = false;
  // P with P (g on m1) = (g on m2) P for each generator.
  Mat intertwiner;
  std::string reason;
};

IsoResult module_isomorphism(const ModuleRep& m1, const ModuleRep& m2);

// Precompose the action with the inverse automorphism; the type moves by
// the index permutation.
ModuleRep twist(const ModuleRep& m, const Automorphism& s);

Mat evaluate_h(Idx n, const ModuleRep& m);
ExtScalar h_trace(Idx n, const ModuleRep& m);

// Span growth under repeated generator action from each eigenvector of a
// generator with simple rational spectrum; irreducible exactly when every
// seed generates the whole space.
bool is_irreducible(const Mat& x, const Mat& y, const Mat& z);

} // namespace acsa
