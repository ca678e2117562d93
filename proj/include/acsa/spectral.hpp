#pragma once

#include <utility>
#include <vector>

#include "acsa/matrix.hpp"

namespace acsa
{

// Coefficients c[0..n] of the characteristic polynomial sum c[i] lambda^i,
// monic with c[n] = 1, computed without dividing by matrix-dependent values.
std::vector<ExtScalar> char_poly(const Mat& m);

// Roots of the characteristic polynomial with multiplicities, sorted in
// decreasing order. Throws precondition_error when the polynomial does not
// split over the rationals.
std::vector<std::pair<Rational, int>> rational_eigenvalues(const Mat& m);

struct SpectralData
{
  std::vector<ExtScalar> eigenvalues;
  std::vector<Mat> idempotents;
};

// Primitive idempotents e_i = prod_{j != i} (m - theta_j I) / (theta_i -
// theta_j) for the given eigenvalue ordering. The ordering must list
// mutually distinct values and match the spectrum of a diagonalizable m.
SpectralData primitive_idempotents(const Mat& m,
                                   const std::vector<ExtScalar>& ordering);

enum class ProfileClass
{
  bipartite,
  almost_bipartite_first,
  almost_bipartite_last,
  other
};

struct TridiagonalProfile
{
  bool is_tridiagonal = false;
  // All subdiagonal and superdiagonal entries nonzero; vacuous at order 1.
  bool is_irreducible = false;
  std::vector<ExtScalar> diagonal;
  ProfileClass cls = ProfileClass::other;
};

// Structural classification: bipartite means a zero diagonal, almost
// bipartite means exactly one nonzero corner diagonal entry and a zero
// diagonal elsewhere. A nonzero 1x1 matrix counts as almost bipartite at
// the last position.
TridiagonalProfile tridiagonal_profile(const Mat& m);

} // namespace acsa
