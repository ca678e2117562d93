#pragma once

#include <array>
#include <vector>

#include "acsa/matrix.hpp"
#include "acsa/spectral.hpp"

namespace acsa
{

// Askey-Wilson parameters of a tridiagonal pair. unique is false when the
// diameter is too small to pin the parameters down.
struct AWParams
{
  ExtScalar beta, gamma, gamma_star, rho, rho_star, omega, eta, eta_star;
  bool unique = true;
};

struct PairAnalysis
{
  Mat a, a_star;
  int d = 0;
  bool is_leonard = false;
  // path-ordered spectra, each starting from the larger endpoint; empty when
  // the corresponding eigenbasis search fails
  std::vector<Rational> theta, theta_star;
  // a_diag[i]: diagonal of A in the ordered A*-eigenbasis, and dually
  std::vector<ExtScalar> a_diag, a_star_diag;
  // profile of A in the A*-eigenbasis, and dually
  ProfileClass bip_class = ProfileClass::other;
  ProfileClass dual_bip_class = ProfileClass::other;
  // every eigenvalue ratio (theta[i-2]-theta[i+1])/(theta[i-1]-theta[i])
  // equals -1, on both spectra; vacuous below diameter 3
  bool is_BI = false;
};

// The two almost-bipartite orientations identified.
enum class BipClass
{
  bipartite,
  almost_bipartite,
  other
};

BipClass bip_class_of(ProfileClass c);

// Eigenbasis orderings realizing diagonal-against-irreducible-tridiagonal in
// both directions. Throws precondition_error when a spectrum is degenerate
// or does not split over the rationals; a failed ordering search is a
// verdict, not an error.
PairAnalysis analyze_pair(const Mat& a, const Mat& a_star);

// Parameters solved from the eigenvalue recurrence rows together with the
// diagonal data, then verified against the operator identities. Throws
// precondition_error when the system is inconsistent.
AWParams fit_AW(const PairAnalysis& p);

enum class BIVerdict
{
  yes,
  no,
  indeterminate
};

// Whether every ratio of alternate eigenvalue differences equals -1; below
// diameter 3 there is no ratio to test.
BIVerdict is_bannai_ito(const PairAnalysis& p);

struct RefinedReport
{
  // A^2 A* + 2 A A* A + A* A^2 - rho A*, and the dual residual
  Mat residual, residual_star;
  bool ok = false;
};

RefinedReport check_refined_relations(const Mat& a, const Mat& a_star,
                                      const ExtScalar& rho,
                                      const ExtScalar& rho_star);

struct XSpaceExpansion
{
  bool in_span = false;
  // rank-5 basis property; fails at order <= 2
  bool unique = false;
  // coefficients on I, A, A*, AA*, A*A
  std::array<ExtScalar, 5> alpha{};
};

// Expansion of m over the span of I, A, A*, AA*, A*A.
XSpaceExpansion xspace_expand(const Mat& a, const Mat& a_star, const Mat& m);

// Whether A^2 A*, A A* A, A* A^2 are linearly independent.
bool lin_independence_check(const Mat& a, const Mat& a_star);

enum class TripleClass
{
  totally_bipartite,
  totally_almost_bipartite,
  other
};

struct TripleAnalysis
{
  int d = 0;
  bool is_leonard = false;
  // ordered spectrum per operator, in input order
  std::array<std::vector<Rational>, 3> theta;
  // profiles[k][j]: in the eigenbasis of operator k, the profile of the
  // (k+1+j)-th operator, cyclically
  std::array<std::array<TridiagonalProfile, 2>, 3> profiles;
  TripleClass cls = TripleClass::other;
  bool is_BI = false;
};

// Per-operator eigenbasis analysis against the other two; all verdicts, no
// errors.
TripleAnalysis verify_triple(const Mat& a, const Mat& a_star,
                             const Mat& a_eps);

} // namespace acsa
