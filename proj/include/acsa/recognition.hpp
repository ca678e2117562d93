#pragma once

#include "acsa/leonard.hpp"
#include "acsa/modules.hpp"

#include <array>
#include <optional>
#include <string>

namespace acsa
{

// A Leonard pair rewritten as scalar multiples of the generator actions of
// an irreducible module: A = xi * x, A* = xi_star * y, in the coordinates
// the input matrices carried.
struct PairRecognition
{
  ExtScalar rho, rho_star;
  ExtScalar xi, xi_star;
  ModuleRep module;
  ModuleType type;
  int choice_count = 4;
};

// Requires a Leonard pair of diameter at least three whose two profiles are
// both bipartite or both almost bipartite and whose eigenvalue ratios are
// Bannai-Ito. The reported xi, xi_star have positive leading coefficients;
// pair_choices enumerates the full sign orbit.
PairRecognition recognize_pair(const Mat& a, const Mat& a_star);

// The four module structures carried by one recognized pair: sign choices
// (+-xi, +-xi_star), with the z action flipped by the product of the signs
// and the type reclassified.
std::array<PairRecognition, 4> pair_choices(const PairRecognition& r);

// A, A*, and xi_eps times the z action; the result is a Leonard triple of
// the same bipartite class. Requires xi_eps nonzero.
std::array<Mat, 3> extend_pair_to_triple(const PairRecognition& r,
                                         const ExtScalar& xi_eps);

// A Leonard triple rewritten over one module: A = xi * x, A* = xi_star * y,
// A^eps = xi_eps * z. The zetas are the mixed coefficients of each operator
// over the span of the other two, so zeta = xi / (2 xi_star xi_eps)
// cyclically; xi and xi_star carry positive leading coefficients and xi_eps
// is then determined.
struct TripleRecognition
{
  ExtScalar zeta, zeta_star, zeta_eps;
  ExtScalar xi, xi_star, xi_eps;
  ModuleRep module;
  ModuleType type;
};

// Failure to carry a module structure is a result, not an error: the
// certificate names the obstruction. Diameter two inputs reach this path.
struct TripleOutcome
{
  bool ok = false;
  std::optional<TripleRecognition> recognition;
  std::string certificate;
};

TripleOutcome recognize_triple(const Mat& a, const Mat& a_star,
                               const Mat& a_eps);

// The order-three triple over Q(sqrt(-1)) that verifies as a totally
// bipartite Leonard triple at diameter two yet carries no module structure;
// recognize_triple returns its certificate.
std::array<Mat, 3> counterexample_d2();

struct IsoDecision
{
  bool isomorphic = false;
  // P with P A = B P for each corresponding operator.
  std::optional<Mat> intertwiner;
  // the invariant separating the inputs, empty when isomorphic
  std::string discriminant;
};

// Decision by invariants: (d, rho, rho_star) for bipartite pairs,
// (d, tr A, tr A*) for almost bipartite pairs; an exactly verified
// intertwiner when they agree.
IsoDecision pair_isomorphism(const Mat& a, const Mat& a_star, const Mat& b,
                             const Mat& b_star);

// Decision by (d, zeta, zeta_star, zeta_eps) for bipartite triples and
// (d, tr A, tr A*, tr A^eps) for almost bipartite triples.
IsoDecision triple_isomorphism(const Mat& a, const Mat& a_star,
                               const Mat& a_eps, const Mat& b,
                               const Mat& b_star, const Mat& b_eps);

} // namespace acsa
