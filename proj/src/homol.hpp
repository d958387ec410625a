// homol.hpp -- projective presentations, Ext^1 dimensions, the Euler-form
// cross-check and the two projectivity tests.
#ifndef QUIVERHOM_HOMOL_HPP
#define QUIVERHOM_HOMOL_HPP

#include <cstdint>
#include <map>
#include <string>

#include "rep.hpp"

namespace quiverhom {

// A length-one projective presentation 0 -> P1 -> P0 -> M -> 0. The
// connecting morphism is stored as a validated RepMorphism; construction
// rank-verifies surjectivity of P0 -> M and exactness at P0.
struct Presentation {
  Representation target;
  Representation p0;
  Representation p1;
  RepMorphism connecting;  // P1 -> P0

  // Multiplicities used by standard_resolution (informational): copies of
  // P_v in P0 per vertex, copies of P_{t(a)} in P1 per arrow id.
  std::map<Vertex, std::size_t> p0_mult;
  std::map<std::string, std::size_t> p1_mult;
};

// Verifies per vertex: rank(pi_v) = dim M_v, pi of f = 0, f injective and
// rank(f_v) = dim P0_v - dim M_v. Throws DomainError when violated.
void validate_presentation(const Presentation& pres,
                           const std::map<Vertex, Matrix>& pi_components);

// The canonical presentation P0 = (+)_v P_v^{dim X_v},
// P1 = (+)_a P_{t(a)}^{dim X_{s(a)}} with the standard connecting map.
// Requires the active part's closure to be finite and acyclic.
Presentation standard_resolution(const Representation& x);

// dim Ext^1(x, y), computed as the cokernel dimension of
// Hom(P0, y) -> Hom(P1, y) for the given presentation of x.
std::size_t ext1_from_presentation(const Presentation& pres, const Representation& y);

std::size_t ext1_dim(const Representation& x, const Representation& y);

// Sum over the vertices of a finite acyclic quiver of ext1(x, P_v) -- the
// Ext of x against the algebra decomposed as (+)_v e_v KQ.
std::size_t ext1_against_algebra(const Representation& x);

// <d, e> = sum_v d_v e_v - sum_a d_{s(a)} e_{t(a)} over a finite quiver.
std::int64_t euler_form(const std::map<Vertex, std::int64_t>& d,
                        const std::map<Vertex, std::int64_t>& e, const Quiver& q);

// Projective cover dimension count: true iff for every vertex w of the
// support closure, dim X_w = sum_v top_v * #paths(v -> w).
bool is_projective_structural(const Representation& x);

struct Cor13Verdict {
  bool ext_vanishes;
  bool structural;
  bool agree() const { return ext_vanishes == structural; }
};

// Runs both projectivity routes on one representation.
Cor13Verdict check_cor_1_3(const Representation& x);

// Finite shadow of the forced-coset contradiction on a truncated
// descending chain: the witness identities and the emptiness of the
// intersection of the cosets (sum_{i<=n} a_i...a_0) + KP(a_{n+1}...a_0)
// with KQ_{<=N}, for all n <= N.
struct Prop16Report {
  std::size_t big_n = 0;
  AlgebraElement representative;   // sum_{i=0}^{N} a_i...a_0
  Path ideal_generator;            // a_{N+1}...a_0
  bool phi_identities_ok = false;
  std::size_t phi_identities_checked = 0;
  bool intersection_empty = false;
  // The first coset index whose slice is empty, or the pair of cosets
  // forcing conflicting coefficients.
  std::string emptiness_reason;
};

// `trunc` must be the closure-style truncation of the descending chain
// (vertices 0..T with the unique arrows a_i : i+1 -> i), T >= N+2, and
// max_len >= N+2.
Prop16Report prop16_forced_coset(std::size_t big_n, const Quiver& trunc,
                                 std::size_t max_len, const Field& f);

}  // namespace quiverhom

#endif
