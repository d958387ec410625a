// rep.hpp -- K-linear representations of quivers: morphisms, direct sums,
// the module<->representation translations, restriction and zero-padding
// extension, indecomposable projectives, tops.
#ifndef QUIVERHOM_REP_HPP
#define QUIVERHOM_REP_HPP

#include <map>
#include <vector>

#include "matrix.hpp"
#include "pathalg.hpp"
#include "quiver.hpp"

namespace quiverhom {

// A finite dimensional representation: finitely many "active" vertices
// carry positive dimension; every other vertex has the zero space, and
// arrows with an inactive endpoint are the unique zero maps. The matrix of
// arrow a has shape dim(target) x dim(source) and acts on column vectors.
class Representation {
 public:
  Representation(Quiver q, Field f) : quiver_(std::move(q)), field_(f) {}

  static Representation build(Quiver q, Field f, const std::map<Vertex, std::size_t>& dims,
                              const std::map<std::string, Matrix>& arrow_matrices);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }

  std::size_t dim(Vertex v) const;
  // Active vertices only (dim > 0), sorted by vertex id.
  const std::map<Vertex, std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;

  // Zero-filled matrix of the right shape when no matrix is stored.
  Matrix arrow_matrix(const Arrow& a) const;
  const std::map<std::string, Matrix>& stored_matrices() const { return mats_; }

  // Composite of the arrow matrices along p (identity for e_v).
  Matrix path_matrix(const Path& p) const;

  bool operator==(const Representation& o) const;
  bool operator!=(const Representation& o) const { return !(*this == o); }

 private:
  Quiver quiver_;
  Field field_;
  std::map<Vertex, std::size_t> dims_;       // active only
  std::map<std::string, Matrix> mats_;       // by arrow id; absent = zero
  std::map<std::string, Arrow> arrow_info_;  // endpoints of stored arrows
};

// A morphism of representations; the commuting square
// phi_target . X_a = Y_a . phi_source is validated exactly on construction
// for every arrow meeting an active vertex.
class RepMorphism {
 public:
  RepMorphism(Representation source, Representation target,
              const std::map<Vertex, Matrix>& components);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  Matrix component(Vertex v) const;  // zero-shaped when absent

 private:
  Representation source_, target_;
  std::map<Vertex, Matrix> comps_;
};

// The representation of the projective module e_v KQ: basis at w is the
// set of paths v -> w ordered canonically; arrows act by concatenation.
// Requires the closure of {v} to be finite and acyclic.
Representation projective_rep(const Quiver& q, Vertex v, const Field& f);

// Basis paths of projective_rep(q, v) at vertex w, in matrix column order.
std::vector<Path> projective_basis(const Quiver& q, Vertex v, Vertex w);

// An element of the module underlying a representation: one coordinate
// column per active vertex.
using TotalVector = std::map<Vertex, std::vector<Scalar>>;

// The right action of an algebra element on the module underlying x:
// e_w projects onto the w component, an arrow a applies the matrix of a to
// the source component and deposits at the target, extended linearly.
TotalVector g_action(const Representation& x, const TotalVector& elem,
                     const AlgebraElement& r);

// Rebuilds the representation from the module action (dimension by
// dimension, arrow by arrow) and compares with x.
bool fg_roundtrip_check(const Representation& x);

// Restriction of x to a subquiver p (result lives over p).
Representation restrict_rep(const Representation& x, const Quiver& p);

// Zero-padding extension of z (over a closed subquiver of q) to q.
Representation extend_T(const Representation& z, const Quiver& q);

Representation direct_sum(const std::vector<Representation>& xs);

// Dimension of the space of morphisms x -> y: the kernel of the assembled
// commuting-square constraint system.
std::size_t hom_space_dim(const Representation& x, const Representation& y);

// A basis of Hom(x, y) as per-vertex matrix families.
std::vector<std::map<Vertex, Matrix>> hom_basis(const Representation& x,
                                                const Representation& y);

// Dimensions of the radical quotient: top_v = dim X_v minus the rank of
// the stacked incoming-arrow images at v. The subquiver induced on the
// active vertices must be acyclic.
std::map<Vertex, std::size_t> top_dims(const Representation& x);

struct X0Result {
  Representation rep;
  // m(v): least spine index with a path from spine[m] to v.
  std::map<Vertex, std::size_t> spine_index;
};

// The representation with basis at v the paths from spine[m(v)] to v;
// spine arrows act by shifting stationary paths, off-spine arrows by
// concatenation. `p` must contain the spine chain spine[0] <- spine[1]
// <- ... and be finite acyclic.
X0Result build_X0(const Quiver& p, const std::vector<Vertex>& spine, const Field& f);

}  // namespace quiverhom

#endif
