// pathalg.hpp -- elements of the path algebra KQ: finite K-linear
// combinations of paths with the concatenation product.
#ifndef QUIVERHOM_PATHALG_HPP
#define QUIVERHOM_PATHALG_HPP

#include <map>
#include <optional>
#include <string>

#include "field.hpp"
#include "matrix.hpp"
#include "quiver.hpp"

namespace quiverhom {

// A finite formal K-linear combination of paths of one quiver. Zero
// coefficients are never stored; support iteration follows the canonical
// path order (length, then arrow ids).
class AlgebraElement {
 public:
  AlgebraElement(Quiver q, Field f) : quiver_(std::move(q)), field_(f) {}
  static AlgebraElement zero(Quiver q, Field f) { return AlgebraElement(std::move(q), f); }
  static AlgebraElement path_term(Quiver q, Field f, const Path& p, const Scalar& coeff);
  static AlgebraElement path_term(Quiver q, Field f, const Path& p);
  // The stationary basis path e_v.
  static AlgebraElement stationary(Quiver q, Field f, Vertex v);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::map<Path, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Path& p) const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement scalar_mul(const Scalar& c) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Path& p) const;  // right multiplication

  // x e_v: the part of x supported on paths with target v.
  AlgebraElement act_idempotent(Vertex v) const;

  // Largest path length in the support; nullopt for the zero element.
  std::optional<std::size_t> max_path_length() const;
  // Membership in KQ_{<=n}.
  bool in_length_filtration(std::size_t n) const;

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  std::string str() const;  // e.g. "e0 + 3/2*a1.a0"

 private:
  void add_term(const Path& p, const Scalar& c);
  void check_compatible(const AlgebraElement& o) const;

  Quiver quiver_;
  Field field_;
  std::map<Path, Scalar> terms_;
};

// Canonical representative of x modulo the span of the left multiples
// { p * ideal_gen : p a path, length(p * ideal_gen) <= max_len }. Left
// multiplication prepends, so membership in the ideal's path basis is the
// suffix condition; reduction deletes every support path carrying the
// generator as a suffix. Requires x in KQ_{<=max_len}.
AlgebraElement coset_reduce(const AlgebraElement& x, const Path& ideal_gen,
                            std::size_t max_len);

}  // namespace quiverhom

#endif
