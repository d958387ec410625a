// quiver.hpp -- quivers (finite and generated families), paths, composition,
// closures, acyclicity and bounded path enumeration.
#ifndef QUIVERHOM_QUIVER_HPP
#define QUIVERHOM_QUIVER_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace quiverhom {

using Vertex = std::int64_t;

struct Arrow {
  std::string id;
  Vertex source = 0;
  Vertex target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// A composable arrow sequence, written left to right: the target of each
// arrow is the source of the next. The empty sequence is the stationary
// path e_v and needs an anchor vertex.
class Path {
 public:
  explicit Path(Vertex stationary_at) : source_(stationary_at), target_(stationary_at) {}
  explicit Path(std::vector<Arrow> arrows);

  Vertex source() const { return source_; }
  Vertex target() const { return target_; }
  std::size_t length() const { return arrows_.size(); }
  bool is_stationary() const { return arrows_.empty(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // True iff `suffix`'s arrow sequence is a suffix of this path's.
  bool has_suffix(const Path& suffix) const;

  // Total order: length, then arrow ids lexicographically, then source
  // vertex (which only matters for stationary paths).
  std::strong_ordering operator<=>(const Path& o) const;
  bool operator==(const Path& o) const { return (*this <=> o) == 0; }

  std::string str() const;  // "e<v>" or dot-joined arrow ids

 private:
  Vertex source_, target_;
  std::vector<Arrow> arrows_;
};

// Concatenation pq when target(p) = source(q); nullopt (algebra product 0)
// otherwise. Stationary paths are units at their vertex.
std::optional<Path> compose(const Path& p, const Path& q);

// Specification of a generated (possibly infinite) quiver: a vertex
// membership test plus local arrow neighbourhoods. `closure_certified`
// asserts that every finite vertex set has a finite acyclic closure; it is
// trusted, since the property is undecidable in general.
struct GeneratedSpec {
  std::string name;
  std::function<bool(Vertex)> has_vertex;
  std::function<std::vector<Arrow>(Vertex)> arrows_from;
  std::function<std::vector<Arrow>(Vertex)> arrows_into;
  std::function<std::string(Vertex)> vertex_name;
  std::function<std::optional<Vertex>(const std::string&)> vertex_by_name;
  std::function<std::optional<Arrow>(const std::string&)> arrow_by_id;
  bool closure_certified = false;
};

// Immutable quiver handle. Built-in families:
//   a_infinity:    vertices 0,1,2,...  arrows a_n : n+1 -> n
//   circular(s):   vertices 0..s-1     arrows a_i : i -> (i+1) mod s
//   a_infinity_branch: a_infinity plus a two-vertex branch b1 -> b0 -> 0
class Quiver {
 public:
  enum class Kind { Finite, AInfinity, Circular, Generated };

  static Quiver finite(const std::vector<std::string>& vertex_names,
                       const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);
  // Finite quiver with caller-chosen vertex ids (used by closure so that
  // sub- and ambient quiver share vertex identities).
  static Quiver finite_ids(const std::vector<std::pair<Vertex, std::string>>& vertices,
                           const std::vector<Arrow>& arrows);
  static Quiver a_infinity();
  static Quiver circular(std::int64_t size);
  static Quiver a_infinity_branch();
  static Quiver generated(GeneratedSpec spec);

  Kind kind() const;
  bool is_finite() const { return kind() == Kind::Finite; }
  bool closure_certified() const;
  // Structural identity key; quivers compare equal iff keys match.
  const std::string& key() const;

  bool has_vertex(Vertex v) const;
  bool has_arrow(const Arrow& a) const;
  std::vector<Arrow> arrows_from(Vertex v) const;  // sorted by id
  std::vector<Arrow> arrows_into(Vertex v) const;  // sorted by id
  std::string vertex_name(Vertex v) const;
  std::optional<Vertex> vertex_by_name(const std::string& name) const;
  std::optional<Arrow> arrow_by_id(const std::string& id) const;

  // Finite quivers only.
  const std::vector<Vertex>& vertices() const;
  const std::vector<Arrow>& arrows() const;

  // Circular quivers only: the number of vertices (cycle length).
  std::int64_t circular_size() const;

  friend bool operator==(const Quiver& a, const Quiver& b) { return a.key() == b.key(); }

 private:
  struct Impl;
  explicit Quiver(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// True iff the path's arrows (or anchor vertex) all belong to q.
bool path_in_quiver(const Quiver& q, const Path& p);

// The closed subquiver generated by `seed`: all vertices reachable by a
// path from the seed, with every arrow whose source lies in that set.
// Result shares vertex ids and arrow ids with q.
Quiver closure(const Quiver& q, const std::vector<Vertex>& seed);

bool is_subquiver(const Quiver& p, const Quiver& q);
bool is_closed_subquiver(const Quiver& p, const Quiver& q);

// Finite quivers only; topological-sort check.
bool is_acyclic(const Quiver& q);

// All paths with target v, sorted by (length, arrow ids), including e_v.
// Without max_len the co-reachable part of q must be finite and acyclic.
std::vector<Path> paths_into(const Quiver& q, Vertex v,
                             std::optional<std::size_t> max_len = std::nullopt);

// All paths with source v, same ordering; a bound is always required.
std::vector<Path> paths_from(const Quiver& q, Vertex v, std::size_t max_len);

// All paths from u to w in a finite acyclic quiver, sorted.
std::vector<Path> paths_between(const Quiver& q, Vertex u, Vertex w);

// Number of paths u -> w in a finite acyclic quiver.
std::size_t path_count(const Quiver& q, Vertex u, Vertex w);

// The n-th power of the full cycle of a circular quiver: the length
// n * size path from vertex 0 to itself; n = 0 gives e_0.
Path power_cycle(const Quiver& q, std::size_t n);

}  // namespace quiverhom

#endif
