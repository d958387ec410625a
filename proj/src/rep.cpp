#include "rep.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace quiverhom {

namespace {

// Arrows that can contribute nonzero data for the given active sets:
// everything incident to an active vertex, deduplicated by id.
std::map<std::string, Arrow> incident_arrows(const Quiver& q,
                                             const std::set<Vertex>& active) {
  std::map<std::string, Arrow> out;
  for (Vertex v : active) {
    for (const Arrow& a : q.arrows_from(v)) out.emplace(a.id, a);
    for (const Arrow& a : q.arrows_into(v)) out.emplace(a.id, a);
  }
  return out;
}

std::set<Vertex> active_set(const Representation& x) {
  std::set<Vertex> s;
  for (const auto& [v, d] : x.dims()) s.insert(v);
  return s;
}

}  // namespace

Representation Representation::build(Quiver q, Field f,
                                     const std::map<Vertex, std::size_t>& dims,
                                     const std::map<std::string, Matrix>& arrow_matrices) {
  Representation x(q, f);
  for (const auto& [v, d] : dims) {
    if (!q.has_vertex(v)) throw DomainError("dimension given for unknown vertex " + std::to_string(v));
    if (d > 0) x.dims_[v] = d;
  }
  std::set<Vertex> active;
  for (const auto& [v, d] : x.dims_) active.insert(v);
  auto known = incident_arrows(q, active);
  for (const auto& [id, m] : arrow_matrices) {
    auto it = known.find(id);
    if (it == known.end()) {
      // Permit zero data on arrows far from the support; anything else is
      // unplaceable.
      if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
      throw DomainError("matrix for arrow '" + id + "' not incident to the support");
    }
    const Arrow& a = it->second;
    if (m.field() != f) throw FieldMismatchError("matrix for arrow '" + id + "' in wrong field");
    if (m.rows() != x.dim(a.target) || m.cols() != x.dim(a.source))
      throw ShapeError("matrix for arrow '" + id + "' has shape " + std::to_string(m.rows()) +
                       "x" + std::to_string(m.cols()) + ", expected " +
                       std::to_string(x.dim(a.target)) + "x" + std::to_string(x.dim(a.source)));
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;  // normalized away
    x.mats_.emplace(id, m);
    x.arrow_info_.emplace(id, a);
  }
  return x;
}

std::size_t Representation::dim(Vertex v) const {
  auto it = dims_.find(v);
  return it == dims_.end() ? 0 : it->second;
}

std::size_t Representation::total_dim() const {
  std::size_t t = 0;
  for (const auto& [v, d] : dims_) t += d;
  return t;
}

Matrix Representation::arrow_matrix(const Arrow& a) const {
  auto it = mats_.find(a.id);
  if (it != mats_.end()) return it->second;
  return Matrix(field_, dim(a.target), dim(a.source));
}

Matrix Representation::path_matrix(const Path& p) const {
  Matrix m = Matrix::identity(field_, dim(p.source()));
  for (const Arrow& a : p.arrows()) m = arrow_matrix(a) * m;
  return m;
}

bool Representation::operator==(const Representation& o) const {
  return quiver_ == o.quiver_ && field_ == o.field_ && dims_ == o.dims_ && mats_ == o.mats_;
}

RepMorphism::RepMorphism(Representation source, Representation target,
                         const std::map<Vertex, Matrix>& components)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_.quiver() == target_.quiver()))
    throw DomainError("morphism between representations of different quivers");
  if (source_.field() != target_.field())
    throw FieldMismatchError("morphism between different field contexts");
  for (const auto& [v, m] : components) {
    if (m.rows() != target_.dim(v) || m.cols() != source_.dim(v))
      throw ShapeError("morphism component at vertex " + std::to_string(v) + " has wrong shape");
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
    comps_.emplace(v, m);
  }
  std::set<Vertex> active = active_set(source_);
  for (Vertex v : active_set(target_)) active.insert(v);
  for (const auto& [id, a] : incident_arrows(source_.quiver(), active)) {
    Matrix lhs = component(a.target) * source_.arrow_matrix(a);
    Matrix rhs = target_.arrow_matrix(a) * component(a.source);
    if (!(lhs == rhs))
      throw DomainError("commuting square fails at arrow '" + id + "'");
  }
}

Matrix RepMorphism::component(Vertex v) const {
  auto it = comps_.find(v);
  if (it != comps_.end()) return it->second;
  return Matrix(source_.field(), target_.dim(v), source_.dim(v));
}

namespace {

struct ProjData {
  std::map<Vertex, std::vector<Path>> basis;  // target vertex -> sorted paths
  Quiver closure_quiver;
};

// Basis paths of e_v KQ grouped by target; memoized because resolutions
// ask for the same projectives over and over.
const ProjData& projective_data(const Quiver& q, Vertex v) {
  static std::mutex mu;
  static std::map<std::string, ProjData> cache;
  std::scoped_lock lock(mu);
  std::string key = q.key() + "|pv:" + std::to_string(v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Quiver cl = closure(q, {v});
  if (!is_acyclic(cl))
    throw DomainError("closure of vertex " + std::to_string(v) + " is not acyclic");
  ProjData data{{}, cl};
  for (const Path& p : paths_from(cl, v, cl.vertices().size()))
    data.basis[p.target()].push_back(p);
  return cache.emplace(key, std::move(data)).first->second;
}

}  // namespace

std::vector<Path> projective_basis(const Quiver& q, Vertex v, Vertex w) {
  const ProjData& data = projective_data(q, v);
  auto it = data.basis.find(w);
  return it == data.basis.end() ? std::vector<Path>{} : it->second;
}

Representation projective_rep(const Quiver& q, Vertex v, const Field& f) {
  const ProjData& data = projective_data(q, v);
  std::map<Vertex, std::size_t> dims;
  for (const auto& [w, paths] : data.basis) dims[w] = paths.size();
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : data.closure_quiver.arrows()) {
    auto src = data.basis.find(a.source);
    auto dst = data.basis.find(a.target);
    if (src == data.basis.end() || dst == data.basis.end()) continue;
    Matrix m(f, dst->second.size(), src->second.size());
    for (std::size_t j = 0; j < src->second.size(); ++j) {
      auto extended = compose(src->second[j], Path({a}));
      auto pos = std::lower_bound(dst->second.begin(), dst->second.end(), *extended);
      m.set(static_cast<std::size_t>(pos - dst->second.begin()), j, Scalar::one(f));
    }
    mats.emplace(a.id, m);
  }
  return Representation::build(q, f, dims, mats);
}

TotalVector g_action(const Representation& x, const TotalVector& elem,
                     const AlgebraElement& r) {
  if (!(r.quiver() == x.quiver())) throw DomainError("algebra element over a different quiver");
  if (r.field() != x.field()) throw FieldMismatchError("algebra element in a different field");
  for (const auto& [v, col] : elem)
    if (col.size() != x.dim(v))
      throw ShapeError("component height mismatch at vertex " + std::to_string(v));
  TotalVector out;
  for (const auto& [p, c] : r.terms()) {
    auto it = elem.find(p.source());
    if (it == elem.end()) continue;
    std::vector<Scalar> moved = x.path_matrix(p) * it->second;
    auto& slot = out.try_emplace(p.target(), std::vector<Scalar>(x.dim(p.target()),
                                                                 Scalar::zero(x.field())))
                     .first->second;
    for (std::size_t i = 0; i < moved.size(); ++i) slot[i] += moved[i] * c;
  }
  // Normalize: no zero components stored.
  for (auto it = out.begin(); it != out.end();) {
    bool zero = true;
    for (const Scalar& s : it->second)
      if (!s.is_zero()) zero = false;
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

bool fg_roundtrip_check(const Representation& x) {
  const Field& f = x.field();
  std::set<Vertex> active = active_set(x);
  for (Vertex v : active) {
    for (std::size_t i = 0; i < x.dim(v); ++i) {
      TotalVector unit;
      unit[v] = std::vector<Scalar>(x.dim(v), Scalar::zero(f));
      unit[v][i] = Scalar::one(f);
      // e_v must fix the element, e_w (w != v) must kill it.
      AlgebraElement ev = AlgebraElement::stationary(x.quiver(), f, v);
      if (g_action(x, unit, ev) != unit) return false;
      for (Vertex w : active) {
        if (w == v) continue;
        AlgebraElement ew = AlgebraElement::stationary(x.quiver(), f, w);
        if (!g_action(x, unit, ew).empty()) return false;
      }
    }
  }
  // Arrow actions reconstruct the arrow matrices.
  for (const auto& [id, a] : incident_arrows(x.quiver(), active)) {
    if (x.dim(a.source) == 0) continue;
    AlgebraElement arrow_elem =
        AlgebraElement::path_term(x.quiver(), f, Path({a}));
    Matrix reconstructed(f, x.dim(a.target), x.dim(a.source));
    for (std::size_t j = 0; j < x.dim(a.source); ++j) {
      TotalVector unit;
      unit[a.source] = std::vector<Scalar>(x.dim(a.source), Scalar::zero(f));
      unit[a.source][j] = Scalar::one(f);
      TotalVector moved = g_action(x, unit, arrow_elem);
      for (const auto& [w, col] : moved) {
        if (w != a.target) return false;
        for (std::size_t i = 0; i < col.size(); ++i) reconstructed.set(i, j, col[i]);
      }
    }
    if (!(reconstructed == x.arrow_matrix(a))) return false;
  }
  return true;
}

Representation restrict_rep(const Representation& x, const Quiver& p) {
  if (!is_subquiver(p, x.quiver()))
    throw DomainError("restriction target is not a subquiver");
  std::map<Vertex, std::size_t> dims;
  for (const auto& [v, d] : x.dims())
    if (p.has_vertex(v)) dims[v] = d;
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : p.arrows()) {
    Matrix m = x.arrow_matrix(a);
    if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) mats.emplace(a.id, m);
  }
  return Representation::build(p, x.field(), dims, mats);
}

Representation extend_T(const Representation& z, const Quiver& q) {
  if (!is_closed_subquiver(z.quiver(), q))
    throw DomainError("extension base is not a closed subquiver");
  std::map<std::string, Matrix> mats;
  for (const auto& [id, m] : z.stored_matrices()) mats.emplace(id, m);
  return Representation::build(q, z.field(), z.dims(), mats);
}

Representation direct_sum(const std::vector<Representation>& xs) {
  if (xs.empty()) throw DomainError("direct sum of an empty family");
  const Quiver& q = xs[0].quiver();
  const Field& f = xs[0].field();
  for (const Representation& x : xs) {
    if (!(x.quiver() == q)) throw DomainError("direct sum over different quivers");
    if (x.field() != f) throw FieldMismatchError("direct sum over different fields");
  }
  std::map<Vertex, std::size_t> dims;
  std::set<Vertex> active;
  for (const Representation& x : xs)
    for (const auto& [v, d] : x.dims()) {
      dims[v] += d;
      active.insert(v);
    }
  std::map<std::string, Matrix> mats;
  for (const auto& [id, a] : incident_arrows(q, active)) {
    if (dims.count(a.source) == 0 || dims.count(a.target) == 0) continue;
    Matrix block(f, dims[a.target], dims[a.source]);
    std::size_t roff = 0, coff = 0;
    for (const Representation& x : xs) {
      block.place(roff, coff, x.arrow_matrix(a));
      roff += x.dim(a.target);
      coff += x.dim(a.source);
    }
    if (!block.is_zero()) mats.emplace(id, block);
  }
  return Representation::build(q, f, dims, mats);
}

namespace {

// Layout of the unknowns phi_v (one block per vertex active in both
// representations) inside the flattened constraint system.
struct HomLayout {
  std::vector<Vertex> verts;
  std::map<Vertex, std::size_t> offset;  // first column of the block
  std::size_t total = 0;

  HomLayout(const Representation& x, const Representation& y) {
    for (const auto& [v, dx] : x.dims()) {
      std::size_t dy = y.dim(v);
      if (dy == 0) continue;
      verts.push_back(v);
      offset[v] = total;
      total += dx * dy;
    }
  }

  // Column of the unknown phi_v[i][j] (i < dim y_v, j < dim x_v).
  std::size_t col(const Representation& x, Vertex v, std::size_t i, std::size_t j) const {
    return offset.at(v) + i * x.dim(v) + j;
  }
};

Matrix hom_constraints(const Representation& x, const Representation& y,
                       const HomLayout& layout) {
  const Field& f = x.field();
  std::set<Vertex> active = active_set(x);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& [id, a] : incident_arrows(x.quiver(), active)) {
    std::size_t dxs = x.dim(a.source), dyt = y.dim(a.target);
    if (dxs == 0 || dyt == 0) continue;
    Matrix xa = x.arrow_matrix(a);
    Matrix ya = y.arrow_matrix(a);
    bool t_active = layout.offset.count(a.target) > 0;
    bool s_active = layout.offset.count(a.source) > 0;
    if (!t_active && !s_active) continue;
    for (std::size_t i = 0; i < dyt; ++i) {
      for (std::size_t j = 0; j < dxs; ++j) {
        std::vector<Scalar> row(layout.total, Scalar::zero(f));
        if (t_active)
          for (std::size_t k = 0; k < x.dim(a.target); ++k)
            if (!xa.at(k, j).is_zero())
              row[layout.col(x, a.target, i, k)] += xa.at(k, j);
        if (s_active)
          for (std::size_t l = 0; l < y.dim(a.source); ++l)
            if (!ya.at(i, l).is_zero())
              row[layout.col(x, a.source, l, j)] -= ya.at(i, l);
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix m(f, rows.size(), layout.total);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < layout.total; ++c) m.set(r, c, rows[r][c]);
  return m;
}

}  // namespace

std::size_t hom_space_dim(const Representation& x, const Representation& y) {
  if (!(x.quiver() == y.quiver())) throw DomainError("hom between different quivers");
  if (x.field() != y.field()) throw FieldMismatchError("hom between different fields");
  HomLayout layout(x, y);
  if (layout.total == 0) return 0;
  return layout.total - rank(hom_constraints(x, y, layout));
}

std::vector<std::map<Vertex, Matrix>> hom_basis(const Representation& x,
                                                const Representation& y) {
  if (!(x.quiver() == y.quiver())) throw DomainError("hom between different quivers");
  if (x.field() != y.field()) throw FieldMismatchError("hom between different fields");
  const Field& f = x.field();
  HomLayout layout(x, y);
  std::vector<std::map<Vertex, Matrix>> out;
  if (layout.total == 0) return out;
  Matrix basis = kernel_basis(hom_constraints(x, y, layout));
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    std::map<Vertex, Matrix> comps;
    for (Vertex v : layout.verts) {
      Matrix m(f, y.dim(v), x.dim(v));
      for (std::size_t i = 0; i < y.dim(v); ++i)
        for (std::size_t j = 0; j < x.dim(v); ++j)
          m.set(i, j, basis.at(layout.col(x, v, i, j), k));
      comps.emplace(v, m);
    }
    out.push_back(std::move(comps));
  }
  return out;
}

std::map<Vertex, std::size_t> top_dims(const Representation& x) {
  std::set<Vertex> active = active_set(x);
  // The induced active subquiver must be acyclic for the radical to make
  // sense here.
  std::vector<std::pair<Vertex, std::string>> vs;
  std::vector<Arrow> as;
  for (Vertex v : active) vs.emplace_back(v, x.quiver().vertex_name(v));
  for (const auto& [id, a] : incident_arrows(x.quiver(), active))
    if (active.count(a.source) && active.count(a.target)) as.push_back(a);
  if (!vs.empty()) {
    Quiver induced = Quiver::finite_ids(vs, as);
    if (!is_acyclic(induced)) throw DomainError("top of a representation with cyclic support");
  }
  std::map<Vertex, std::size_t> tops;
  for (const auto& [v, d] : x.dims()) {
    Matrix stacked(x.field(), d, 0);
    for (const auto& [id, a] : incident_arrows(x.quiver(), active))
      if (a.target == v && x.dim(a.source) > 0) stacked = stacked.hstack(x.arrow_matrix(a));
    tops[v] = d - rank(stacked);
  }
  return tops;
}

X0Result build_X0(const Quiver& p, const std::vector<Vertex>& spine, const Field& f) {
  if (!p.is_finite() || !is_acyclic(p)) throw DomainError("X0 needs a finite acyclic quiver");
  if (spine.empty()) throw DomainError("empty spine");
  // The spine chain spine[n+1] -> spine[n] must be present with a unique
  // connecting arrow at each step.
  std::vector<Arrow> spine_arrows;  // spine_arrows[n] : spine[n+1] -> spine[n]
  for (std::size_t n = 0; n + 1 < spine.size(); ++n) {
    std::vector<Arrow> found;
    for (const Arrow& a : p.arrows_from(spine[n + 1]))
      if (a.target == spine[n]) found.push_back(a);
    if (found.size() != 1)
      throw DomainError("spine step " + std::to_string(n) + " lacks a unique arrow");
    spine_arrows.push_back(found[0]);
  }

  // m(v): least spine index reaching v.
  std::map<Vertex, std::size_t> mval;
  for (std::size_t m = 0; m < spine.size(); ++m) {
    Quiver cl = closure(p, {spine[m]});
    for (Vertex v : cl.vertices())
      if (!mval.count(v)) mval[v] = m;
  }
  for (Vertex v : p.vertices())
    if (!mval.count(v)) throw DomainError("vertex " + std::to_string(v) + " not reachable from the spine");
  for (std::size_t n = 0; n < spine.size(); ++n)
    if (mval.at(spine[n]) != n)
      throw DomainError("spine vertex " + std::to_string(n) + " reachable from an earlier index");

  std::map<Vertex, std::vector<Path>> basis;
  for (Vertex v : p.vertices()) basis[v] = paths_between(p, spine[mval.at(v)], v);

  std::map<Vertex, std::size_t> dims;
  for (const auto& [v, b] : basis)
    if (!b.empty()) dims[v] = b.size();

  std::set<std::string> spine_ids;
  for (const Arrow& a : spine_arrows) spine_ids.insert(a.id);

  std::map<std::string, Matrix> mats;
  for (std::size_t n = 0; n + 1 < spine.size(); ++n) {
    // Stationary basis shift e_{spine[n+1]} -> e_{spine[n]}.
    if (basis[spine[n + 1]].size() != 1 || basis[spine[n]].size() != 1)
      throw DomainError("spine vertex with a non-singleton basis");
    mats.emplace(spine_arrows[n].id, Matrix::identity(f, 1));
  }
  for (const Arrow& a : p.arrows()) {
    if (spine_ids.count(a.id)) continue;
    const auto& src = basis[a.source];
    const auto& dst = basis[a.target];
    if (src.empty() || dst.empty()) continue;
    Matrix m(f, dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      auto extended = compose(src[j], Path({a}));
      auto pos = std::find(dst.begin(), dst.end(), *extended);
      if (pos == dst.end())
        throw DomainError("concatenation leaves the basis at arrow '" + a.id + "'");
      m.set(static_cast<std::size_t>(pos - dst.begin()), j, Scalar::one(f));
    }
    mats.emplace(a.id, m);
  }
  return X0Result{Representation::build(p, f, dims, mats), std::move(mval)};
}

}  // namespace quiverhom
