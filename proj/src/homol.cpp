#include "homol.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quiverhom {

namespace {

// Block bookkeeping for a direct sum of projectives: for each summand
// (anchor vertex or arrow copy) and each vertex w, the first row of the
// summand's block among the basis of the sum at w.
struct SumLayout {
  // key -> (w -> offset); keys are ordered summand identifiers.
  std::vector<std::pair<std::string, std::map<Vertex, std::size_t>>> blocks;
  std::map<Vertex, std::size_t> total;  // dim of the sum at w

  void add_block(const std::string& key, const std::map<Vertex, std::vector<Path>>& basis) {
    std::map<Vertex, std::size_t> offsets;
    for (const auto& [w, paths] : basis) {
      offsets[w] = total[w];
      total[w] += paths.size();
    }
    blocks.emplace_back(key, std::move(offsets));
  }
};

std::size_t index_of(const std::vector<Path>& sorted_paths, const Path& p) {
  auto it = std::lower_bound(sorted_paths.begin(), sorted_paths.end(), p);
  if (it == sorted_paths.end() || !(*it == p))
    throw DomainError("path missing from projective basis: " + p.str());
  return static_cast<std::size_t>(it - sorted_paths.begin());
}

std::map<Vertex, std::vector<Path>> proj_basis_by_vertex(const Quiver& q, Vertex v) {
  std::map<Vertex, std::vector<Path>> out;
  Quiver cl = closure(q, {v});
  for (Vertex w : cl.vertices()) {
    auto b = projective_basis(q, v, w);
    if (!b.empty()) out[w] = std::move(b);
  }
  return out;
}

}  // namespace

void validate_presentation(const Presentation& pres,
                           const std::map<Vertex, Matrix>& pi_components) {
  std::set<Vertex> verts;
  for (const auto& [v, d] : pres.target.dims()) verts.insert(v);
  for (const auto& [v, d] : pres.p0.dims()) verts.insert(v);
  for (const auto& [v, d] : pres.p1.dims()) verts.insert(v);
  for (Vertex w : verts) {
    std::size_t dm = pres.target.dim(w);
    std::size_t d0 = pres.p0.dim(w);
    std::size_t d1 = pres.p1.dim(w);
    Matrix pi = pi_components.count(w) ? pi_components.at(w)
                                       : Matrix(pres.target.field(), dm, d0);
    Matrix fw = pres.connecting.component(w);
    if (rank(pi) != dm)
      throw DomainError("presentation not surjective at vertex " + std::to_string(w));
    if (!(pi * fw).is_zero())
      throw DomainError("presentation composite nonzero at vertex " + std::to_string(w));
    std::size_t rf = rank(fw);
    if (rf != d1)
      throw DomainError("connecting map not injective at vertex " + std::to_string(w));
    if (rf != d0 - dm)
      throw DomainError("presentation not exact at vertex " + std::to_string(w));
  }
}

Presentation standard_resolution(const Representation& x) {
  const Quiver& q = x.quiver();
  const Field& f = x.field();

  // Summands of P0: for each active vertex v (sorted) and copy index
  // i < dim X_v, one copy of P_v.
  SumLayout layout0;
  std::vector<Representation> p0_parts;
  std::vector<std::pair<Vertex, std::size_t>> p0_ids;
  std::map<Vertex, std::size_t> p0_mult;
  std::map<std::pair<Vertex, std::size_t>, std::size_t> p0_block;  // (v,i) -> block idx
  for (const auto& [v, dv] : x.dims()) {
    p0_mult[v] = dv;
    for (std::size_t i = 0; i < dv; ++i) {
      p0_block[{v, i}] = layout0.blocks.size();
      layout0.add_block("v" + std::to_string(v) + "#" + std::to_string(i),
                        proj_basis_by_vertex(q, v));
      p0_parts.push_back(projective_rep(q, v, f));
      p0_ids.emplace_back(v, i);
    }
  }

  // Summands of P1: for each arrow a with dim X_{s(a)} > 0 (sorted by id)
  // and copy index j, one copy of P_{t(a)}.
  std::set<Vertex> active;
  for (const auto& [v, d] : x.dims()) active.insert(v);
  std::map<std::string, Arrow> arrows;
  for (Vertex v : active)
    for (const Arrow& a : q.arrows_from(v)) arrows.emplace(a.id, a);

  SumLayout layout1;
  std::vector<Representation> p1_parts;
  std::vector<std::pair<Arrow, std::size_t>> p1_ids;
  std::map<std::string, std::size_t> p1_mult;
  for (const auto& [id, a] : arrows) {
    std::size_t copies = x.dim(a.source);
    if (copies == 0) continue;
    p1_mult[id] = copies;
    for (std::size_t j = 0; j < copies; ++j) {
      layout1.add_block(id + "#" + std::to_string(j), proj_basis_by_vertex(q, a.target));
      p1_parts.push_back(projective_rep(q, a.target, f));
      p1_ids.emplace_back(a, j);
    }
  }

  Representation p0 = p0_parts.empty() ? Representation(q, f) : direct_sum(p0_parts);
  Representation p1 = p1_parts.empty() ? Representation(q, f) : direct_sum(p1_parts);

  // Connecting morphism f : P1 -> P0. The copy-(a, j) generator e_{t(a)}
  // maps to (the path a inside copy (s(a), j)) minus
  // sum_i X_a[i, j] (e_{t(a)} inside copy (t(a), i)); a general basis
  // element of the copy is that generator times a path r, so the image is
  // the same expression concatenated with r.
  std::map<Vertex, Matrix> f_comps;
  for (const auto& [w, d1w] : p1.dims()) {
    Matrix fw(f, p0.dim(w), d1w);
    for (std::size_t b = 0; b < p1_ids.size(); ++b) {
      const auto& [a, j] = p1_ids[b];
      auto basis_here = projective_basis(q, a.target, w);
      if (basis_here.empty()) continue;
      std::size_t col0 = layout1.blocks[b].second.at(w);
      Matrix xa = x.arrow_matrix(a);
      for (std::size_t c = 0; c < basis_here.size(); ++c) {
        const Path& r = basis_here[c];
        // Positive part: a*r inside copy (s(a), j).
        Path ar = *compose(Path({a}), r);
        std::size_t blk_pos = p0_block.at({a.source, j});
        std::size_t row_pos = layout0.blocks[blk_pos].second.at(w) +
                              index_of(projective_basis(q, a.source, w), ar);
        fw.set(row_pos, col0 + c, fw.at(row_pos, col0 + c) + Scalar::one(f));
        // Negative part: r inside copies (t(a), i) weighted by X_a[i, j].
        for (std::size_t i = 0; i < x.dim(a.target); ++i) {
          if (xa.at(i, j).is_zero()) continue;
          std::size_t blk_neg = p0_block.at({a.target, i});
          std::size_t row_neg = layout0.blocks[blk_neg].second.at(w) +
                                index_of(projective_basis(q, a.target, w), r);
          fw.set(row_neg, col0 + c, fw.at(row_neg, col0 + c) - xa.at(i, j));
        }
      }
    }
    f_comps.emplace(w, fw);
  }

  Presentation pres{x, p0, p1, RepMorphism(p1, p0, f_comps), std::move(p0_mult),
                    std::move(p1_mult)};

  // pi : P0 -> X maps the basis element (v, i, p) to X_p(e_i).
  std::map<Vertex, Matrix> pi_comps;
  for (const auto& [w, d0w] : p0.dims()) {
    Matrix pw(f, x.dim(w), d0w);
    for (std::size_t b = 0; b < p0_ids.size(); ++b) {
      const auto& [v, i] = p0_ids[b];
      auto basis_here = projective_basis(q, v, w);
      if (basis_here.empty()) continue;
      std::size_t col0 = layout0.blocks[b].second.at(w);
      for (std::size_t c = 0; c < basis_here.size(); ++c) {
        std::vector<Scalar> unit(x.dim(v), Scalar::zero(f));
        unit[i] = Scalar::one(f);
        std::vector<Scalar> img = x.path_matrix(basis_here[c]) * unit;
        for (std::size_t rix = 0; rix < img.size(); ++rix) pw.set(rix, col0 + c, img[rix]);
      }
    }
    pi_comps.emplace(w, pw);
  }
  validate_presentation(pres, pi_comps);
  return pres;
}

namespace {

// Flattens the composite h . f over the coordinate space of Hom(P1, y).
std::vector<Scalar> flatten_composite(const std::map<Vertex, Matrix>& h,
                                      const Presentation& pres, const Representation& y) {
  const Field& f = y.field();
  std::vector<Scalar> out;
  for (const auto& [v, d1] : pres.p1.dims()) {
    std::size_t dy = y.dim(v);
    if (dy == 0) continue;
    Matrix hv = h.count(v) ? h.at(v) : Matrix(f, dy, pres.p0.dim(v));
    Matrix comp = hv * pres.connecting.component(v);
    for (std::size_t i = 0; i < comp.rows(); ++i)
      for (std::size_t j = 0; j < comp.cols(); ++j) out.push_back(comp.at(i, j));
  }
  return out;
}

}  // namespace

std::size_t ext1_from_presentation(const Presentation& pres, const Representation& y) {
  std::size_t hom_p1 = hom_space_dim(pres.p1, y);
  if (hom_p1 == 0) return 0;
  auto h0 = hom_basis(pres.p0, y);
  if (h0.empty()) return hom_p1;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& h : h0) rows.push_back(flatten_composite(h, pres, y));
  Matrix m(y.field(), rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  return hom_p1 - rank(m);
}

std::size_t ext1_dim(const Representation& x, const Representation& y) {
  if (!(x.quiver() == y.quiver())) throw DomainError("ext over different quivers");
  if (x.field() != y.field()) throw FieldMismatchError("ext over different fields");
  return ext1_from_presentation(standard_resolution(x), y);
}

std::size_t ext1_against_algebra(const Representation& x) {
  const Quiver& q = x.quiver();
  if (!q.is_finite() || !is_acyclic(q))
    throw DomainError("ext against the algebra needs a finite acyclic quiver");
  Presentation pres = standard_resolution(x);
  std::size_t total = 0;
  for (Vertex v : q.vertices())
    total += ext1_from_presentation(pres, projective_rep(q, v, x.field()));
  return total;
}

std::int64_t euler_form(const std::map<Vertex, std::int64_t>& d,
                        const std::map<Vertex, std::int64_t>& e, const Quiver& q) {
  if (!q.is_finite()) throw DomainError("Euler form needs a finite quiver");
  auto get = [](const std::map<Vertex, std::int64_t>& m, Vertex v) {
    auto it = m.find(v);
    return it == m.end() ? std::int64_t{0} : it->second;
  };
  std::int64_t total = 0;
  for (Vertex v : q.vertices()) total += get(d, v) * get(e, v);
  for (const Arrow& a : q.arrows()) total -= get(d, a.source) * get(e, a.target);
  return total;
}

bool is_projective_structural(const Representation& x) {
  if (x.total_dim() == 0) return true;
  std::map<Vertex, std::size_t> tops = top_dims(x);
  std::vector<Vertex> active;
  for (const auto& [v, d] : x.dims()) active.push_back(v);
  Quiver cl = closure(x.quiver(), active);
  if (!is_acyclic(cl)) throw DomainError("support closure is not acyclic");
  for (Vertex w : cl.vertices()) {
    std::size_t predicted = 0;
    for (const auto& [v, t] : tops) predicted += t * path_count(cl, v, w);
    if (predicted != x.dim(w)) return false;
  }
  return true;
}

Cor13Verdict check_cor_1_3(const Representation& x) {
  return Cor13Verdict{ext1_against_algebra(x) == 0, is_projective_structural(x)};
}

namespace {

// The descending chain a_{m-1} ... a_l from vertex m to vertex l inside
// the truncation; m = l gives the stationary path.
Path chain_path(const Quiver& trunc, Vertex m, Vertex l) {
  if (m == l) return Path(l);
  std::vector<Arrow> arrows;
  for (Vertex v = m; v > l; --v) {
    std::vector<Arrow> step;
    for (const Arrow& a : trunc.arrows_from(v))
      if (a.target == v - 1) step.push_back(a);
    if (step.size() != 1) throw DomainError("truncation is not a simple descending chain");
    arrows.push_back(step[0]);
  }
  return Path(std::move(arrows));
}

}  // namespace

Prop16Report prop16_forced_coset(std::size_t big_n, const Quiver& trunc,
                                 std::size_t max_len, const Field& f) {
  if (!trunc.is_finite()) throw DomainError("truncation must be finite");
  const auto& verts = trunc.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] != static_cast<Vertex>(i))
      throw DomainError("truncation vertices must be 0..T");
  std::size_t top = verts.size() - 1;
  if (top < big_n + 2) throw BoundsError("truncation too short for N");
  if (max_len < big_n + 2) throw BoundsError("max_len must be at least N+2");
  if (max_len > top) max_len = top;  // no longer paths exist anyway

  Prop16Report report{big_n,
                      AlgebraElement(trunc, f),
                      chain_path(trunc, static_cast<Vertex>(big_n + 2), 0),
                      true,
                      0,
                      false,
                      ""};
  for (std::size_t i = 0; i <= big_n; ++i)
    report.representative =
        report.representative +
        AlgebraElement::path_term(trunc, f, chain_path(trunc, static_cast<Vertex>(i + 1), 0));

  // phi on the kernel generators: phi(e_{v_m} - a_n...a_m) =
  // sum_{i=0}^{n-m} a_{m+i}...a_m. The displayed compatibility identity
  // must hold for all l < m <= n within bounds.
  auto phi = [&](std::size_t m, std::size_t n) {
    AlgebraElement val(trunc, f);
    for (std::size_t i = 0; i + m <= n; ++i)
      val = val + AlgebraElement::path_term(
                      trunc, f, chain_path(trunc, static_cast<Vertex>(m + i + 1),
                                           static_cast<Vertex>(m)));
    return val;
  };
  for (std::size_t n = 0; n <= big_n; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      for (std::size_t l = 0; l < m; ++l) {
        AlgebraElement lhs =
            phi(m, n) * chain_path(trunc, static_cast<Vertex>(m), static_cast<Vertex>(l));
        AlgebraElement rhs = phi(l, n) - phi(l, m - 1);
        ++report.phi_identities_checked;
        if (!(lhs == rhs)) report.phi_identities_ok = false;
      }
    }
  }

  // Intersection of the cosets with KQ_{<=N}: each coset forces the
  // coefficient of every non-multiple basis path; multiples of the ideal
  // generator longer than N must cancel exactly, which is a small exact
  // solve per coset. A conflict or an unsolvable coset empties the
  // intersection.
  std::map<Path, std::pair<Scalar, std::size_t>> forced;  // value, forcing coset
  bool empty = false;
  for (std::size_t n = 0; n <= big_n && !empty; ++n) {
    Path gen = chain_path(trunc, static_cast<Vertex>(n + 2), 0);
    AlgebraElement rep_n(trunc, f);
    for (std::size_t i = 0; i <= n; ++i)
      rep_n = rep_n + AlgebraElement::path_term(trunc, f,
                                                chain_path(trunc, static_cast<Vertex>(i + 1), 0));
    std::set<Path> multiples;
    for (const Path& p : paths_into(trunc, static_cast<Vertex>(n + 2), max_len - gen.length()))
      multiples.insert(*compose(p, gen));

    // Coordinates of length > N: rep_n plus a combination of long
    // multiples must vanish there.
    std::vector<Path> long_coords;
    std::vector<Path> long_multiples;
    for (const Path& mpath : multiples)
      if (mpath.length() > big_n) long_multiples.push_back(mpath);
    std::set<Path> coord_set(long_multiples.begin(), long_multiples.end());
    for (const auto& [p, c] : rep_n.terms())
      if (p.length() > big_n) coord_set.insert(p);
    long_coords.assign(coord_set.begin(), coord_set.end());

    Matrix sys(f, long_coords.size(), long_multiples.size());
    std::vector<Scalar> rhs;
    for (std::size_t r = 0; r < long_coords.size(); ++r) {
      for (std::size_t c = 0; c < long_multiples.size(); ++c)
        if (long_coords[r] == long_multiples[c]) sys.set(r, c, Scalar::one(f));
      rhs.push_back(-rep_n.coeff(long_coords[r]));
    }
    if (!solve(sys, rhs)) {
      empty = true;
      report.emptiness_reason =
          "coset " + std::to_string(n) + " has no member in the length filtration";
      break;
    }

    // Forced coefficients on short non-multiple paths.
    for (Vertex m = 0; m <= static_cast<Vertex>(top); ++m) {
      for (Vertex l = 0; l <= m; ++l) {
        if (static_cast<std::size_t>(m - l) > big_n) continue;
        Path p = chain_path(trunc, m, l);
        if (multiples.count(p)) continue;
        Scalar val = rep_n.coeff(p);
        auto it = forced.find(p);
        if (it == forced.end()) {
          forced.emplace(p, std::make_pair(val, n));
        } else if (!(it->second.first == val)) {
          empty = true;
          report.emptiness_reason = "cosets " + std::to_string(it->second.second) + " and " +
                                    std::to_string(n) + " force different coefficients at " +
                                    p.str();
          break;
        }
      }
      if (empty) break;
    }
  }
  report.intersection_empty = empty;
  return report;
}

}  // namespace quiverhom
