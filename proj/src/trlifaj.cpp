#include "trlifaj.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quiverhom {

int OrdinalT::succ_index() const {
  if (!is_successor()) throw DomainError("succ_index of a non-successor ordinal");
  return n - 1;
}

std::string OrdinalT::str() const {
  if (k == 0) return std::to_string(n);
  std::string w = k == 1 ? "w" : "w*" + std::to_string(k);
  return n == 0 ? w : w + "+" + std::to_string(n);
}

LadderSystem::LadderSystem(Truncation tr, std::map<std::pair<int, int>, OrdinalT> zeta)
    : tr_(tr), zeta_(std::move(zeta)) {
  validate();
}

LadderSystem LadderSystem::default_ladder(const Truncation& tr) {
  if (tr.k_max < 1) throw DomainError("truncation needs at least one limit");
  std::map<std::pair<int, int>, OrdinalT> zeta;
  for (int k = 1; k <= tr.k_max; ++k)
    for (int n = 0; n < tr.depth; ++n)
      zeta[{k, n}] = OrdinalT{std::min(n, k - 1), n + 1};
  return LadderSystem(tr, std::move(zeta));
}

void LadderSystem::validate() const {
  for (int k = 1; k <= tr_.k_max; ++k) {
    OrdinalT alpha{k, 0};
    for (int n = 0; n < tr_.depth; ++n) {
      auto it = zeta_.find({k, n});
      if (it == zeta_.end())
        throw DomainError("ladder missing point (" + alpha.str() + ", " + std::to_string(n) + ")");
      const OrdinalT& z = it->second;
      if (!tr_.contains(z)) throw BoundsError("ladder point " + z.str() + " outside truncation");
      if (!z.is_successor() || z.succ_index() != n)
        throw DomainError("ladder point " + z.str() + " must be a successor with index " +
                          std::to_string(n));
      if (!(z < alpha)) throw DomainError("ladder point " + z.str() + " not below " + alpha.str());
      if (n > 0 && !(zeta_.at({k, n - 1}) < z))
        throw DomainError("ladder not strictly increasing at (" + alpha.str() + ", " +
                          std::to_string(n) + ")");
    }
  }
}

OrdinalT LadderSystem::zeta(const OrdinalT& alpha, int n) const {
  if (!alpha.is_limit()) throw DomainError("ladder indexed by a non-limit ordinal");
  auto it = zeta_.find({alpha.k, n});
  if (it == zeta_.end())
    throw BoundsError("ladder rung " + std::to_string(n) + " outside the truncation depth");
  return it->second;
}

LadderSystem LadderSystem::with_override(int k, int n, const OrdinalT& value) const {
  auto zs = zeta_;
  if (!zs.count({k, n})) throw DomainError("override of a rung outside the ladder");
  zs[{k, n}] = value;
  return LadderSystem(tr_, std::move(zs));
}

std::string SlotKey::str() const {
  return inner < 0 ? "[" + ord.str() + "]" : "[" + ord.str() + " @" + std::to_string(inner) + "]";
}

DSElement DSElement::unit(Quiver q, Field f, const SlotKey& slot, Vertex v) {
  DSElement e(q, f);
  e.set_slot(slot, AlgebraElement::stationary(e.quiver_, f, v));
  return e;
}

AlgebraElement DSElement::slot(const SlotKey& key) const {
  auto it = slots_.find(key);
  return it == slots_.end() ? AlgebraElement::zero(quiver_, field_) : it->second;
}

void DSElement::set_slot(const SlotKey& key, const AlgebraElement& value) {
  if (value.is_zero())
    slots_.erase(key);
  else
    slots_.insert_or_assign(key, value);
}

void DSElement::check_compatible(const DSElement& o) const {
  if (!(quiver_ == o.quiver_)) throw DomainError("ds-elements over different quivers");
  if (field_ != o.field_) throw FieldMismatchError("ds-elements over different fields");
}

DSElement DSElement::operator+(const DSElement& o) const {
  check_compatible(o);
  DSElement out = *this;
  for (const auto& [key, val] : o.slots_) out.set_slot(key, out.slot(key) + val);
  return out;
}

DSElement DSElement::operator-(const DSElement& o) const {
  check_compatible(o);
  DSElement out = *this;
  for (const auto& [key, val] : o.slots_) out.set_slot(key, out.slot(key) - val);
  return out;
}

DSElement DSElement::operator-() const {
  DSElement out(quiver_, field_);
  for (const auto& [key, val] : slots_) out.slots_.emplace(key, -val);
  return out;
}

DSElement DSElement::scalar_mul(const Scalar& c) const {
  DSElement out(quiver_, field_);
  for (const auto& [key, val] : slots_) out.set_slot(key, val.scalar_mul(c));
  return out;
}

DSElement DSElement::operator*(const AlgebraElement& r) const {
  DSElement out(quiver_, field_);
  for (const auto& [key, val] : slots_) out.set_slot(key, val * r);
  return out;
}

DSElement DSElement::operator*(const Path& p) const {
  DSElement out(quiver_, field_);
  for (const auto& [key, val] : slots_) out.set_slot(key, val * p);
  return out;
}

bool DSElement::operator==(const DSElement& o) const {
  check_compatible(o);
  return slots_ == o.slots_;
}

std::string DSElement::str() const {
  if (slots_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, val] : slots_) {
    if (!first) os << " ; ";
    first = false;
    os << key.str() << " " << val.str();
  }
  return os.str();
}

TrlifajContext::TrlifajContext(Quiver q, Field f, Flavor fl, LadderSystem l)
    : quiver(std::move(q)), field(f), flavor(fl), ladder(std::move(l)) {
  if (flavor == Flavor::Circular) {
    if (quiver.kind() != Quiver::Kind::Circular)
      throw DomainError("circular flavor needs a circular quiver");
  } else {
    if (!quiver.has_vertex(0) || quiver.arrows_into(0).empty())
      throw DomainError("chain flavor needs the descending chain quiver");
  }
}

Path TrlifajContext::step_path(int n) const {
  if (flavor == Flavor::Circular) return power_cycle(quiver, 1);
  for (const Arrow& a : quiver.arrows_into(n))
    if (a.source == static_cast<Vertex>(n) + 1) return Path({a});
  throw DomainError("no chain arrow into vertex " + std::to_string(n));
}

Path TrlifajContext::descent_path(int n) const {
  if (flavor == Flavor::Circular) return power_cycle(quiver, static_cast<std::size_t>(n));
  Path acc{Vertex{0}};
  for (int i = 0; i < n; ++i) acc = *compose(step_path(i), acc);
  return acc;
}

std::vector<OrdinalT> TrlifajContext::all_limits() const {
  std::vector<OrdinalT> out;
  for (int k = 1; k <= trunc().k_max; ++k) out.push_back(OrdinalT{k, 0});
  return out;
}

DSElement gen_x(const TrlifajContext& ctx, const OrdinalT& alpha, int n) {
  if (!alpha.is_limit() || !ctx.trunc().contains(alpha))
    throw DomainError("generator index must be a truncated limit");
  if (n < 0 || n + 1 > ctx.trunc().depth)
    throw BoundsError("generator rung " + std::to_string(n) + " outside the truncation depth");
  OrdinalT z = ctx.ladder.zeta(alpha, n);
  const Quiver& q = ctx.quiver;
  const Field& f = ctx.field;
  Vertex v = ctx.gen_vertex(n);

  DSElement out(q, f);
  out.set_slot(SlotKey{z, -1}, AlgebraElement::stationary(q, f, v));
  AlgebraElement minus_e = -AlgebraElement::stationary(q, f, v);
  out.set_slot(ctx.limit_slot(alpha, n), out.slot(ctx.limit_slot(alpha, n)) + minus_e);
  AlgebraElement step = AlgebraElement::path_term(q, f, ctx.step_path(n));
  out.set_slot(ctx.limit_slot(alpha, n + 1), out.slot(ctx.limit_slot(alpha, n + 1)) + step);
  return out;
}

std::vector<SpanElem> i_span_basis(const TrlifajContext& ctx,
                                   const std::vector<OrdinalT>& window, int n_max,
                                   std::size_t len_max) {
  std::vector<OrdinalT> win = window;
  std::sort(win.begin(), win.end());
  std::vector<SpanElem> out;
  for (const OrdinalT& alpha : win) {
    for (int n = 0; n <= n_max; ++n) {
      DSElement g = gen_x(ctx, alpha, n);
      for (const Path& p : paths_from(ctx.quiver, ctx.gen_vertex(n), len_max))
        out.emplace_back(alpha, n, p, g * p);
    }
  }
  return out;
}

std::size_t ds_family_rank(const std::vector<DSElement>& elems) {
  if (elems.empty()) return 0;
  const Field& f = elems[0].field();
  std::map<std::pair<SlotKey, Path>, std::size_t> coords;
  for (const DSElement& e : elems)
    for (const auto& [key, val] : e.slots())
      for (const auto& [p, c] : val.terms())
        coords.try_emplace({key, p}, coords.size());
  Matrix m(f, coords.size(), elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j)
    for (const auto& [key, val] : elems[j].slots())
      for (const auto& [p, c] : val.terms()) m.set(coords.at({key, p}), j, c);
  return rank(m);
}

QuotientBounds certified_bounds(const TrlifajContext& ctx, const DSElement& diff) {
  // Chain flavor: a combination hitting the supports can only use rungs up
  // to the largest source vertex (equivalently ladder index) present, and
  // the products' path lengths stay within that range as well. Circular
  // flavor: rungs are graded by the inner index and each step multiplies
  // by one full cycle.
  std::int64_t max_v = 0;          // chain: vertex / rung bound
  int max_inner = 0;               // circular: inner index bound
  std::size_t max_len = 0;
  for (const auto& [key, val] : diff.slots()) {
    if (key.ord.is_successor()) max_inner = std::max(max_inner, key.ord.succ_index());
    if (key.inner >= 0) max_inner = std::max(max_inner, key.inner);
    for (const auto& [p, c] : val.terms()) {
      max_v = std::max({max_v, p.source(), p.target()});
      max_len = std::max(max_len, p.length());
    }
    if (key.ord.is_successor())
      max_v = std::max(max_v, static_cast<std::int64_t>(key.ord.succ_index()));
  }
  QuotientBounds b;
  if (ctx.flavor == Flavor::AInf) {
    b.n_max = static_cast<int>(max_v) + 1;
    b.len_max = static_cast<std::size_t>(
                    std::max(max_len, static_cast<std::size_t>(max_v))) +
                1;
  } else {
    b.n_max = max_inner + 1;
    std::size_t cycle = static_cast<std::size_t>(ctx.quiver.circular_size());
    b.len_max = max_len + static_cast<std::size_t>(b.n_max + 1) * cycle;
  }
  return b;
}

bool quotient_equal(const TrlifajContext& ctx, const DSElement& x, const DSElement& y,
                    const std::vector<OrdinalT>& window,
                    std::optional<QuotientBounds> bounds) {
  DSElement diff = x - y;
  if (diff.is_zero()) return true;
  for (const auto& [key, val] : diff.slots()) {
    if (!ctx.trunc().contains(key.ord))
      throw BoundsError("support slot " + key.str() + " outside the truncation");
  }
  QuotientBounds need = certified_bounds(ctx, diff);
  QuotientBounds use = need;
  if (bounds) {
    if (bounds->n_max < need.n_max || bounds->len_max < need.len_max)
      throw BoundsError("given bounds cannot certify the quotient test (need n_max " +
                        std::to_string(need.n_max) + ", len_max " +
                        std::to_string(need.len_max) + ")");
    use = *bounds;
  }
  if (use.n_max > ctx.trunc().depth - 1)
    throw BoundsError("certified rung bound exceeds the truncation depth");

  std::vector<SpanElem> basis = i_span_basis(ctx, window, use.n_max, use.len_max);
  if (basis.empty()) return false;
  const Field& f = ctx.field;
  std::map<std::pair<SlotKey, Path>, std::size_t> coords;
  auto note = [&coords](const DSElement& e) {
    for (const auto& [key, val] : e.slots())
      for (const auto& [p, c] : val.terms()) coords.try_emplace({key, p}, coords.size());
  };
  for (const SpanElem& e : basis) note(e.value);
  note(diff);
  Matrix m(f, coords.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [key, val] : basis[j].value.slots())
      for (const auto& [p, c] : val.terms()) m.set(coords.at({key, p}), j, c);
  std::vector<Scalar> rhs(coords.size(), Scalar::zero(f));
  for (const auto& [key, val] : diff.slots())
    for (const auto& [p, c] : val.terms()) rhs[coords.at({key, p})] = c;
  return solve(m, rhs).has_value();
}

const DSElement& Witness::value(const OrdinalT& alpha, int n) const {
  auto it = values.find({alpha, n});
  if (it == values.end())
    throw DomainError("witness has no value at (" + alpha.str() + ", " + std::to_string(n) + ")");
  return it->second;
}

SlotKey single_kq_slot() { return SlotKey{OrdinalT{0, 0}, -1}; }

Witness witness_phi(const TrlifajContext& ctx, const std::vector<OrdinalT>& window,
                    int n_max) {
  Witness w;
  w.mode = TargetMode::FreeColumns;
  for (const OrdinalT& alpha : window)
    for (int n = 0; n <= n_max; ++n)
      w.values.emplace(std::make_pair(alpha, n),
                       DSElement::unit(ctx.quiver, ctx.field, ctx.limit_slot(alpha, n),
                                       ctx.gen_vertex(n)));
  return w;
}

Witness witness_zero(const TrlifajContext& ctx, const std::vector<OrdinalT>& window,
                     int n_max) {
  Witness w;
  for (const OrdinalT& alpha : window)
    for (int n = 0; n <= n_max; ++n)
      w.values.emplace(std::make_pair(alpha, n), DSElement(ctx.quiver, ctx.field));
  return w;
}

AlgebraElement random_value_ending_at(const TrlifajContext& ctx, Vertex v,
                                      std::size_t max_len, std::mt19937_64& rng) {
  std::vector<Path> pool = paths_into(ctx.quiver, v, max_len);
  AlgebraElement out(ctx.quiver, ctx.field);
  std::size_t terms = rng() % 3;
  for (std::size_t t = 0; t < terms; ++t) {
    const Path& p = pool[rng() % pool.size()];
    Scalar c = ctx.field.is_rational()
                   ? Scalar::rational(static_cast<long>(rng() % 5) - 2)
                   : Scalar::of_int(ctx.field, static_cast<long>(rng() % ctx.field.characteristic()));
    out = out + AlgebraElement::path_term(ctx.quiver, ctx.field, p, c);
  }
  return out;
}

Witness witness_random(const TrlifajContext& ctx, const std::vector<OrdinalT>& window,
                       int n_max, TargetMode mode, std::mt19937_64& rng) {
  Witness w;
  w.mode = mode;
  for (const OrdinalT& alpha : window) {
    for (int n = 0; n <= n_max; ++n) {
      DSElement val(ctx.quiver, ctx.field);
      std::size_t columns = mode == TargetMode::SingleKq ? 1 : 1 + rng() % 2;
      for (std::size_t c = 0; c < columns; ++c) {
        SlotKey key = single_kq_slot();
        if (mode == TargetMode::FreeColumns) {
          // Any free column; successor-style keys within the truncation.
          int k = static_cast<int>(rng() % (ctx.trunc().k_max + 1));
          int nn = 1 + static_cast<int>(rng() % ctx.trunc().depth);
          key = SlotKey{OrdinalT{k, nn}, -1};
        }
        val.set_slot(key, val.slot(key) +
                              random_value_ending_at(ctx, ctx.gen_vertex(n), 3, rng));
      }
      w.values.emplace(std::make_pair(alpha, n), val);
    }
  }
  return w;
}

Coloring extract_coloring(const TrlifajContext& ctx, const Witness& phi,
                          const std::vector<OrdinalT>& window, int n_max) {
  Coloring coloring;
  for (const OrdinalT& alpha : window) {
    for (int n = 0; n <= n_max; ++n) {
      DSElement d = phi.value(alpha, n);
      if (!(d * AlgebraElement::stationary(ctx.quiver, ctx.field, ctx.gen_vertex(n)) == d))
        coloring.support_ok = false;
      coloring.values.emplace(std::make_pair(alpha, n), std::move(d));
    }
  }
  return coloring;
}

Uniformizer make_uniformizer(const TrlifajContext& ctx, const Coloring& coloring,
                             std::map<OrdinalT, int> thresholds, int n_max, bool repair,
                             std::mt19937_64* fill_rng) {
  for (const auto& [alpha, nt] : thresholds)
    if (nt < 0 || nt > ctx.trunc().depth - 1)
      throw BoundsError("threshold at " + alpha.str() + " exceeds the truncation");

  // Agreement demands per ladder point; conflicts on shared points are
  // repaired by pushing the later limit's threshold past the point.
  std::map<OrdinalT, DSElement> f;
  bool changed = true;
  while (changed) {
    changed = false;
    f.clear();
    std::map<OrdinalT, std::pair<OrdinalT, int>> chosen_by;
    for (const auto& [key, value] : coloring.values) {
      const auto& [alpha, n] = key;
      if (!thresholds.count(alpha)) throw DomainError("missing threshold at " + alpha.str());
      if (n < thresholds.at(alpha) || n > n_max) continue;
      OrdinalT point = ctx.ladder.zeta(alpha, n);
      auto it = f.find(point);
      if (it == f.end()) {
        f.emplace(point, value);
        chosen_by.emplace(point, std::make_pair(alpha, n));
      } else if (!(it->second == value)) {
        if (!repair)
          throw DomainError("thresholds do not admit a uniformizer: conflict at " +
                            point.str());
        if (n + 1 > ctx.trunc().depth - 1)
          throw BoundsError("uniformizer repair pushed a threshold past the truncation");
        thresholds[alpha] = n + 1;
        changed = true;
        break;
      }
    }
  }
  // Unconstrained ladder points get arbitrary fill.
  for (const auto& [key, value] : coloring.values) {
    const auto& [alpha, n] = key;
    if (n > n_max) continue;
    OrdinalT point = ctx.ladder.zeta(alpha, n);
    if (f.count(point)) continue;
    DSElement fill(ctx.quiver, ctx.field);
    if (fill_rng) {
      SlotKey col = single_kq_slot();
      fill.set_slot(col, random_value_ending_at(ctx, ctx.gen_vertex(n), 3, *fill_rng));
    }
    f.emplace(point, std::move(fill));
  }
  return Uniformizer{std::move(f), std::move(thresholds)};
}

namespace {

// Evaluates psi on a ds-element, decomposing each slot value over its
// source vertices. psi_ladder is keyed by successor ordinal; psi_limit by
// (limit, index) where the index is the source vertex (chain flavor,
// inner 0) or the inner coordinate (circular flavor).
DSElement evaluate_psi(const TrlifajContext& ctx,
                       const std::map<OrdinalT, DSElement>& psi_ladder,
                       const std::map<std::pair<OrdinalT, int>, DSElement>& psi_limit,
                       const DSElement& x) {
  DSElement acc(ctx.quiver, ctx.field);
  for (const auto& [key, val] : x.slots()) {
    for (const auto& [p, c] : val.terms()) {
      const DSElement* base = nullptr;
      if (key.ord.is_successor()) {
        if (key.inner != -1) throw DomainError("successor slot with an inner index");
        auto it = psi_ladder.find(key.ord);
        if (it == psi_ladder.end())
          throw DomainError("psi undefined at ladder point " + key.ord.str());
        base = &it->second;
      } else if (key.ord.is_limit()) {
        int index;
        if (ctx.flavor == Flavor::AInf) {
          if (key.inner != 0) throw DomainError("chain-flavor limit slot with inner index != 0");
          index = static_cast<int>(p.source());
        } else {
          if (key.inner < 0) throw DomainError("circular-flavor limit slot without inner index");
          if (p.source() != 0) throw DomainError("circular slot value not anchored at vertex 0");
          index = key.inner;
        }
        auto it = psi_limit.find({key.ord, index});
        if (it == psi_limit.end())
          throw DomainError("psi undefined at (" + key.ord.str() + ", " +
                            std::to_string(index) + ")");
        base = &it->second;
      } else {
        throw DomainError("slot at the zero ordinal");
      }
      acc = acc + (*base * p).scalar_mul(c);
    }
  }
  return acc;
}

}  // namespace

PsiResult reconstruct_psi(const TrlifajContext& ctx, const Witness& phi,
                          const Uniformizer& uni, const std::vector<OrdinalT>& window,
                          int n_max, std::size_t len_max) {
  const Quiver& q = ctx.quiver;
  const Field& f = ctx.field;
  if (n_max > ctx.trunc().depth - 1) throw BoundsError("n_max exceeds the truncation depth");

  PsiResult result;
  // psi at the ladder points comes straight from the uniformizer.
  for (const OrdinalT& alpha : window) {
    int nt = uni.thresholds.count(alpha) ? uni.thresholds.at(alpha) : 0;
    if (nt > ctx.trunc().depth - 1)
      throw BoundsError("threshold at " + alpha.str() + " exceeds the truncation");
    for (int n = 0; n <= n_max; ++n) {
      OrdinalT point = ctx.ladder.zeta(alpha, n);
      auto it = uni.f.find(point);
      if (it == uni.f.end())
        throw DomainError("uniformizer undefined at ladder point " + point.str());
      AlgebraElement ev = AlgebraElement::stationary(q, f, ctx.gen_vertex(n));
      if (!(it->second * ev == it->second))
        throw DomainError("uniformizer value at " + point.str() +
                          " is not supported at the generator vertex");
      result.psi_ladder.insert_or_assign(point, it->second);
    }
  }

  // Limit values: zero from the threshold on, downward induction below.
  int index_top = n_max + 1;
  for (const OrdinalT& alpha : window) {
    int nt = uni.thresholds.at(alpha);
    if (nt > n_max)
      throw BoundsError("threshold at " + alpha.str() + " exceeds the verified rung range");
    for (int n = index_top; n >= nt; --n)
      result.psi_limit.emplace(std::make_pair(alpha, n), DSElement(q, f));
    for (int n = nt - 1; n >= 0; --n) {
      DSElement value = result.psi_ladder.at(ctx.ladder.zeta(alpha, n)) +
                        result.psi_limit.at({alpha, n + 1}) * ctx.step_path(n) -
                        phi.value(alpha, n);
      result.psi_limit.emplace(std::make_pair(alpha, n), std::move(value));
    }
  }

  // Verification: psi agrees with phi on every spanning element.
  result.ok = true;
  for (const SpanElem& elem : i_span_basis(ctx, window, n_max, len_max)) {
    DSElement lhs = evaluate_psi(ctx, result.psi_ladder, result.psi_limit, elem.value);
    DSElement rhs = phi.value(elem.alpha, elem.n) * elem.p;
    if (!(lhs == rhs)) {
      result.ok = false;
      result.first_violation.emplace(elem.alpha, elem.n, elem.p);
      break;
    }
  }
  return result;
}

TelescopeReport claim22_telescope(const TrlifajContext& ctx, const OrdinalT& alpha, int n,
                                  const TelescopeInput& input) {
  const Quiver& q = ctx.quiver;
  const Field& f = ctx.field;
  if (static_cast<int>(input.zeta_values.size()) != n + 1)
    throw DomainError("telescope needs exactly n+1 ladder values");
  if (n + 1 > ctx.trunc().depth) throw BoundsError("telescope rung exceeds the truncation");

  for (int i = 0; i <= n; ++i) {
    const DSElement& z = input.zeta_values[static_cast<std::size_t>(i)];
    AlgebraElement ev = AlgebraElement::stationary(q, f, ctx.gen_vertex(i));
    if (!(z * ev == z))
      throw DomainError("ladder value " + std::to_string(i) + " not supported at its vertex");
    for (const auto& [key, val] : z.slots())
      if (!(key.ord < alpha))
        throw DomainError("ladder value " + std::to_string(i) + " has support at or above " +
                          alpha.str());
  }
  AlgebraElement etail = AlgebraElement::stationary(q, f, ctx.gen_vertex(n + 1));
  if (!(input.tail_value * etail == input.tail_value))
    throw DomainError("tail value not supported at its vertex");

  auto witness_at = [&](int i) {
    return DSElement::unit(q, f, ctx.limit_slot(alpha, i), ctx.gen_vertex(i));
  };

  // Route one: the stepwise downward recursion.
  DSElement carry = input.tail_value;
  for (int i = n; i >= 0; --i)
    carry = input.zeta_values[static_cast<std::size_t>(i)] + carry * ctx.step_path(i) -
            witness_at(i);
  DSElement recursion_route = carry;

  // Route two: the closed telescoped form.
  DSElement closed(q, f);
  DSElement forced(q, f);
  for (int i = 0; i <= n; ++i) {
    Path descent = ctx.descent_path(i);
    closed = closed + input.zeta_values[static_cast<std::size_t>(i)] * descent;
    forced = forced - witness_at(i) * descent;
  }
  closed = closed + forced + input.tail_value * ctx.descent_path(n + 1);

  TelescopeReport report(recursion_route, DSElement(q, f), forced);
  report.identity_ok = recursion_route == closed;

  for (const auto& [key, val] : recursion_route.slots()) {
    if (key.ord == alpha) {
      auto len = val.max_path_length();
      if (len) report.alpha_slot_max_len = std::max(report.alpha_slot_max_len, *len);
    } else {
      report.alpha_free_part.set_slot(key, val);
    }
  }
  report.forces_length_ge_n = report.alpha_slot_max_len >= static_cast<std::size_t>(n);
  return report;
}

}  // namespace quiverhom
