// trlifaj.hpp -- finite-truncation model of the ladder-system module
// construction: truncated ordinals, ladders, elements of the big direct
// sum, the relation generators and their span, witness homomorphisms,
// coloring extraction and uniformizer-driven reconstruction.
#ifndef QUIVERHOM_TRLIFAJ_HPP
#define QUIVERHOM_TRLIFAJ_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pathalg.hpp"

namespace quiverhom {

// The ordinal w*k + n inside the truncation (k <= K_max, n <= D). Limits
// are (k, 0) with k >= 1; successors have n >= 1 and decompose uniquely
// as limit_part + succ_index + 1.
struct OrdinalT {
  int k = 0;
  int n = 0;

  auto operator<=>(const OrdinalT&) const = default;

  bool is_zero() const { return k == 0 && n == 0; }
  bool is_limit() const { return k >= 1 && n == 0; }
  bool is_successor() const { return n >= 1; }
  OrdinalT limit_part() const { return OrdinalT{k, 0}; }
  int succ_index() const;

  std::string str() const;  // "0", "5", "w", "w+3", "w*2", "w*2+3"
};

struct Truncation {
  int k_max = 1;
  int depth = 1;
  bool contains(const OrdinalT& o) const {
    return o.k >= 0 && o.k <= k_max && o.n >= 0 && o.n <= depth;
  }
};

// A ladder: for each truncated limit w*k and each rung n < depth, an
// ordinal zeta^alpha_n strictly increasing in n, below alpha, and a
// successor with succ_index exactly n.
class LadderSystem {
 public:
  LadderSystem(Truncation tr, std::map<std::pair<int, int>, OrdinalT> zeta);
  // zeta^{w*k}_n = w*min(n, k-1) + n + 1.
  static LadderSystem default_ladder(const Truncation& tr);

  const Truncation& truncation() const { return tr_; }
  OrdinalT zeta(const OrdinalT& alpha, int n) const;
  LadderSystem with_override(int k, int n, const OrdinalT& value) const;

 private:
  void validate() const;
  Truncation tr_;
  std::map<std::pair<int, int>, OrdinalT> zeta_;  // (k, n) -> ordinal
};

// Slot address inside the big direct sum (and inside its target modules):
// inner = -1 addresses the single algebra copy at a successor ordinal (or
// a plain free column); inner >= 0 addresses a coordinate of the inner
// direct sum at a limit ordinal.
struct SlotKey {
  OrdinalT ord;
  int inner = -1;
  auto operator<=>(const SlotKey&) const = default;
  std::string str() const;
};

// A finitely supported family of path-algebra values indexed by slots.
// Models both the elements of the big direct sum of algebra copies and
// the values of homomorphisms into free targets.
class DSElement {
 public:
  DSElement(Quiver q, Field f) : quiver_(std::move(q)), field_(f) {}
  static DSElement unit(Quiver q, Field f, const SlotKey& slot, Vertex v);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::map<SlotKey, AlgebraElement>& slots() const { return slots_; }
  bool is_zero() const { return slots_.empty(); }
  AlgebraElement slot(const SlotKey& key) const;
  void set_slot(const SlotKey& key, const AlgebraElement& value);  // drops zeros

  DSElement operator+(const DSElement& o) const;
  DSElement operator-(const DSElement& o) const;
  DSElement operator-() const;
  DSElement scalar_mul(const Scalar& c) const;
  // Right action of the path algebra, slot by slot.
  DSElement operator*(const AlgebraElement& r) const;
  DSElement operator*(const Path& p) const;

  bool operator==(const DSElement& o) const;
  bool operator!=(const DSElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_compatible(const DSElement& o) const;
  Quiver quiver_;
  Field field_;
  std::map<SlotKey, AlgebraElement> slots_;
};

enum class Flavor { AInf, Circular };

// Where homomorphism values live: a single algebra copy, or finitely many
// free columns.
enum class TargetMode { SingleKq, FreeColumns };

// Fixed data for one truncated construction: the ambient quiver, field,
// flavor, truncation and ladder.
struct TrlifajContext {
  Quiver quiver;
  Field field;
  Flavor flavor;
  LadderSystem ladder;

  TrlifajContext(Quiver q, Field f, Flavor fl, LadderSystem l);

  const Truncation& trunc() const { return ladder.truncation(); }
  // Vertex every term of the n-th generator ends at (n for the chain
  // flavor, 0 for the circular one).
  Vertex gen_vertex(int n) const { return flavor == Flavor::AInf ? n : 0; }
  // Slot of the n-indexed limit basis element (inner 0 resp. inner n).
  SlotKey limit_slot(const OrdinalT& alpha, int n) const {
    return SlotKey{alpha, flavor == Flavor::AInf ? 0 : n};
  }
  // The step path multiplying the (n+1)-st basis element in the n-th
  // generator: the arrow n+1 -> n, resp. the full cycle.
  Path step_path(int n) const;
  // step(n-1) ... step(0): the length-n descent to vertex 0, resp. the
  // n-th cycle power.
  Path descent_path(int n) const;
  // All limits of the truncation, ascending.
  std::vector<OrdinalT> all_limits() const;
};

// The three-term relation generator x(alpha, n).
DSElement gen_x(const TrlifajContext& ctx, const OrdinalT& alpha, int n);

// One labeled element of the spanning family of the relation submodule.
struct SpanElem {
  OrdinalT alpha;
  int n = 0;
  Path p;
  DSElement value;  // gen_x(alpha, n) * p
  SpanElem(OrdinalT a, int nn, Path path, DSElement v)
      : alpha(a), n(nn), p(std::move(path)), value(std::move(v)) {}
};

// All products gen_x(alpha, n) * p for alpha in the window, n <= n_max,
// and paths p from the generator vertex of length <= len_max, in
// deterministic (alpha, n, p) order.
std::vector<SpanElem> i_span_basis(const TrlifajContext& ctx,
                                   const std::vector<OrdinalT>& window, int n_max,
                                   std::size_t len_max);

// Exact rank of a family of ds-elements over the joint coordinate space
// (slot, path).
std::size_t ds_family_rank(const std::vector<DSElement>& elems);

struct QuotientBounds {
  int n_max = 0;
  std::size_t len_max = 0;
};

// Bounds guaranteed to cover every spanning product that can appear in a
// combination producing `diff`; derived from the support grading.
QuotientBounds certified_bounds(const TrlifajContext& ctx, const DSElement& diff);

// True iff x - y lies in the span of the relation products over the given
// window. User bounds below the certified ones are refused.
bool quotient_equal(const TrlifajContext& ctx, const DSElement& x, const DSElement& y,
                    const std::vector<OrdinalT>& window,
                    std::optional<QuotientBounds> bounds = std::nullopt);

// A homomorphism given by its values on the relation generators,
// extended to products by value * p.
struct Witness {
  TargetMode mode = TargetMode::SingleKq;
  std::map<std::pair<OrdinalT, int>, DSElement> values;

  const DSElement& value(const OrdinalT& alpha, int n) const;
};

// The slot every single-copy value lives in.
SlotKey single_kq_slot();

// The canonical witness phi(x(alpha, n)) = n-th limit basis element.
Witness witness_phi(const TrlifajContext& ctx, const std::vector<OrdinalT>& window,
                    int n_max);
Witness witness_zero(const TrlifajContext& ctx, const std::vector<OrdinalT>& window,
                     int n_max);
Witness witness_random(const TrlifajContext& ctx, const std::vector<OrdinalT>& window,
                       int n_max, TargetMode mode, std::mt19937_64& rng);

// Values d_alpha(zeta^alpha_n) := phi(x(alpha, n)) of the induced ladder
// coloring, plus the support-law verdict (d e_v = d at the generator
// vertex, equivalently d e_m = 0 elsewhere).
struct Coloring {
  std::map<std::pair<OrdinalT, int>, DSElement> values;
  bool support_ok = true;
};

Coloring extract_coloring(const TrlifajContext& ctx, const Witness& phi,
                          const std::vector<OrdinalT>& window, int n_max);

// A function on the ladder points together with the per-limit agreement
// thresholds N_alpha.
struct Uniformizer {
  std::map<OrdinalT, DSElement> f;       // by ladder point
  std::map<OrdinalT, int> thresholds;    // by limit
};

// Builds a true uniformizer of the coloring: f agrees with d_alpha from
// N_alpha on; points only reached below thresholds get zero or random
// fill. Shared ladder points constrained to different colors make the
// requested thresholds infeasible; with `repair` the offending thresholds
// are raised just past the shared point, otherwise this throws.
Uniformizer make_uniformizer(const TrlifajContext& ctx, const Coloring& coloring,
                             std::map<OrdinalT, int> thresholds, int n_max, bool repair,
                             std::mt19937_64* fill_rng);

struct PsiViolation {
  OrdinalT alpha;
  int n = 0;
  Path p;
  PsiViolation(OrdinalT a, int nn, Path path) : alpha(a), n(nn), p(std::move(path)) {}
};

struct PsiResult {
  bool ok = false;
  std::optional<PsiViolation> first_violation;
  // The reconstructed assignment: by ladder point, and by (limit, index).
  std::map<OrdinalT, DSElement> psi_ladder;
  std::map<std::pair<OrdinalT, int>, DSElement> psi_limit;
};

// The downward-induction reconstruction: psi at a ladder point is f's
// value, psi at limit index n is zero from the threshold on and
// psi(zeta value) + psi(next) * step - phi(generator) below; then
// psi restricted to the relation span is compared with phi on every
// spanning element.
PsiResult reconstruct_psi(const TrlifajContext& ctx, const Witness& phi,
                          const Uniformizer& uni, const std::vector<OrdinalT>& window,
                          int n_max, std::size_t len_max);

// Inputs for the telescoping identity at one limit: target-correct values
// for psi at the first n+1 ladder points (supports below alpha) and for
// psi at the (n+1)-st limit basis element.
struct TelescopeInput {
  std::vector<DSElement> zeta_values;  // indices 0..n
  DSElement tail_value;                // psi at limit index n+1
  TelescopeInput(std::vector<DSElement> zv, DSElement tail)
      : zeta_values(std::move(zv)), tail_value(std::move(tail)) {}
};

struct TelescopeReport {
  bool identity_ok = false;        // stepwise recursion equals closed form
  DSElement psi_e_alpha_0;
  DSElement alpha_free_part;       // slots at ordinals other than alpha
  DSElement forced_part;           // the witness-driven alpha-slot terms
  std::size_t alpha_slot_max_len = 0;
  bool forces_length_ge_n = false;
  TelescopeReport(DSElement a, DSElement b, DSElement c)
      : psi_e_alpha_0(std::move(a)), alpha_free_part(std::move(b)),
        forced_part(std::move(c)) {}
};

TelescopeReport claim22_telescope(const TrlifajContext& ctx, const OrdinalT& alpha, int n,
                                  const TelescopeInput& input);

// Test and scenario helpers: a deterministic random algebra value whose
// support ends at the given vertex.
AlgebraElement random_value_ending_at(const TrlifajContext& ctx, Vertex v,
                                      std::size_t max_len, std::mt19937_64& rng);

}  // namespace quiverhom

#endif
