#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "trlifaj.hpp"

using namespace quiverhom;

namespace {
const Field Q = Field::rationals();

TrlifajContext ainf_ctx(int kmax = 3, int depth = 8) {
  return TrlifajContext(Quiver::a_infinity(), Q, Flavor::AInf,
                        LadderSystem::default_ladder(Truncation{kmax, depth}));
}

TrlifajContext circ_ctx(std::int64_t size = 3, int kmax = 3, int depth = 8) {
  return TrlifajContext(Quiver::circular(size), Q, Flavor::Circular,
                        LadderSystem::default_ladder(Truncation{kmax, depth}));
}

AlgebraElement stationary(const TrlifajContext& ctx, Vertex v) {
  return AlgebraElement::stationary(ctx.quiver, ctx.field, v);
}
}  // namespace

TEST_CASE("truncated ordinals: order and successor decomposition") {
  OrdinalT zero{0, 0}, five{0, 5}, w{1, 0}, w3{1, 3}, w2{2, 0};
  CHECK(zero < five);
  CHECK(five < w);
  CHECK(w < w3);
  CHECK(w3 < w2);
  CHECK(zero.is_zero());
  CHECK(w.is_limit());
  CHECK(!five.is_limit());
  CHECK(five.is_successor());
  CHECK(five.succ_index() == 4);
  CHECK(w3.succ_index() == 2);
  CHECK(w3.limit_part() == w);
  CHECK_THROWS_AS(w.succ_index(), DomainError);
  CHECK(zero.str() == "0");
  CHECK(five.str() == "5");
  CHECK(w.str() == "w");
  CHECK(w3.str() == "w+3");
  CHECK(w2.str() == "w*2");
  CHECK(OrdinalT{2, 3}.str() == "w*2+3");
}

TEST_CASE("default ladder values") {
  LadderSystem ladder = LadderSystem::default_ladder(Truncation{3, 8});
  OrdinalT w{1, 0}, w2{2, 0}, w3{3, 0};
  // Below w the only limit is 0, so the ladder walks the integers.
  for (int n = 0; n < 7; ++n) CHECK(ladder.zeta(w, n) == OrdinalT{0, n + 1});
  CHECK(ladder.zeta(w2, 0) == OrdinalT{0, 1});
  CHECK(ladder.zeta(w2, 1) == OrdinalT{1, 2});
  CHECK(ladder.zeta(w2, 2) == OrdinalT{1, 3});
  // Shared small rungs across limits.
  CHECK(ladder.zeta(w2, 0) == ladder.zeta(w3, 0));

  // Successor-index property and monotonicity everywhere.
  for (const OrdinalT& alpha : {w, w2, w3}) {
    for (int n = 0; n < 7; ++n) {
      OrdinalT z = ladder.zeta(alpha, n);
      CHECK(z.is_successor());
      CHECK(z.succ_index() == n);
      CHECK(z < alpha);
      if (n > 0) CHECK(ladder.zeta(alpha, n - 1) < z);
    }
  }
  // Every limit block below alpha is exhausted.
  for (const OrdinalT& alpha : {w2, w3}) {
    std::set<int> blocks;
    for (int n = 0; n < 7; ++n) blocks.insert(ladder.zeta(alpha, n).k);
    for (int k = 0; k < alpha.k; ++k) CHECK(blocks.count(k) == 1);
  }
}

TEST_CASE("ladder validation rejects bad overrides") {
  LadderSystem ladder = LadderSystem::default_ladder(Truncation{2, 6});
  // Wrong successor index.
  CHECK_THROWS_AS(ladder.with_override(2, 1, OrdinalT{0, 1}), DomainError);
  // Not below the limit.
  CHECK_THROWS_AS(ladder.with_override(2, 1, OrdinalT{2, 2}), DomainError);
  // Breaks monotonicity: rung 1 below rung 0.
  LadderSystem moved = ladder.with_override(2, 0, OrdinalT{1, 1});
  CHECK_THROWS_AS(moved.with_override(2, 1, OrdinalT{0, 2}), DomainError);
  // A sound override is accepted.
  CHECK_NOTHROW(ladder.with_override(2, 1, OrdinalT{0, 2}));
}

TEST_CASE("generator shape, chain flavor") {
  TrlifajContext ctx = ainf_ctx();
  OrdinalT alpha{2, 0};
  DSElement g = gen_x(ctx, alpha, 0);
  OrdinalT z = ctx.ladder.zeta(alpha, 0);

  REQUIRE(g.slots().size() == 2);
  CHECK(g.slot(SlotKey{z, -1}) == stationary(ctx, 0));
  AlgebraElement limit_part = g.slot(SlotKey{alpha, 0});
  AlgebraElement a0 = AlgebraElement::path_term(ctx.quiver, Q, ctx.step_path(0));
  CHECK(limit_part == a0 - stationary(ctx, 0));

  // Right idempotent action: e_m kills the generator unless m = n.
  CHECK((g * stationary(ctx, 1)).is_zero());
  CHECK((g * stationary(ctx, 5)).is_zero());
  CHECK(g * stationary(ctx, 0) == g);

  DSElement g3 = gen_x(ctx, alpha, 3);
  CHECK(g3 * stationary(ctx, 3) == g3);
  CHECK((g3 * stationary(ctx, 2)).slots().empty());
}

TEST_CASE("generator shape, circular flavor") {
  TrlifajContext ctx = circ_ctx();
  OrdinalT alpha{1, 0};
  DSElement g = gen_x(ctx, alpha, 2);
  OrdinalT z = ctx.ladder.zeta(alpha, 2);

  REQUIRE(g.slots().size() == 3);
  CHECK(g.slot(SlotKey{z, -1}) == stationary(ctx, 0));
  CHECK(g.slot(SlotKey{alpha, 2}) == -stationary(ctx, 0));
  AlgebraElement cyc = AlgebraElement::path_term(ctx.quiver, Q, power_cycle(ctx.quiver, 1));
  CHECK(g.slot(SlotKey{alpha, 3}) == cyc);

  CHECK(g * stationary(ctx, 0) == g);
  CHECK((g * stationary(ctx, 1)).is_zero());
}

TEST_CASE("generators respect the truncation") {
  TrlifajContext ctx = ainf_ctx(2, 4);
  CHECK_THROWS_AS(gen_x(ctx, OrdinalT{2, 0}, 4), BoundsError);
  CHECK_THROWS_AS(gen_x(ctx, OrdinalT{0, 3}, 0), DomainError);
  CHECK_NOTHROW(gen_x(ctx, OrdinalT{2, 0}, 3));
}

TEST_CASE("span basis enumeration") {
  TrlifajContext ctx = ainf_ctx();
  CHECK(i_span_basis(ctx, {}, 3, 3).empty());

  OrdinalT alpha{1, 0};
  auto single = i_span_basis(ctx, {alpha}, 0, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].value == gen_x(ctx, alpha, 0));
  CHECK(single[0].p.is_stationary());

  // Chain flavor: paths from vertex n run down to 0, so rung n contributes
  // min(n, len_max) + 1 products.
  auto fam = i_span_basis(ctx, {alpha}, 3, 2);
  CHECK(fam.size() == 1 + 2 + 3 + 3);
}

TEST_CASE("span family is linearly independent") {
  for (int kmax : {1, 3}) {
    TrlifajContext ctx = ainf_ctx(kmax, 6);
    std::vector<OrdinalT> window = ctx.all_limits();
    auto fam = i_span_basis(ctx, window, 4, 3);
    std::vector<DSElement> values;
    for (const auto& e : fam) values.push_back(e.value);
    CHECK(ds_family_rank(values) == values.size());
  }
  TrlifajContext circ = circ_ctx();
  auto fam = i_span_basis(circ, circ.all_limits(), 4, 6);
  std::vector<DSElement> values;
  for (const auto& e : fam) values.push_back(e.value);
  CHECK(ds_family_rank(values) == values.size());
}

TEST_CASE("quotient equality examples") {
  TrlifajContext ctx = ainf_ctx();
  std::vector<OrdinalT> window = ctx.all_limits();
  OrdinalT alpha{2, 0};
  OrdinalT z = ctx.ladder.zeta(alpha, 0);

  DSElement x = DSElement::unit(ctx.quiver, Q, SlotKey{z, -1}, 0);
  DSElement e_alpha_0 = DSElement::unit(ctx.quiver, Q, ctx.limit_slot(alpha, 0), 0);
  DSElement e_alpha_1 = DSElement::unit(ctx.quiver, Q, ctx.limit_slot(alpha, 1), 1);
  DSElement y = e_alpha_0 - e_alpha_1 * ctx.step_path(0);

  CHECK(quotient_equal(ctx, x, y, window));           // difference is gen_x(alpha, 0)
  CHECK(quotient_equal(ctx, x, x, window));           // reflexive
  CHECK(!quotient_equal(ctx, x, DSElement(ctx.quiver, Q), window));
  CHECK(!quotient_equal(ctx, e_alpha_0, DSElement(ctx.quiver, Q), window));
}

TEST_CASE("quotient equality is compatible with the right action") {
  TrlifajContext ctx = ainf_ctx();
  std::vector<OrdinalT> window = ctx.all_limits();
  OrdinalT alpha{1, 0};
  // x ~ y as above, multiplied by sampled algebra elements.
  DSElement x = DSElement::unit(ctx.quiver, Q, SlotKey{ctx.ladder.zeta(alpha, 2), -1}, 2);
  DSElement y = DSElement::unit(ctx.quiver, Q, ctx.limit_slot(alpha, 2), 2) -
                DSElement::unit(ctx.quiver, Q, ctx.limit_slot(alpha, 3), 3) * ctx.step_path(2);
  REQUIRE(quotient_equal(ctx, x, y, window));
  std::mt19937_64 rng(77);
  for (int i = 0; i < 5; ++i) {
    AlgebraElement r = random_value_ending_at(ctx, 2, 2, rng);
    AlgebraElement tail = AlgebraElement::path_term(
        ctx.quiver, Q, paths_from(ctx.quiver, 2, 2)[rng() % 3]);
    AlgebraElement action = r * tail + tail;  // assorted right factors
    CHECK(quotient_equal(ctx, x * action, y * action, window));
  }
}

TEST_CASE("quotient equality refuses insufficient bounds") {
  TrlifajContext ctx = ainf_ctx();
  OrdinalT alpha{1, 0};
  DSElement x = DSElement::unit(ctx.quiver, Q, ctx.limit_slot(alpha, 4), 4);
  CHECK_THROWS_AS(
      quotient_equal(ctx, x, DSElement(ctx.quiver, Q), ctx.all_limits(), QuotientBounds{1, 1}),
      BoundsError);
  // Supports beyond the truncation are refused too.
  TrlifajContext small = ainf_ctx(1, 3);
  DSElement deep = DSElement::unit(small.quiver, Q, small.limit_slot(OrdinalT{1, 0}, 3), 3);
  CHECK_THROWS_AS(
      quotient_equal(small, deep, DSElement(small.quiver, Q), small.all_limits()),
      BoundsError);
}

TEST_CASE("witness values and extension consistency") {
  TrlifajContext ctx = ainf_ctx();
  std::vector<OrdinalT> window = ctx.all_limits();
  Witness phi = witness_phi(ctx, window, 4);
  OrdinalT alpha{2, 0};
  CHECK(phi.value(alpha, 3) ==
        DSElement::unit(ctx.quiver, Q, ctx.limit_slot(alpha, 3), 3));

  // The extension by phi(g p) = phi(g) p is consistent because the span
  // family is linearly independent: rank equals count.
  auto fam = i_span_basis(ctx, window, 4, 3);
  std::vector<DSElement> values;
  for (const auto& e : fam) values.push_back(e.value);
  CHECK(ds_family_rank(values) == values.size());

  TrlifajContext circ = circ_ctx();
  Witness cphi = witness_phi(circ, circ.all_limits(), 4);
  CHECK(cphi.value(OrdinalT{1, 0}, 2) ==
        DSElement::unit(circ.quiver, Q, SlotKey{OrdinalT{1, 0}, 2}, 0));
}

TEST_CASE("telescope identity with zero inputs") {
  TrlifajContext ctx = ainf_ctx(3, 8);
  OrdinalT alpha{3, 0};
  for (int n : {0, 2, 5}) {
    std::vector<DSElement> zvals(static_cast<std::size_t>(n) + 1,
                                 DSElement(ctx.quiver, Q));
    TelescopeReport rep =
        claim22_telescope(ctx, alpha, n, TelescopeInput(zvals, DSElement(ctx.quiver, Q)));
    CHECK(rep.identity_ok);
    CHECK(rep.alpha_free_part.is_zero());
    // Forced part: minus the sum of the descents, lengths 0..n.
    CHECK(rep.psi_e_alpha_0 == rep.forced_part);
    CHECK(rep.alpha_slot_max_len == static_cast<std::size_t>(n));
    CHECK(rep.forces_length_ge_n);
    AlgebraElement alpha_slot = rep.psi_e_alpha_0.slot(ctx.limit_slot(alpha, 0));
    CHECK(alpha_slot.terms().size() == static_cast<std::size_t>(n) + 1);
    if (n > 0) CHECK(!alpha_slot.in_length_filtration(static_cast<std::size_t>(n) - 1));
  }
}

TEST_CASE("telescope with random admissible inputs forces the length") {
  TrlifajContext ctx = ainf_ctx(3, 8);
  OrdinalT alpha{2, 0};
  std::mt19937_64 rng(99);
  for (int n : {1, 3, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<DSElement> zvals;
      for (int i = 0; i <= n; ++i) {
        DSElement z(ctx.quiver, Q);
        SlotKey col{OrdinalT{static_cast<int>(rng() % alpha.k), 1 + static_cast<int>(rng() % 7)},
                    -1};
        z.set_slot(col, random_value_ending_at(ctx, i, 2, rng));
        zvals.push_back(std::move(z));
      }
      DSElement tail(ctx.quiver, Q);
      tail.set_slot(SlotKey{alpha, 0}, random_value_ending_at(ctx, n + 1, 2, rng));
      TelescopeReport rep = claim22_telescope(ctx, alpha, n, TelescopeInput(zvals, tail));
      CHECK(rep.identity_ok);
      CHECK(rep.forces_length_ge_n);
      // The ladder contributions stay away from the alpha slot.
      for (const auto& [key, val] : rep.alpha_free_part.slots()) CHECK(key.ord < alpha);
    }
  }
}

TEST_CASE("telescope validates its inputs") {
  TrlifajContext ctx = ainf_ctx();
  OrdinalT alpha{1, 0};
  // Value not supported at its vertex.
  std::vector<DSElement> bad{DSElement::unit(ctx.quiver, Q, single_kq_slot(), 3)};
  CHECK_THROWS_AS(claim22_telescope(ctx, alpha, 0, TelescopeInput(bad, DSElement(ctx.quiver, Q))),
                  DomainError);
  // Support at the limit itself.
  std::vector<DSElement> above{DSElement::unit(ctx.quiver, Q, SlotKey{alpha, -1}, 0)};
  CHECK_THROWS_AS(
      claim22_telescope(ctx, alpha, 0, TelescopeInput(above, DSElement(ctx.quiver, Q))),
      DomainError);
  // Wrong number of ladder values.
  std::vector<DSElement> two(2, DSElement(ctx.quiver, Q));
  CHECK_THROWS_AS(claim22_telescope(ctx, alpha, 0, TelescopeInput(two, DSElement(ctx.quiver, Q))),
                  DomainError);
}

TEST_CASE("coloring extraction and support laws") {
  TrlifajContext ctx = ainf_ctx();
  std::vector<OrdinalT> window = ctx.all_limits();
  Witness phi = witness_phi(ctx, window, 5);
  Coloring coloring = extract_coloring(ctx, phi, window, 5);
  CHECK(coloring.support_ok);
  for (const auto& [key, value] : coloring.values) {
    int n = key.second;
    CHECK(value * stationary(ctx, n) == value);
    CHECK((value * stationary(ctx, n + 1)).is_zero());
  }
  Coloring zero = extract_coloring(ctx, witness_zero(ctx, window, 5), window, 5);
  CHECK(zero.support_ok);
  for (const auto& [key, value] : zero.values) CHECK(value.is_zero());

  std::mt19937_64 rng(51);
  Witness rnd = witness_random(ctx, window, 5, TargetMode::SingleKq, rng);
  CHECK(extract_coloring(ctx, rnd, window, 5).support_ok);
}

TEST_CASE("psi reconstruction: zero and canonical witnesses") {
  TrlifajContext ctx = ainf_ctx(3, 8);
  std::vector<OrdinalT> window = ctx.all_limits();
  int n_max = 6;

  Witness zero = witness_zero(ctx, window, n_max);
  Coloring zc = extract_coloring(ctx, zero, window, n_max);
  Uniformizer uz = make_uniformizer(ctx, zc, {{OrdinalT{1, 0}, 0}, {OrdinalT{2, 0}, 0},
                                              {OrdinalT{3, 0}, 0}},
                                    n_max, false, nullptr);
  PsiResult rz = reconstruct_psi(ctx, zero, uz, window, n_max, 3);
  CHECK(rz.ok);
  for (const auto& [key, val] : rz.psi_limit) CHECK(val.is_zero());

  // Canonical witness restricted to one limit with threshold zero.
  OrdinalT alpha{1, 0};
  Witness phi = witness_phi(ctx, {alpha}, n_max);
  Coloring pc = extract_coloring(ctx, phi, {alpha}, n_max);
  Uniformizer up = make_uniformizer(ctx, pc, {{alpha, 0}}, n_max, false, nullptr);
  PsiResult rp = reconstruct_psi(ctx, phi, up, {alpha}, n_max, 3);
  CHECK(rp.ok);
}

TEST_CASE("psi reconstruction over random scenarios") {
  TrlifajContext ctx = ainf_ctx(3, 8);
  std::vector<OrdinalT> window = ctx.all_limits();
  int n_max = 6;
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    Witness phi = witness_random(ctx, window, n_max, TargetMode::SingleKq, rng);
    Coloring coloring = extract_coloring(ctx, phi, window, n_max);
    REQUIRE(coloring.support_ok);
    std::map<OrdinalT, int> thresholds;
    for (const OrdinalT& a : window) thresholds[a] = static_cast<int>(rng() % 6);
    std::mt19937_64 fill(rng());
    Uniformizer uni = make_uniformizer(ctx, coloring, thresholds, n_max, true, &fill);
    PsiResult res = reconstruct_psi(ctx, phi, uni, window, n_max, 3);
    CHECK(res.ok);
  }
}

TEST_CASE("a broken uniformizer is localized at its first generator") {
  TrlifajContext ctx = ainf_ctx(2, 8);
  std::vector<OrdinalT> window = ctx.all_limits();
  int n_max = 5;
  std::mt19937_64 rng(7);
  Witness phi = witness_random(ctx, window, n_max, TargetMode::SingleKq, rng);
  Coloring coloring = extract_coloring(ctx, phi, window, n_max);
  std::map<OrdinalT, int> thresholds{{OrdinalT{1, 0}, 1}, {OrdinalT{2, 0}, 2}};
  Uniformizer uni = make_uniformizer(ctx, coloring, thresholds, n_max, true, nullptr);

  // Corrupt the value at zeta^{w*2}_4 (above every threshold).
  OrdinalT alpha{2, 0};
  OrdinalT point = ctx.ladder.zeta(alpha, 4);
  DSElement corrupted =
      uni.f.at(point) + DSElement::unit(ctx.quiver, Q, single_kq_slot(), ctx.gen_vertex(4));
  uni.f.insert_or_assign(point, corrupted);

  PsiResult res = reconstruct_psi(ctx, phi, uni, window, n_max, 3);
  CHECK(!res.ok);
  REQUIRE(res.first_violation);
  CHECK(res.first_violation->alpha == alpha);
  CHECK(res.first_violation->n == 4);
}

TEST_CASE("circular flavor: witness, coloring, reconstruction") {
  TrlifajContext ctx = circ_ctx(3, 3, 8);
  std::vector<OrdinalT> window = ctx.all_limits();
  int n_max = 6;
  std::mt19937_64 rng(3030);
  for (int trial = 0; trial < 5; ++trial) {
    Witness phi = witness_random(ctx, window, n_max, TargetMode::SingleKq, rng);
    Coloring coloring = extract_coloring(ctx, phi, window, n_max);
    REQUIRE(coloring.support_ok);
    std::map<OrdinalT, int> thresholds;
    for (const OrdinalT& a : window) thresholds[a] = static_cast<int>(rng() % 5);
    std::mt19937_64 fill(rng());
    Uniformizer uni = make_uniformizer(ctx, coloring, thresholds, n_max, true, &fill);
    PsiResult res = reconstruct_psi(ctx, phi, uni, window, n_max, 6);
    CHECK(res.ok);
  }
  // Telescope in the circular flavor.
  OrdinalT alpha{2, 0};
  for (int n : {0, 2, 4}) {
    std::vector<DSElement> zvals(static_cast<std::size_t>(n) + 1, DSElement(ctx.quiver, Q));
    TelescopeReport rep =
        claim22_telescope(ctx, alpha, n, TelescopeInput(zvals, DSElement(ctx.quiver, Q)));
    CHECK(rep.identity_ok);
    // Lengths scale with the cycle size.
    CHECK(rep.alpha_slot_max_len == static_cast<std::size_t>(3 * n));
  }
}

TEST_CASE("shared ladder points force threshold repair") {
  TrlifajContext ctx = ainf_ctx(3, 8);
  std::vector<OrdinalT> window = ctx.all_limits();
  int n_max = 5;
  std::mt19937_64 rng(61);
  // Random witnesses disagree at the shared rung zeta^alpha_0 = 1 with
  // probability near one; threshold zero everywhere is then infeasible.
  Witness phi = witness_random(ctx, window, n_max, TargetMode::SingleKq, rng);
  Coloring coloring = extract_coloring(ctx, phi, window, n_max);
  std::map<OrdinalT, int> zeros;
  for (const OrdinalT& a : window) zeros[a] = 0;
  Uniformizer uni = make_uniformizer(ctx, coloring, zeros, n_max, true, nullptr);
  PsiResult res = reconstruct_psi(ctx, phi, uni, window, n_max, 3);
  CHECK(res.ok);  // repair made the thresholds feasible
}

TEST_CASE("quotient membership survives deep random span elements") {
  // Random combinations of generator products, including long paths and
  // high rungs, must come back as equal to zero in the quotient with the
  // automatically certified bounds; perturbing one slot must not.
  for (Flavor flavor : {Flavor::AInf, Flavor::Circular}) {
    TrlifajContext ctx = flavor == Flavor::AInf ? ainf_ctx(3, 10) : circ_ctx(3, 3, 10);
    std::vector<OrdinalT> window = ctx.all_limits();
    std::mt19937_64 rng(flavor == Flavor::AInf ? 505 : 606);
    auto fam = i_span_basis(ctx, window, 6, flavor == Flavor::AInf ? 5 : 7);
    for (int trial = 0; trial < 4; ++trial) {
      DSElement combo(ctx.quiver, Q);
      for (int pick = 0; pick < 4; ++pick) {
        const SpanElem& e = fam[rng() % fam.size()];
        combo = combo + e.value.scalar_mul(testutil::rand_scalar(Q, rng));
      }
      CHECK(quotient_equal(ctx, combo, DSElement(ctx.quiver, Q), window));
      // Perturb a fresh successor slot: no longer in the span.
      DSElement off = combo + DSElement::unit(ctx.quiver, Q,
                                              SlotKey{OrdinalT{0, 9}, -1},
                                              ctx.gen_vertex(0));
      CHECK(!quotient_equal(ctx, off, DSElement(ctx.quiver, Q), window));
    }
  }
}
