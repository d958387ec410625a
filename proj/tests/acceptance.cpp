// acceptance.cpp -- the acceptance suite: one pass/fail line per criterion,
// nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "test_util.hpp"

using namespace quiverhom;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::fp(5);

int g_failures = 0;

struct Criterion {
  int number;
  std::string name;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  Criterion(int n, std::string nm) : number(n), name(std::move(nm)) {}

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("%s criterion %d (%s) [%lld ms]%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), static_cast<long long>(ms), ok ? "" : ": ",
                ok ? "" : detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

std::map<Vertex, std::int64_t> dim_vector(const Representation& x) {
  std::map<Vertex, std::int64_t> d;
  for (Vertex v : x.quiver().vertices()) d[v] = static_cast<std::int64_t>(x.dim(v));
  return d;
}

// ---- criteria 5-6 engines, shared by the circular and branch reruns ----

// Criterion 5 core: generator independence, witness extension
// consistency, and the telescope length force.
void run_claim22_block(Criterion& c, const TrlifajContext& ctx, int n_max,
                       std::size_t span_len_max, int telescope_samples) {
  std::vector<OrdinalT> window = ctx.all_limits();

  std::vector<DSElement> gens;
  for (const OrdinalT& alpha : window)
    for (int n = 0; n <= n_max; ++n) gens.push_back(gen_x(ctx, alpha, n));
  c.require(ds_family_rank(gens) == gens.size(), "generator family is linearly dependent");

  auto fam = i_span_basis(ctx, window, n_max, span_len_max);
  std::vector<DSElement> values;
  for (const auto& e : fam) values.push_back(e.value);
  c.require(ds_family_rank(values) == values.size(),
            "witness extension is inconsistent (span family dependent)");

  const OrdinalT alpha = window.back();
  std::mt19937_64 rng(20260809);
  for (int n = 0; n <= n_max; ++n) {
    for (int s = 0; s < telescope_samples; ++s) {
      std::vector<DSElement> zvals;
      for (int i = 0; i <= n; ++i) {
        DSElement z(ctx.quiver, ctx.field);
        if (rng() % 4 != 0) {
          SlotKey col{OrdinalT{static_cast<int>(rng() % alpha.k),
                               1 + static_cast<int>(rng() % ctx.trunc().depth)},
                      -1};
          z.set_slot(col, random_value_ending_at(ctx, ctx.gen_vertex(i), 2, rng));
        }
        zvals.push_back(std::move(z));
      }
      DSElement tail(ctx.quiver, ctx.field);
      if (rng() % 2 == 0)
        tail.set_slot(single_kq_slot(),
                      random_value_ending_at(ctx, ctx.gen_vertex(n + 1), 2, rng));
      TelescopeReport rep = claim22_telescope(ctx, alpha, n, TelescopeInput(zvals, tail));
      c.require(rep.identity_ok, "telescope identity failed at n=" + std::to_string(n));
      c.require(rep.forces_length_ge_n,
                "alpha-slot length not forced at n=" + std::to_string(n));
      if (!c.ok) return;
    }
  }
}

// Criterion 6 core: random scenarios, reconstruction, support laws.
void run_uniformization_block(Criterion& c, const TrlifajContext& ctx, int scenarios,
                              int n_max, std::size_t len_max, std::uint64_t seed_base) {
  std::vector<OrdinalT> window = ctx.all_limits();
  for (int s = 0; s < scenarios; ++s) {
    std::mt19937_64 rng(seed_base + static_cast<std::uint64_t>(s));
    Witness phi = witness_random(ctx, window, n_max, TargetMode::SingleKq, rng);
    Coloring coloring = extract_coloring(ctx, phi, window, n_max);
    c.require(coloring.support_ok, "coloring support law failed");
    for (const auto& [key, value] : coloring.values) {
      Vertex v = ctx.gen_vertex(key.second);
      c.require(value * AlgebraElement::stationary(ctx.quiver, ctx.field, v) == value,
                "d e_n = d failed");
      c.require((value * AlgebraElement::stationary(ctx.quiver, ctx.field, v + 1)).is_zero(),
                "d e_m = 0 failed");
    }
    std::map<OrdinalT, int> thresholds;
    for (const OrdinalT& a : window) thresholds[a] = static_cast<int>(rng() % 6);
    std::mt19937_64 fill(rng());
    Uniformizer uni = make_uniformizer(ctx, coloring, thresholds, n_max, true, &fill);
    PsiResult res = reconstruct_psi(ctx, phi, uni, window, n_max, len_max);
    c.require(res.ok, "reconstruction failed in scenario " + std::to_string(s));
    if (!c.ok) return;
  }
}

void criterion_1() {
  Criterion c(1, "projectivity equivalence on the exhaustive corpus");
  for (const std::string& name : corpus_quiver_names()) {
    for (const Field& f : {Q, F5}) {
      for (const auto& inst : corpus_instances(name, f, 500, 2)) {
        Cor13Verdict v = check_cor_1_3(inst.rep);
        c.require(v.agree(), name + "/" + f.str() + "/" + inst.id + " disagrees");
        if (inst.id[0] == 'p')
          c.require(v.ext_vanishes && v.structural,
                    name + "/" + inst.id + " projective sum not detected");
        if (!c.ok) return;
      }
    }
  }
}

void criterion_2() {
  Criterion c(2, "Euler identity hom - ext = <d,e>");
  for (const std::string& name : corpus_quiver_names()) {
    for (const Field& f : {Q, F5}) {
      std::mt19937_64 rng(name.size() * 1000 + f.characteristic());
      for (int i = 0; i < 100; ++i) {
        Quiver q = corpus_quiver(name);
        Representation x = random_representation(q, f, 2, rng);
        Representation y = random_representation(q, f, 2, rng);
        std::int64_t hom = static_cast<std::int64_t>(hom_space_dim(x, y));
        std::int64_t ext = static_cast<std::int64_t>(ext1_dim(x, y));
        c.require(hom - ext == euler_form(dim_vector(x), dim_vector(y), q),
                  "Euler identity failed on " + name + "/" + f.str());
        if (!c.ok) return;
      }
    }
  }
}

void criterion_3() {
  Criterion c(3, "restriction to closed subquivers preserves vanishing; S T = id");
  for (const std::string& name : corpus_quiver_names()) {
    Quiver q = corpus_quiver(name);
    Quiver p = closure(q, corpus_closed_seed(name));
    for (const Field& f : {Q, F5}) {
      for (const auto& inst : corpus_instances(name, f, 120, 2)) {
        if (ext1_against_algebra(inst.rep) != 0) continue;
        c.require(ext1_against_algebra(restrict_rep(inst.rep, p)) == 0,
                  name + "/" + inst.id + ": restriction has nonzero ext");
        if (!c.ok) return;
      }
      std::mt19937_64 rng(500 + f.characteristic());
      for (int i = 0; i < 60; ++i) {
        Representation z = random_representation(p, f, 2, rng);
        c.require(restrict_rep(extend_T(z, q), p) == z, name + ": S T != id");
        if (!c.ok) return;
      }
    }
  }
}

void criterion_4() {
  Criterion c(4, "forced-coset identities and emptiness for N = 0..25");
  Quiver trunc = closure(Quiver::a_infinity(), {27});
  for (std::size_t n = 0; n <= 25; ++n) {
    Prop16Report rep = prop16_forced_coset(n, trunc, n + 2, Q);
    c.require(rep.phi_identities_ok, "witness identity failed at N=" + std::to_string(n));
    c.require(rep.intersection_empty, "intersection nonempty at N=" + std::to_string(n));
    if (!c.ok) return;
  }
}

void criterion_5() {
  Criterion c(5, "generator independence and telescope force (kmax 3, depth 20)");
  TrlifajContext ctx(Quiver::a_infinity(), Q, Flavor::AInf,
                     LadderSystem::default_ladder(Truncation{3, 20}));
  run_claim22_block(c, ctx, 19, 4, 100);
}

void criterion_6() {
  Criterion c(6, "uniformizer reconstruction over 50 random scenarios");
  TrlifajContext ctx(Quiver::a_infinity(), Q, Flavor::AInf,
                     LadderSystem::default_ladder(Truncation{3, 20}));
  run_uniformization_block(c, ctx, 50, 19, 3, 0xC0FFEE);
}

void criterion_7() {
  Criterion c(7, "circular flavor rerun and cycle-power arithmetic");
  Quiver c3 = Quiver::circular(3);
  Path once = power_cycle(c3, 1);
  Path acc{Vertex{0}};
  for (std::size_t n = 1; n <= 10; ++n) {
    acc = *compose(acc, once);
    c.require(power_cycle(c3, n) == acc, "cycle power mismatch at n=" + std::to_string(n));
  }
  TrlifajContext ctx(c3, Q, Flavor::Circular,
                     LadderSystem::default_ladder(Truncation{3, 20}));
  run_claim22_block(c, ctx, 19, 6, 100);
  run_uniformization_block(c, ctx, 50, 19, 6, 0xBEEF);
}

void criterion_8() {
  Criterion c(8, "decorated-branch rerun with countable path prefixes");
  Quiver q = Quiver::a_infinity_branch();
  // Bounded prefixes of the path set into the spine head are finite and
  // agree with the brute-force enumerator.
  for (std::size_t bound = 0; bound <= 6; ++bound) {
    auto paths = paths_into(q, 0, bound);
    std::vector<Arrow> pool;
    for (Vertex v = -2; v <= static_cast<Vertex>(bound) + 1; ++v) {
      auto into = q.arrows_into(v);
      pool.insert(pool.end(), into.begin(), into.end());
    }
    auto brute = testutil::brute_paths_into(q, pool, 0, bound);
    c.require(paths == brute, "path prefix mismatch at bound " + std::to_string(bound));
    std::size_t expected = bound + 1 + (bound >= 1 ? 1 : 0) + (bound >= 2 ? 1 : 0);
    c.require(paths.size() == expected, "path prefix count at bound " + std::to_string(bound));
  }
  TrlifajContext ctx(q, Q, Flavor::AInf, LadderSystem::default_ladder(Truncation{3, 20}));
  run_claim22_block(c, ctx, 19, 4, 100);
  run_uniformization_block(c, ctx, 50, 19, 3, 0xADD);
}

void criterion_9() {
  Criterion c(9, "byte-identical corpus reports");
  for (int json = 0; json <= 1; ++json) {
    CorpusRunResult r1 = corpus_run("a3", Q, 40, 2, 20, json != 0);
    CorpusRunResult r2 = corpus_run("a3", Q, 40, 2, 20, json != 0);
    c.require(r1.report == r2.report, json ? "json reports differ" : "text reports differ");
    c.require(r1.all_ok, "corpus run failed");
  }
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
