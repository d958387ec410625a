#include "commands.hpp"

#include <json.hpp>

#include <sstream>

namespace quiverhom {

TrlifajContext scenario_context(const Scenario& sc, const Field& f) {
  Quiver q = sc.flavor == Flavor::Circular
                 ? Quiver::circular(sc.circular_size)
                 : (sc.branch ? Quiver::a_infinity_branch() : Quiver::a_infinity());
  LadderSystem ladder = LadderSystem::default_ladder(Truncation{sc.kmax, sc.depth});
  for (const auto& [k, n, value] : sc.zeta_overrides) ladder = ladder.with_override(k, n, value);
  return TrlifajContext(std::move(q), f, sc.flavor, std::move(ladder));
}

std::vector<OrdinalT> scenario_window(const Scenario& sc) {
  std::vector<OrdinalT> out;
  if (sc.window.empty()) {
    for (int k = 1; k <= sc.kmax; ++k) out.push_back(OrdinalT{k, 0});
  } else {
    for (int k : sc.window) {
      if (k < 1 || k > sc.kmax) throw DomainError("window block outside the truncation");
      out.push_back(OrdinalT{k, 0});
    }
  }
  return out;
}

Witness scenario_witness(const Scenario& sc, const TrlifajContext& ctx,
                         const std::vector<OrdinalT>& window, int n_max) {
  switch (sc.phi_kind) {
    case Scenario::PhiKind::Witness:
      return witness_phi(ctx, window, n_max);
    case Scenario::PhiKind::Zero:
      return witness_zero(ctx, window, n_max);
    case Scenario::PhiKind::Random: {
      std::mt19937_64 rng(sc.seed);
      return witness_random(ctx, window, n_max, sc.mode, rng);
    }
  }
  throw DomainError("unknown phi kind");
}

namespace {

std::string scenario_header(const char* cmd, const Scenario& sc, const Field& f) {
  std::ostringstream os;
  os << cmd << " flavor="
     << (sc.flavor == Flavor::Circular
             ? "circular " + std::to_string(sc.circular_size)
             : (sc.branch ? std::string("ainf-branch") : std::string("ainf")))
     << " field=" << f.str() << " kmax=" << sc.kmax << " depth=" << sc.depth << " phi=";
  switch (sc.phi_kind) {
    case Scenario::PhiKind::Witness:
      os << "witness";
      break;
    case Scenario::PhiKind::Zero:
      os << "zero";
      break;
    case Scenario::PhiKind::Random:
      os << "random seed=" << sc.seed;
      break;
  }
  return os.str();
}

std::size_t default_len_max(const Scenario& sc) {
  if (sc.len_max) return *sc.len_max;
  return sc.flavor == Flavor::Circular ? 2 * static_cast<std::size_t>(sc.circular_size) : 5;
}

std::map<OrdinalT, int> scenario_thresholds(const Scenario& sc) {
  std::map<OrdinalT, int> out;
  for (int k = 1; k <= sc.kmax; ++k)
    out[OrdinalT{k, 0}] =
        sc.thresholds.empty() ? 0 : sc.thresholds[static_cast<std::size_t>(k - 1)];
  return out;
}

}  // namespace

CommandOutcome run_verify_phi(const Scenario& sc, const Field& f, bool json) {
  TrlifajContext ctx = scenario_context(sc, f);
  std::vector<OrdinalT> window = scenario_window(sc);
  int n_max = sc.n_max.value_or(sc.depth - 1);
  std::size_t len_max = default_len_max(sc);
  Witness phi = scenario_witness(sc, ctx, window, n_max);

  bool ok = true;
  std::ostringstream os;
  nlohmann::json j;
  os << scenario_header("trlifaj-verify-phi", sc, f) << " nmax=" << n_max
     << " lenmax=" << len_max << "\n";
  j["command"] = "trlifaj-verify-phi";
  j["field"] = f.str();
  j["nmax"] = n_max;
  j["lenmax"] = len_max;

  std::vector<DSElement> gens;
  for (const OrdinalT& alpha : window)
    for (int n = 0; n <= n_max; ++n) gens.push_back(gen_x(ctx, alpha, n));
  std::size_t grank = ds_family_rank(gens);
  bool gen_ok = grank == gens.size();
  ok = ok && gen_ok;
  os << "check=generator-independence rank=" << grank << " count=" << gens.size()
     << " result=" << (gen_ok ? "pass" : "fail") << "\n";
  j["generator_independence"] = {{"rank", grank}, {"count", gens.size()}, {"pass", gen_ok}};

  std::vector<SpanElem> span = i_span_basis(ctx, window, n_max, len_max);
  std::vector<DSElement> span_values;
  for (const SpanElem& e : span) span_values.push_back(e.value);
  std::size_t srank = ds_family_rank(span_values);
  bool span_ok = srank == span.size();
  ok = ok && span_ok;
  os << "check=span-independence rank=" << srank << " count=" << span.size()
     << " result=" << (span_ok ? "pass" : "fail") << "\n";
  j["span_independence"] = {{"rank", srank}, {"count", span.size()}, {"pass", span_ok}};

  Coloring coloring = extract_coloring(ctx, phi, window, n_max);
  ok = ok && coloring.support_ok;
  os << "check=coloring-support result=" << (coloring.support_ok ? "pass" : "fail") << "\n";
  j["coloring_support"] = coloring.support_ok;

  // Telescope spot checks at the largest limit.
  std::mt19937_64 rng(sc.seed + 17);
  const OrdinalT alpha = window.back();
  auto jtel = nlohmann::json::array();
  for (int n : {0, 1, std::min(3, n_max), std::min(n_max, sc.depth - 2)}) {
    if (n + 1 > sc.depth - 1) continue;
    std::vector<DSElement> zvals;
    for (int i = 0; i <= n; ++i) {
      DSElement z(ctx.quiver, ctx.field);
      if (sc.phi_kind == Scenario::PhiKind::Random) {
        SlotKey col{OrdinalT{static_cast<int>(rng() % alpha.k),
                             1 + static_cast<int>(rng() % sc.depth)},
                    -1};
        z.set_slot(col, random_value_ending_at(ctx, ctx.gen_vertex(i), 2, rng));
      }
      zvals.push_back(std::move(z));
    }
    DSElement tail(ctx.quiver, ctx.field);
    if (sc.phi_kind == Scenario::PhiKind::Random)
      tail.set_slot(single_kq_slot(),
                    random_value_ending_at(ctx, ctx.gen_vertex(n + 1), 2, rng));
    TelescopeReport rep = claim22_telescope(ctx, alpha, n, TelescopeInput(zvals, tail));
    bool tel_ok = rep.identity_ok && rep.forces_length_ge_n;
    ok = ok && tel_ok;
    os << "check=telescope n=" << n << " identity=" << (rep.identity_ok ? "pass" : "fail")
       << " alpha-slot-max-len=" << rep.alpha_slot_max_len
       << " result=" << (tel_ok ? "pass" : "fail") << "\n";
    jtel.push_back({{"n", n},
                    {"identity", rep.identity_ok},
                    {"alpha_slot_max_len", rep.alpha_slot_max_len},
                    {"pass", tel_ok}});
  }
  j["telescopes"] = jtel;

  os << "result=" << (ok ? "PASS" : "FAIL") << "\n";
  j["result"] = ok ? "PASS" : "FAIL";
  return CommandOutcome{json ? j.dump(2) + "\n" : os.str(), ok};
}

CommandOutcome run_uniformize(const Scenario& sc, const Field& f, bool json) {
  TrlifajContext ctx = scenario_context(sc, f);
  std::vector<OrdinalT> window = scenario_window(sc);
  int n_max = sc.n_max.value_or(sc.depth - 1);
  std::size_t len_max = default_len_max(sc);
  Witness phi = scenario_witness(sc, ctx, window, n_max);

  std::ostringstream os;
  nlohmann::json j;
  os << scenario_header("trlifaj-uniformize", sc, f) << " nmax=" << n_max
     << " lenmax=" << len_max << "\n";
  j["command"] = "trlifaj-uniformize";
  j["field"] = f.str();

  bool ok = true;
  Coloring coloring = extract_coloring(ctx, phi, window, n_max);
  ok = ok && coloring.support_ok;
  os << "check=coloring-support result=" << (coloring.support_ok ? "pass" : "fail") << "\n";
  j["coloring_support"] = coloring.support_ok;

  std::mt19937_64 fill_rng(sc.seed + 101);
  Uniformizer uni =
      make_uniformizer(ctx, coloring, scenario_thresholds(sc), n_max, true, &fill_rng);
  os << "thresholds";
  auto jthr = nlohmann::json::object();
  for (const auto& [alpha, nt] : uni.thresholds) {
    os << " " << alpha.str() << "=" << nt;
    jthr[alpha.str()] = nt;
  }
  os << "\n";
  j["thresholds"] = jthr;

  if (sc.break_point) {
    auto [k, n] = *sc.break_point;
    OrdinalT alpha{k, 0};
    if (!uni.thresholds.count(alpha))
      throw DomainError("break point names a limit outside the window");
    if (n < uni.thresholds.at(alpha))
      throw DomainError("break point below the threshold has no effect");
    OrdinalT point = ctx.ladder.zeta(alpha, n);
    DSElement corrupted = uni.f.at(point) + DSElement::unit(ctx.quiver, ctx.field,
                                                            single_kq_slot(), ctx.gen_vertex(n));
    uni.f.insert_or_assign(point, corrupted);
    os << "broken-point " << point.str() << "\n";
    j["broken_point"] = point.str();
  }

  PsiResult res = reconstruct_psi(ctx, phi, uni, window, n_max, len_max);
  ok = ok && res.ok;
  if (res.ok) {
    os << "check=reconstruction result=pass\n";
  } else if (res.first_violation) {
    os << "check=reconstruction result=fail first-violated alpha="
       << res.first_violation->alpha.str() << " n=" << res.first_violation->n
       << " path=" << format_path(ctx.quiver, res.first_violation->p) << "\n";
    j["first_violated"] = {{"alpha", res.first_violation->alpha.str()},
                           {"n", res.first_violation->n},
                           {"path", format_path(ctx.quiver, res.first_violation->p)}};
  }
  j["reconstruction"] = res.ok;
  os << "result=" << (ok ? "PASS" : "FAIL") << "\n";
  j["result"] = ok ? "PASS" : "FAIL";
  return CommandOutcome{json ? j.dump(2) + "\n" : os.str(), ok};
}

CommandOutcome run_prop16(std::size_t n_top, const Field& f, bool json) {
  Quiver trunc = closure(Quiver::a_infinity(), {static_cast<Vertex>(n_top) + 2});
  std::ostringstream os;
  nlohmann::json j;
  os << "prop16 field=" << f.str() << " n-top=" << n_top
     << " truncation=" << trunc.vertices().size() << "\n";
  j["command"] = "prop16";
  j["field"] = f.str();
  j["n_top"] = n_top;
  auto jrows = nlohmann::json::array();
  bool ok = true;
  for (std::size_t n = 0; n <= n_top; ++n) {
    Prop16Report rep = prop16_forced_coset(n, trunc, n + 2, f);
    bool row_ok = rep.phi_identities_ok && rep.intersection_empty;
    ok = ok && row_ok;
    os << "n=" << n << " representative=" << format_element(rep.representative)
       << " ideal-gen=" << format_path(trunc, rep.ideal_generator)
       << " phi-identities=" << (rep.phi_identities_ok ? "pass" : "fail") << "("
       << rep.phi_identities_checked << ")"
       << " intersection-empty=" << (rep.intersection_empty ? "true" : "false") << "\n";
    jrows.push_back({{"n", n},
                     {"representative", format_element(rep.representative)},
                     {"ideal_gen", format_path(trunc, rep.ideal_generator)},
                     {"phi_identities_ok", rep.phi_identities_ok},
                     {"phi_identities_checked", rep.phi_identities_checked},
                     {"intersection_empty", rep.intersection_empty},
                     {"reason", rep.emptiness_reason}});
  }
  j["rows"] = jrows;
  os << "result=" << (ok ? "PASS" : "FAIL") << "\n";
  j["result"] = ok ? "PASS" : "FAIL";
  return CommandOutcome{json ? j.dump(2) + "\n" : os.str(), ok};
}

}  // namespace quiverhom
