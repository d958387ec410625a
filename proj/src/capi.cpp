// capi.cpp -- the extern-C surface of the shared library; translates
// between opaque handles and the C++ core, mapping exceptions to statuses.
#include "quiverhom.h"

#include <cstring>
#include <string>

#include "commands.hpp"

using namespace quiverhom;

struct qh_quiver {
  Quiver q;
};
struct qh_rep {
  Representation r;
};
struct qh_scenario {
  Scenario sc;
};

namespace {

thread_local std::string g_last_error;

qh_status fail(qh_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs the body, translating exceptions into statuses.
template <typename Fn>
qh_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(QH_ERR_PARSE, e.what());
  } catch (const BoundsError& e) {
    return fail(QH_ERR_BOUNDS, e.what());
  } catch (const Error& e) {
    return fail(QH_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(QH_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Field field_of(uint32_t prime) { return prime == 0 ? Field::rationals() : Field::fp(prime); }

qh_status need(bool cond, const char* what) {
  return cond ? QH_OK : fail(QH_ERR_ARG, what);
}

std::vector<Vertex> resolve_seeds(const Quiver& q, const char* const* names, size_t n) {
  std::vector<Vertex> out;
  for (size_t i = 0; i < n; ++i) {
    if (!names[i]) throw DomainError("null seed name");
    auto v = q.vertex_by_name(names[i]);
    if (!v) throw DomainError(std::string("unknown vertex '") + names[i] + "'");
    out.push_back(*v);
  }
  return out;
}

}  // namespace

extern "C" {

const char* qh_status_str(qh_status status) {
  switch (status) {
    case QH_OK:
      return "ok";
    case QH_ERR_PARSE:
      return "parse error";
    case QH_ERR_DOMAIN:
      return "domain error";
    case QH_ERR_BOUNDS:
      return "bounds error";
    case QH_ERR_ARG:
      return "bad argument";
    case QH_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* qh_last_error(void) { return g_last_error.c_str(); }

void qh_string_free(char* s) { delete[] s; }

qh_status qh_quiver_parse(const char* text, qh_quiver** out) {
  if (auto st = need(text && out, "qh_quiver_parse: null argument")) return st;
  return guarded([&] {
    *out = new qh_quiver{parse_quiver(text)};
    return QH_OK;
  });
}

void qh_quiver_free(qh_quiver* q) { delete q; }

qh_status qh_quiver_serialize(const qh_quiver* q, char** out) {
  if (auto st = need(q && out, "qh_quiver_serialize: null argument")) return st;
  return guarded([&] {
    *out = dup_string(quiver_to_text(q->q));
    return QH_OK;
  });
}

qh_status qh_quiver_is_acyclic(const qh_quiver* q, int* out) {
  if (auto st = need(q && out, "qh_quiver_is_acyclic: null argument")) return st;
  return guarded([&] {
    *out = is_acyclic(q->q) ? 1 : 0;
    return QH_OK;
  });
}

qh_status qh_quiver_closure(const qh_quiver* q, const char* const* seed_names,
                            size_t n_seeds, qh_quiver** out) {
  if (auto st = need(q && out && (seed_names || n_seeds == 0), "qh_quiver_closure: null argument")) return st;
  return guarded([&] {
    *out = new qh_quiver{closure(q->q, resolve_seeds(q->q, seed_names, n_seeds))};
    return QH_OK;
  });
}

qh_status qh_paths_into(const qh_quiver* q, const char* vertex, long max_len, char** out) {
  if (auto st = need(q && vertex && out, "qh_paths_into: null argument")) return st;
  return guarded([&] {
    auto v = q->q.vertex_by_name(vertex);
    if (!v) throw DomainError(std::string("unknown vertex '") + vertex + "'");
    std::optional<std::size_t> bound;
    if (max_len >= 0) bound = static_cast<std::size_t>(max_len);
    std::string text;
    for (const Path& p : paths_into(q->q, *v, bound)) text += format_path(q->q, p) + "\n";
    *out = dup_string(text);
    return QH_OK;
  });
}

qh_status qh_rep_parse(const qh_quiver* q, const char* text, uint32_t field_prime,
                       qh_rep** out) {
  if (auto st = need(q && text && out, "qh_rep_parse: null argument")) return st;
  return guarded([&] {
    *out = new qh_rep{parse_rep(text, q->q, field_of(field_prime))};
    return QH_OK;
  });
}

void qh_rep_free(qh_rep* r) { delete r; }

qh_status qh_rep_serialize(const qh_rep* r, char** out) {
  if (auto st = need(r && out, "qh_rep_serialize: null argument")) return st;
  return guarded([&] {
    *out = dup_string(rep_to_text(r->r));
    return QH_OK;
  });
}

qh_status qh_rep_restrict(const qh_rep* r, const char* const* seed_names, size_t n_seeds,
                          qh_rep** rep_out, qh_quiver** sub_out) {
  if (auto st = need(r && rep_out && (seed_names || n_seeds == 0), "qh_rep_restrict: null argument")) return st;
  return guarded([&] {
    Quiver sub = closure(r->r.quiver(), resolve_seeds(r->r.quiver(), seed_names, n_seeds));
    *rep_out = new qh_rep{restrict_rep(r->r, sub)};
    if (sub_out) *sub_out = new qh_quiver{sub};
    return QH_OK;
  });
}

qh_status qh_hom_dim(const qh_rep* x, const qh_rep* y, uint64_t* out) {
  if (auto st = need(x && y && out, "qh_hom_dim: null argument")) return st;
  return guarded([&] {
    *out = hom_space_dim(x->r, y->r);
    return QH_OK;
  });
}

qh_status qh_ext1_dim(const qh_rep* x, const qh_rep* y, uint64_t* out) {
  if (auto st = need(x && y && out, "qh_ext1_dim: null argument")) return st;
  return guarded([&] {
    *out = ext1_dim(x->r, y->r);
    return QH_OK;
  });
}

qh_status qh_ext1_against_algebra(const qh_rep* x, uint64_t* out) {
  if (auto st = need(x && out, "qh_ext1_against_algebra: null argument")) return st;
  return guarded([&] {
    *out = ext1_against_algebra(x->r);
    return QH_OK;
  });
}

qh_status qh_is_projective(const qh_rep* x, int* out) {
  if (auto st = need(x && out, "qh_is_projective: null argument")) return st;
  return guarded([&] {
    *out = is_projective_structural(x->r) ? 1 : 0;
    return QH_OK;
  });
}

qh_status qh_check_cor13(const qh_rep* x, int* ext_vanishes, int* structural) {
  if (auto st = need(x && ext_vanishes && structural, "qh_check_cor13: null argument")) return st;
  return guarded([&] {
    Cor13Verdict v = check_cor_1_3(x->r);
    *ext_vanishes = v.ext_vanishes ? 1 : 0;
    *structural = v.structural ? 1 : 0;
    return QH_OK;
  });
}

qh_status qh_euler_form(const qh_quiver* q, const int64_t* d, size_t d_len,
                        const int64_t* e, size_t e_len, int64_t* out) {
  if (auto st = need(q && d && e && out, "qh_euler_form: null argument")) return st;
  return guarded([&] {
    const auto& verts = q->q.vertices();
    if (d_len != verts.size() || e_len != verts.size())
      throw DomainError("dimension vector length must match the vertex count");
    std::map<Vertex, std::int64_t> dm, em;
    for (size_t i = 0; i < verts.size(); ++i) {
      dm[verts[i]] = d[i];
      em[verts[i]] = e[i];
    }
    *out = euler_form(dm, em, q->q);
    return QH_OK;
  });
}

qh_status qh_prop16(uint32_t n_top, uint32_t field_prime, int json, char** report,
                    int* all_ok) {
  if (auto st = need(report && all_ok, "qh_prop16: null argument")) return st;
  return guarded([&] {
    CommandOutcome outcome = run_prop16(n_top, field_of(field_prime), json != 0);
    *report = dup_string(outcome.report);
    *all_ok = outcome.checks_ok ? 1 : 0;
    return QH_OK;
  });
}

qh_status qh_scenario_parse(const char* text, qh_scenario** out) {
  if (auto st = need(text && out, "qh_scenario_parse: null argument")) return st;
  return guarded([&] {
    *out = new qh_scenario{parse_scenario(text)};
    return QH_OK;
  });
}

void qh_scenario_free(qh_scenario* sc) { delete sc; }

qh_status qh_scenario_verify_phi(const qh_scenario* sc, uint32_t field_prime, int json,
                                 char** report, int* all_ok) {
  if (auto st = need(sc && report && all_ok, "qh_scenario_verify_phi: null argument")) return st;
  return guarded([&] {
    CommandOutcome outcome = run_verify_phi(sc->sc, field_of(field_prime), json != 0);
    *report = dup_string(outcome.report);
    *all_ok = outcome.checks_ok ? 1 : 0;
    return QH_OK;
  });
}

qh_status qh_scenario_uniformize(const qh_scenario* sc, uint32_t field_prime, int json,
                                 char** report, int* all_ok) {
  if (auto st = need(sc && report && all_ok, "qh_scenario_uniformize: null argument")) return st;
  return guarded([&] {
    CommandOutcome outcome = run_uniformize(sc->sc, field_of(field_prime), json != 0);
    *report = dup_string(outcome.report);
    *all_ok = outcome.checks_ok ? 1 : 0;
    return QH_OK;
  });
}

qh_status qh_corpus_run(const char* quiver_name, uint32_t field_prime,
                        uint32_t random_count, uint32_t dim_max, uint32_t euler_pairs,
                        int json, char** report, int* all_ok) {
  if (auto st = need(quiver_name && report && all_ok, "qh_corpus_run: null argument")) return st;
  return guarded([&] {
    CorpusRunResult result =
        corpus_run(quiver_name, field_of(field_prime), random_count, dim_max, euler_pairs,
                   json != 0);
    *report = dup_string(result.report);
    *all_ok = result.all_ok ? 1 : 0;
    return QH_OK;
  });
}

}  // extern "C"
