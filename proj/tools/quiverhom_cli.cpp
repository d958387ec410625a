// quiverhom_cli.cpp -- command-line front end; everything goes through the
// shared library's C API.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 input/bounds error.
#include <quiverhom.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitInputError);
}

[[noreturn]] void die_status(qh_status status) {
  std::cerr << "error (" << qh_status_str(status) << "): " << qh_last_error() << "\n";
  std::exit(kExitInputError);
}

void check(qh_status status) {
  if (status != QH_OK) die_status(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// --field q | fp <p> | fp<p>; falls back to QUIVERHOM_FIELD, then to q.
std::uint32_t parse_field_flag(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
  if (joined.empty()) {
    const char* env = std::getenv("QUIVERHOM_FIELD");
    joined = env ? env : "q";
  }
  std::string s;
  for (char c : joined)
    if (c != ' ') s += c;
  if (s == "q" || s == "Q" || s.empty()) return 0;
  if (s.rfind("fp", 0) == 0) {
    try {
      long p = std::stol(s.substr(2));
      if (p <= 0) throw std::invalid_argument(s);
      return static_cast<std::uint32_t>(p);
    } catch (...) {
      die("bad --field value '" + joined + "'");
    }
  }
  die("bad --field value '" + joined + "' (expected q or fp <p>)");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct QuiverHandle {
  qh_quiver* q = nullptr;
  ~QuiverHandle() { qh_quiver_free(q); }
};
struct RepHandle {
  qh_rep* r = nullptr;
  ~RepHandle() { qh_rep_free(r); }
};
struct ScenarioHandle {
  qh_scenario* sc = nullptr;
  ~ScenarioHandle() { qh_scenario_free(sc); }
};
struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { qh_string_free(s); }
};

void load_quiver(const std::string& path, QuiverHandle& q) {
  check(qh_quiver_parse(read_file(path).c_str(), &q.q));
}

void load_rep(const QuiverHandle& q, const std::string& path, std::uint32_t prime,
              RepHandle& r) {
  check(qh_rep_parse(q.q, read_file(path).c_str(), prime, &r.r));
}

std::vector<const char*> c_names(const std::vector<std::string>& names) {
  std::vector<const char*> out;
  for (const auto& n : names) out.push_back(n.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact path-algebra computations over quivers"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();

  std::vector<std::string> field_tokens;
  std::string format = "text";
  app.add_option("--field", field_tokens, "scalar field: q | fp <p>")->expected(1, 2);
  app.add_option("--format", format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string quiver_path, rep_path, rep_y_path, seed_list, d_list, e_list, scenario_path;
  std::string corpus_name = "a3";
  std::uint32_t n_top = 10, count = 500, dim_max = 2, pairs = 200;

  auto* c_ext1 = app.add_subcommand("ext1", "Ext^1 of a representation");
  c_ext1->add_option("--quiver", quiver_path)->required();
  c_ext1->add_option("--rep", rep_path)->required();
  c_ext1->add_option("--rep-y", rep_y_path, "second representation (default: the algebra)");

  auto* c_proj = app.add_subcommand("is-projective", "structural projectivity test");
  c_proj->add_option("--quiver", quiver_path)->required();
  c_proj->add_option("--rep", rep_path)->required();

  auto* c_cor13 = app.add_subcommand("check-cor13", "both projectivity routes must agree");
  c_cor13->add_option("--quiver", quiver_path);
  c_cor13->add_option("--rep", rep_path);
  c_cor13->add_option("--corpus", corpus_name, "bundled corpus quiver (a2 a3 a3alt a4 d4)");
  c_cor13->add_option("--count", count, "random instances in corpus mode");
  c_cor13->add_option("--dims-max", dim_max);

  auto* c_closure = app.add_subcommand("closure", "closed subquiver of a seed set");
  c_closure->add_option("--quiver", quiver_path)->required();
  c_closure->add_option("--seed", seed_list, "comma-separated vertex names")->required();

  auto* c_restrict = app.add_subcommand("restrict", "restrict a representation to a closure");
  c_restrict->add_option("--quiver", quiver_path)->required();
  c_restrict->add_option("--rep", rep_path)->required();
  c_restrict->add_option("--seed", seed_list)->required();

  auto* c_euler = app.add_subcommand("euler", "Euler form of two dimension vectors");
  c_euler->add_option("--quiver", quiver_path)->required();
  c_euler->add_option("--d", d_list, "comma-separated, sorted vertex order")->required();
  c_euler->add_option("--e", e_list)->required();

  auto* c_prop16 = app.add_subcommand("prop16", "forced-coset checks for N = 0..n-top");
  c_prop16->add_option("--n-top", n_top);

  auto* c_vphi = app.add_subcommand("trlifaj-verify-phi", "witness and independence checks");
  c_vphi->add_option("scenario", scenario_path)->required();

  auto* c_unif = app.add_subcommand("trlifaj-uniformize", "uniformizer reconstruction check");
  c_unif->add_option("scenario", scenario_path)->required();

  auto* c_corpus = app.add_subcommand("corpus-run", "batch equivalence and Euler checks");
  c_corpus->add_option("--quiver", corpus_name, "bundled corpus quiver or 'all'");
  c_corpus->add_option("--count", count);
  c_corpus->add_option("--dims-max", dim_max);
  c_corpus->add_option("--pairs", pairs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::uint32_t prime = parse_field_flag(field_tokens);
  int json = format == "json" ? 1 : 0;

  if (c_ext1->parsed()) {
    QuiverHandle q;
    load_quiver(quiver_path, q);
    RepHandle x;
    load_rep(q, rep_path, prime, x);
    std::uint64_t value = 0;
    if (rep_y_path.empty()) {
      check(qh_ext1_against_algebra(x.r, &value));
    } else {
      RepHandle y;
      load_rep(q, rep_y_path, prime, y);
      check(qh_ext1_dim(x.r, y.r, &value));
    }
    std::cout << value << "\n";
    return kExitOk;
  }

  if (c_proj->parsed()) {
    QuiverHandle q;
    load_quiver(quiver_path, q);
    RepHandle x;
    load_rep(q, rep_path, prime, x);
    int projective = 0;
    check(qh_is_projective(x.r, &projective));
    std::cout << (projective ? "true" : "false") << "\n";
    return projective ? kExitOk : kExitCheckFailed;
  }

  if (c_cor13->parsed()) {
    if (!rep_path.empty()) {
      if (quiver_path.empty()) die("check-cor13 --rep needs --quiver");
      QuiverHandle q;
      load_quiver(quiver_path, q);
      RepHandle x;
      load_rep(q, rep_path, prime, x);
      int ext_vanishes = 0, structural = 0;
      check(qh_check_cor13(x.r, &ext_vanishes, &structural));
      bool agree = ext_vanishes == structural;
      std::cout << "ext-vanishes=" << (ext_vanishes ? "true" : "false")
                << " structural=" << (structural ? "true" : "false")
                << " agree=" << (agree ? "true" : "false") << "\n";
      return agree ? kExitOk : kExitCheckFailed;
    }
    OwnedString report;
    int all_ok = 0;
    check(qh_corpus_run(corpus_name.c_str(), prime, count, dim_max, 0, json, &report.s,
                        &all_ok));
    std::cout << report.s;
    return all_ok ? kExitOk : kExitCheckFailed;
  }

  if (c_closure->parsed()) {
    QuiverHandle q;
    load_quiver(quiver_path, q);
    auto names = split_commas(seed_list);
    auto cnames = c_names(names);
    QuiverHandle sub;
    check(qh_quiver_closure(q.q, cnames.data(), cnames.size(), &sub.q));
    OwnedString text;
    check(qh_quiver_serialize(sub.q, &text.s));
    std::cout << text.s;
    return kExitOk;
  }

  if (c_restrict->parsed()) {
    QuiverHandle q;
    load_quiver(quiver_path, q);
    RepHandle x;
    load_rep(q, rep_path, prime, x);
    auto names = split_commas(seed_list);
    auto cnames = c_names(names);
    RepHandle restricted;
    QuiverHandle sub;
    check(qh_rep_restrict(x.r, cnames.data(), cnames.size(), &restricted.r, &sub.q));
    OwnedString qtext, rtext;
    check(qh_quiver_serialize(sub.q, &qtext.s));
    check(qh_rep_serialize(restricted.r, &rtext.s));
    std::cout << "# restricted to the closed subquiver:\n" << qtext.s << "# representation:\n"
              << rtext.s;
    return kExitOk;
  }

  if (c_euler->parsed()) {
    QuiverHandle q;
    load_quiver(quiver_path, q);
    std::vector<std::int64_t> d, e;
    for (const auto& tok : split_commas(d_list)) d.push_back(std::stoll(tok));
    for (const auto& tok : split_commas(e_list)) e.push_back(std::stoll(tok));
    std::int64_t value = 0;
    check(qh_euler_form(q.q, d.data(), d.size(), e.data(), e.size(), &value));
    std::cout << value << "\n";
    return kExitOk;
  }

  if (c_prop16->parsed()) {
    OwnedString report;
    int all_ok = 0;
    check(qh_prop16(n_top, prime, json, &report.s, &all_ok));
    std::cout << report.s;
    return all_ok ? kExitOk : kExitCheckFailed;
  }

  if (c_vphi->parsed() || c_unif->parsed()) {
    ScenarioHandle sc;
    check(qh_scenario_parse(read_file(scenario_path).c_str(), &sc.sc));
    OwnedString report;
    int all_ok = 0;
    if (c_vphi->parsed())
      check(qh_scenario_verify_phi(sc.sc, prime, json, &report.s, &all_ok));
    else
      check(qh_scenario_uniformize(sc.sc, prime, json, &report.s, &all_ok));
    std::cout << report.s;
    return all_ok ? kExitOk : kExitCheckFailed;
  }

  if (c_corpus->parsed()) {
    std::vector<std::string> names = corpus_name == "all"
                                         ? std::vector<std::string>{"a2", "a3", "a3alt",
                                                                    "a4", "d4"}
                                         : std::vector<std::string>{corpus_name};
    bool ok = true;
    for (const auto& name : names) {
      OwnedString report;
      int all_ok = 0;
      check(qh_corpus_run(name.c_str(), prime, count, dim_max, pairs, json, &report.s,
                          &all_ok));
      std::cout << report.s;
      ok = ok && all_ok;
    }
    return ok ? kExitOk : kExitCheckFailed;
  }

  die("no subcommand");
}
