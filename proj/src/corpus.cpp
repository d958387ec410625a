#include "corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace quiverhom {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::vector<std::string> corpus_quiver_names() { return {"a2", "a3", "a3alt", "a4", "d4"}; }

Quiver corpus_quiver(const std::string& name) {
  if (name == "a2") return Quiver::finite({"1", "2"}, {{"a", "1", "2"}});
  if (name == "a3") return Quiver::finite({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  if (name == "a3alt") return Quiver::finite({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "3", "2"}});
  if (name == "a4")
    return Quiver::finite({"1", "2", "3", "4"},
                          {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}});
  if (name == "d4")
    return Quiver::finite({"0", "1", "2", "3"},
                          {{"s1", "1", "0"}, {"s2", "2", "0"}, {"s3", "3", "0"}});
  throw DomainError("unknown corpus quiver '" + name + "'");
}

std::vector<Vertex> corpus_closed_seed(const std::string& name) {
  Quiver q = corpus_quiver(name);
  if (name == "a2") return {*q.vertex_by_name("2")};
  if (name == "a3") return {*q.vertex_by_name("2")};
  if (name == "a3alt") return {*q.vertex_by_name("1")};
  if (name == "a4") return {*q.vertex_by_name("2")};
  if (name == "d4") return {*q.vertex_by_name("1")};
  throw DomainError("unknown corpus quiver '" + name + "'");
}

Representation random_representation(const Quiver& q, const Field& f, std::size_t dim_max,
                                     std::mt19937_64& rng) {
  std::map<Vertex, std::size_t> dims;
  for (Vertex v : q.vertices()) dims[v] = rng() % (dim_max + 1);
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : q.arrows()) {
    std::size_t r = dims[a.target], c = dims[a.source];
    if (r == 0 || c == 0) continue;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (f.is_rational()) {
          long num = static_cast<long>(rng() % 5) - 2;
          long den = (rng() % 4 == 0) ? 2 : 1;
          m.set(i, j, Scalar::rational(num, den));
        } else {
          m.set(i, j, Scalar::of_int(f, static_cast<long>(rng() % f.characteristic())));
        }
      }
    mats.emplace(a.id, m);
  }
  return Representation::build(q, f, dims, mats);
}

std::vector<CorpusInstance> corpus_instances(const std::string& quiver_name, const Field& f,
                                             std::size_t random_count, std::size_t dim_max) {
  Quiver q = corpus_quiver(quiver_name);
  std::vector<CorpusInstance> out;
  // Direct sums of up to three indecomposable projectives.
  const auto& verts = q.vertices();
  std::vector<std::vector<Vertex>> combos;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    combos.push_back({verts[i]});
    for (std::size_t j = i; j < verts.size(); ++j) {
      combos.push_back({verts[i], verts[j]});
      for (std::size_t k = j; k < verts.size(); ++k)
        combos.push_back({verts[i], verts[j], verts[k]});
    }
  }
  std::sort(combos.begin(), combos.end());
  std::size_t pid = 0;
  for (const auto& combo : combos) {
    std::vector<Representation> parts;
    for (Vertex v : combo) parts.push_back(projective_rep(q, v, f));
    std::ostringstream id;
    id << "p" << ++pid << "(";
    for (std::size_t i = 0; i < combo.size(); ++i)
      id << (i ? "+" : "") << "P" << q.vertex_name(combo[i]);
    id << ")";
    out.push_back({id.str(), direct_sum(parts)});
  }
  std::mt19937_64 rng(fnv1a(quiver_name + "|" + f.str() + "|corpus"));
  for (std::size_t i = 1; i <= random_count; ++i) {
    std::ostringstream id;
    id << "r" << i;
    out.push_back({id.str(), random_representation(q, f, dim_max, rng)});
  }
  return out;
}

CorpusRunResult corpus_run(const std::string& quiver_name, const Field& f,
                           std::size_t random_count, std::size_t dim_max,
                           std::size_t euler_pairs, bool json) {
  Quiver q = corpus_quiver(quiver_name);
  auto instances = corpus_instances(quiver_name, f, random_count, dim_max);

  CorpusRunResult result;
  result.instances = instances.size();
  nlohmann::json jreport;
  std::ostringstream os;
  os << "corpus-run quiver=" << quiver_name << " field=" << f.str()
     << " random-count=" << random_count << " dims-max=" << dim_max << "\n";
  jreport["command"] = "corpus-run";
  jreport["quiver"] = quiver_name;
  jreport["field"] = f.str();
  jreport["random_count"] = random_count;
  jreport["dims_max"] = dim_max;
  auto jinstances = nlohmann::json::array();

  for (const CorpusInstance& inst : instances) {
    std::size_t ext = ext1_against_algebra(inst.rep);
    bool structural = is_projective_structural(inst.rep);
    bool agree = (ext == 0) == structural;
    if (!agree) ++result.disagreements;
    std::ostringstream dims;
    dims << "(";
    bool first = true;
    for (Vertex v : q.vertices()) {
      dims << (first ? "" : ",") << inst.rep.dim(v);
      first = false;
    }
    dims << ")";
    os << "id=" << inst.id << " dims=" << dims.str() << " ext1_kq=" << ext
       << " ext-vanishes=" << ((ext == 0) ? "true" : "false")
       << " structural=" << (structural ? "true" : "false")
       << " agree=" << (agree ? "true" : "false") << "\n";
    nlohmann::json ji;
    ji["id"] = inst.id;
    ji["dims"] = dims.str();
    ji["ext1_kq"] = ext;
    ji["structural"] = structural;
    ji["agree"] = agree;
    jinstances.push_back(ji);
  }
  jreport["instances"] = jinstances;

  // Euler identity hom - ext = <d, e> on random pairs.
  std::mt19937_64 rng(fnv1a(quiver_name + "|" + f.str() + "|pairs"));
  std::size_t euler_ok = 0;
  for (std::size_t i = 0; i < euler_pairs; ++i) {
    Representation x = random_representation(q, f, dim_max, rng);
    Representation y = random_representation(q, f, dim_max, rng);
    std::map<Vertex, std::int64_t> d, e;
    for (Vertex v : q.vertices()) {
      d[v] = static_cast<std::int64_t>(x.dim(v));
      e[v] = static_cast<std::int64_t>(y.dim(v));
    }
    std::int64_t hom = static_cast<std::int64_t>(hom_space_dim(x, y));
    std::int64_t ext = static_cast<std::int64_t>(ext1_dim(x, y));
    if (hom - ext == euler_form(d, e, q))
      ++euler_ok;
    else
      ++result.euler_failures;
  }
  os << "euler-pairs checked=" << euler_pairs << " ok=" << euler_ok << "\n";
  os << "instances=" << result.instances << " agree=" << (result.instances - result.disagreements)
     << " disagree=" << result.disagreements << "\n";
  result.all_ok = result.disagreements == 0 && result.euler_failures == 0;
  os << "result=" << (result.all_ok ? "PASS" : "FAIL") << "\n";
  jreport["euler_pairs"] = {{"checked", euler_pairs}, {"ok", euler_ok}};
  jreport["disagreements"] = result.disagreements;
  jreport["result"] = result.all_ok ? "PASS" : "FAIL";

  result.report = json ? jreport.dump(2) + "\n" : os.str();
  return result;
}

}  // namespace quiverhom
