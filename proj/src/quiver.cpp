#include "quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace quiverhom {

Path::Path(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {
  if (arrows_.empty()) throw DomainError("arrow path needs at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows_.size(); ++i)
    if (arrows_[i].target != arrows_[i + 1].source)
      throw DomainError("non-composable arrow sequence at position " + std::to_string(i));
  source_ = arrows_.front().source;
  target_ = arrows_.back().target;
}

bool Path::has_suffix(const Path& suffix) const {
  if (suffix.length() > length()) return false;
  if (suffix.is_stationary()) return suffix.source() == target_;
  return std::equal(suffix.arrows_.begin(), suffix.arrows_.end(),
                    arrows_.end() - static_cast<std::ptrdiff_t>(suffix.length()));
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = length() <=> o.length(); c != 0) return c;
  for (std::size_t i = 0; i < length(); ++i)
    if (auto c = arrows_[i].id <=> o.arrows_[i].id; c != 0) return c;
  return source_ <=> o.source_;
}

std::string Path::str() const {
  if (is_stationary()) return "e" + std::to_string(source_);
  std::string out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += ".";
    out += arrows_[i].id;
  }
  return out;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target() != q.source()) return std::nullopt;
  if (p.is_stationary()) return q;
  if (q.is_stationary()) return p;
  std::vector<Arrow> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path(std::move(arrows));
}

namespace {

std::string default_vertex_name(Vertex v) { return std::to_string(v); }

std::optional<Vertex> parse_decimal_vertex(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool neg = s[0] == '-';
  if (neg && s.size() == 1) return std::nullopt;
  for (pos = neg ? 1 : 0; pos < s.size(); ++pos)
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
  try {
    return std::stoll(s);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace

struct Quiver::Impl {
  Kind kind;
  std::string key;

  // Finite data.
  std::vector<Vertex> vertices;                 // sorted
  std::map<Vertex, std::string> names;
  std::map<std::string, Vertex> by_name;
  std::vector<Arrow> arrows;                    // sorted by id
  std::map<Vertex, std::vector<Arrow>> out_arrows, in_arrows;

  // Circular data.
  std::int64_t circ_size = 0;

  // Generated data.
  GeneratedSpec gen;

  static std::shared_ptr<const Impl> make_finite(
      std::vector<std::pair<Vertex, std::string>> vertices, std::vector<Arrow> arrows);
};

std::shared_ptr<const Quiver::Impl> Quiver::Impl::make_finite(
    std::vector<std::pair<Vertex, std::string>> vertices, std::vector<Arrow> arrows) {
  auto impl = std::make_shared<Quiver::Impl>();
  impl->kind = Quiver::Kind::Finite;
  std::sort(vertices.begin(), vertices.end());
  for (const auto& [v, name] : vertices) {
    if (impl->names.count(v)) throw DomainError("duplicate vertex id " + std::to_string(v));
    if (impl->by_name.count(name)) throw DomainError("duplicate vertex name '" + name + "'");
    impl->vertices.push_back(v);
    impl->names[v] = name;
    impl->by_name[name] = v;
  }
  std::sort(arrows.begin(), arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (arrows[i].id == arrows[i + 1].id)
      throw DomainError("duplicate arrow id '" + arrows[i].id + "'");
  for (const Arrow& a : arrows) {
    if (!impl->names.count(a.source) || !impl->names.count(a.target))
      throw DomainError("arrow '" + a.id + "' has an endpoint outside the quiver");
    impl->arrows.push_back(a);
    impl->out_arrows[a.source].push_back(a);
    impl->in_arrows[a.target].push_back(a);
  }
  std::ostringstream key;
  key << "finite|v:";
  for (Vertex v : impl->vertices) key << impl->names[v] << ",";
  key << "|a:";
  for (const Arrow& a : impl->arrows)
    key << a.id << ":" << impl->names[a.source] << ">" << impl->names[a.target] << ",";
  impl->key = key.str();
  return impl;
}

Quiver Quiver::finite(
    const std::vector<std::string>& vertex_names,
    const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  std::vector<std::pair<Vertex, std::string>> vs;
  std::map<std::string, Vertex> ids;
  for (std::size_t i = 0; i < vertex_names.size(); ++i) {
    vs.emplace_back(static_cast<Vertex>(i), vertex_names[i]);
    ids[vertex_names[i]] = static_cast<Vertex>(i);
  }
  std::vector<Arrow> as;
  for (const auto& [id, src, dst] : arrows) {
    if (!ids.count(src)) throw DomainError("arrow '" + id + "': unknown vertex '" + src + "'");
    if (!ids.count(dst)) throw DomainError("arrow '" + id + "': unknown vertex '" + dst + "'");
    as.push_back(Arrow{id, ids[src], ids[dst]});
  }
  return Quiver(Impl::make_finite(std::move(vs), std::move(as)));
}

Quiver Quiver::finite_ids(const std::vector<std::pair<Vertex, std::string>>& vertices,
                          const std::vector<Arrow>& arrows) {
  return Quiver(Impl::make_finite(vertices, arrows));
}

Quiver Quiver::a_infinity() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::AInfinity;
  impl->key = "ainfinity";
  return Quiver(impl);
}

Quiver Quiver::circular(std::int64_t size) {
  if (size < 1) throw DomainError("circular quiver needs at least one vertex");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Circular;
  impl->circ_size = size;
  impl->key = "circular|" + std::to_string(size);
  return Quiver(impl);
}

Quiver Quiver::a_infinity_branch() {
  // A_infinity with an extra decorated branch b1 -> b0 -> 0 feeding the
  // sink; vertex ids -1 (b0) and -2 (b1).
  GeneratedSpec spec;
  spec.name = "ainfinity-branch";
  spec.closure_certified = true;
  spec.has_vertex = [](Vertex v) { return v >= -2; };
  spec.arrows_from = [](Vertex v) -> std::vector<Arrow> {
    if (v == -2) return {Arrow{"c1", -2, -1}};
    if (v == -1) return {Arrow{"c0", -1, 0}};
    if (v == 0) return {};
    return {Arrow{"a" + std::to_string(v - 1), v, v - 1}};
  };
  spec.arrows_into = [](Vertex v) -> std::vector<Arrow> {
    if (v == -2) return {};
    if (v == -1) return {Arrow{"c1", -2, -1}};
    if (v == 0) return {Arrow{"a0", 1, 0}, Arrow{"c0", -1, 0}};
    return {Arrow{"a" + std::to_string(v), v + 1, v}};
  };
  spec.vertex_name = [](Vertex v) {
    if (v == -1) return std::string("b0");
    if (v == -2) return std::string("b1");
    return std::to_string(v);
  };
  spec.vertex_by_name = [](const std::string& s) -> std::optional<Vertex> {
    if (s == "b0") return -1;
    if (s == "b1") return -2;
    auto v = parse_decimal_vertex(s);
    if (v && *v >= 0) return v;
    return std::nullopt;
  };
  spec.arrow_by_id = [](const std::string& id) -> std::optional<Arrow> {
    if (id == "c0") return Arrow{"c0", -1, 0};
    if (id == "c1") return Arrow{"c1", -2, -1};
    if (id.size() < 2 || id[0] != 'a') return std::nullopt;
    auto n = parse_decimal_vertex(id.substr(1));
    if (!n || *n < 0) return std::nullopt;
    return Arrow{id, *n + 1, *n};
  };
  return generated(std::move(spec));
}

Quiver Quiver::generated(GeneratedSpec spec) {
  if (!spec.has_vertex || !spec.arrows_from || !spec.arrows_into)
    throw DomainError("generated quiver needs vertex and arrow functions");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Generated;
  impl->key = "generated|" + spec.name;
  impl->gen = std::move(spec);
  return Quiver(impl);
}

Quiver::Kind Quiver::kind() const { return impl_->kind; }

bool Quiver::closure_certified() const {
  switch (impl_->kind) {
    case Kind::Finite:
    case Kind::Circular:
      return true;  // trivially finite closures
    case Kind::AInfinity:
      return true;  // closure of {n} is {0..n}
    case Kind::Generated:
      return impl_->gen.closure_certified;
  }
  return false;
}

const std::string& Quiver::key() const { return impl_->key; }

bool Quiver::has_vertex(Vertex v) const {
  switch (impl_->kind) {
    case Kind::Finite:
      return impl_->names.count(v) > 0;
    case Kind::AInfinity:
      return v >= 0;
    case Kind::Circular:
      return v >= 0 && v < impl_->circ_size;
    case Kind::Generated:
      return impl_->gen.has_vertex(v);
  }
  return false;
}

bool Quiver::has_arrow(const Arrow& a) const {
  for (const Arrow& b : arrows_from(a.source))
    if (b == a) return true;
  return false;
}

std::vector<Arrow> Quiver::arrows_from(Vertex v) const {
  if (!has_vertex(v)) return {};
  std::vector<Arrow> out;
  switch (impl_->kind) {
    case Kind::Finite: {
      auto it = impl_->out_arrows.find(v);
      if (it != impl_->out_arrows.end()) out = it->second;
      break;
    }
    case Kind::AInfinity:
      if (v >= 1) out = {Arrow{"a" + std::to_string(v - 1), v, v - 1}};
      break;
    case Kind::Circular:
      out = {Arrow{"a" + std::to_string(v), v, (v + 1) % impl_->circ_size}};
      break;
    case Kind::Generated:
      out = impl_->gen.arrows_from(v);
      break;
  }
  std::sort(out.begin(), out.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  return out;
}

std::vector<Arrow> Quiver::arrows_into(Vertex v) const {
  if (!has_vertex(v)) return {};
  std::vector<Arrow> out;
  switch (impl_->kind) {
    case Kind::Finite: {
      auto it = impl_->in_arrows.find(v);
      if (it != impl_->in_arrows.end()) out = it->second;
      break;
    }
    case Kind::AInfinity:
      out = {Arrow{"a" + std::to_string(v), v + 1, v}};
      break;
    case Kind::Circular: {
      Vertex src = (v + impl_->circ_size - 1) % impl_->circ_size;
      out = {Arrow{"a" + std::to_string(src), src, v}};
      break;
    }
    case Kind::Generated:
      out = impl_->gen.arrows_into(v);
      break;
  }
  std::sort(out.begin(), out.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  return out;
}

std::string Quiver::vertex_name(Vertex v) const {
  switch (impl_->kind) {
    case Kind::Finite: {
      auto it = impl_->names.find(v);
      if (it == impl_->names.end()) throw DomainError("no vertex " + std::to_string(v));
      return it->second;
    }
    case Kind::Generated:
      if (impl_->gen.vertex_name) return impl_->gen.vertex_name(v);
      return default_vertex_name(v);
    default:
      return default_vertex_name(v);
  }
}

std::optional<Vertex> Quiver::vertex_by_name(const std::string& name) const {
  switch (impl_->kind) {
    case Kind::Finite: {
      auto it = impl_->by_name.find(name);
      if (it == impl_->by_name.end()) return std::nullopt;
      return it->second;
    }
    case Kind::Generated:
      if (impl_->gen.vertex_by_name) return impl_->gen.vertex_by_name(name);
      break;
    default:
      break;
  }
  auto v = parse_decimal_vertex(name);
  if (v && has_vertex(*v)) return v;
  return std::nullopt;
}

std::optional<Arrow> Quiver::arrow_by_id(const std::string& id) const {
  switch (impl_->kind) {
    case Kind::Finite: {
      auto it = std::lower_bound(impl_->arrows.begin(), impl_->arrows.end(), id,
                                 [](const Arrow& a, const std::string& s) { return a.id < s; });
      if (it != impl_->arrows.end() && it->id == id) return *it;
      return std::nullopt;
    }
    case Kind::AInfinity: {
      if (id.size() < 2 || id[0] != 'a') return std::nullopt;
      auto n = parse_decimal_vertex(id.substr(1));
      if (!n || *n < 0) return std::nullopt;
      return Arrow{id, *n + 1, *n};
    }
    case Kind::Circular: {
      if (id.size() < 2 || id[0] != 'a') return std::nullopt;
      auto i = parse_decimal_vertex(id.substr(1));
      if (!i || *i < 0 || *i >= impl_->circ_size) return std::nullopt;
      return Arrow{id, *i, (*i + 1) % impl_->circ_size};
    }
    case Kind::Generated:
      if (impl_->gen.arrow_by_id) return impl_->gen.arrow_by_id(id);
      return std::nullopt;
  }
  return std::nullopt;
}

const std::vector<Vertex>& Quiver::vertices() const {
  if (impl_->kind != Kind::Finite) throw DomainError("vertex list of an infinite quiver");
  return impl_->vertices;
}

const std::vector<Arrow>& Quiver::arrows() const {
  if (impl_->kind != Kind::Finite) throw DomainError("arrow list of an infinite quiver");
  return impl_->arrows;
}

std::int64_t Quiver::circular_size() const {
  if (impl_->kind != Kind::Circular) throw DomainError("circular_size of a non-circular quiver");
  return impl_->circ_size;
}

bool path_in_quiver(const Quiver& q, const Path& p) {
  if (p.is_stationary()) return q.has_vertex(p.source());
  for (const Arrow& a : p.arrows())
    if (!q.has_arrow(a)) return false;
  return true;
}

Quiver closure(const Quiver& q, const std::vector<Vertex>& seed) {
  if (!q.closure_certified())
    throw DomainError("closure of an uncertified generated quiver");
  constexpr std::size_t kVisitCap = 1000000;
  std::set<Vertex> visited;
  std::deque<Vertex> frontier;
  for (Vertex v : seed) {
    if (!q.has_vertex(v)) throw DomainError("seed vertex " + std::to_string(v) + " not in quiver");
    if (visited.insert(v).second) frontier.push_back(v);
  }
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop_front();
    for (const Arrow& a : q.arrows_from(v))
      if (visited.insert(a.target).second) frontier.push_back(a.target);
    if (visited.size() > kVisitCap) throw BoundsError("closure exceeded the visit cap");
  }
  std::vector<std::pair<Vertex, std::string>> vs;
  std::vector<Arrow> as;
  for (Vertex v : visited) {
    vs.emplace_back(v, q.vertex_name(v));
    for (const Arrow& a : q.arrows_from(v)) as.push_back(a);
  }
  return Quiver::finite_ids(vs, as);
}

bool is_subquiver(const Quiver& p, const Quiver& q) {
  if (!p.is_finite()) throw DomainError("subquiver check needs a finite candidate");
  for (Vertex v : p.vertices())
    if (!q.has_vertex(v)) return false;
  for (const Arrow& a : p.arrows())
    if (!q.has_arrow(a)) return false;
  return true;
}

bool is_closed_subquiver(const Quiver& p, const Quiver& q) {
  if (!is_subquiver(p, q)) return false;
  Quiver cl = closure(q, p.vertices());
  return cl == p;
}

bool is_acyclic(const Quiver& q) {
  if (!q.is_finite()) throw DomainError("acyclicity check needs a finite quiver");
  std::map<Vertex, std::size_t> indeg;
  for (Vertex v : q.vertices()) indeg[v] = 0;
  for (const Arrow& a : q.arrows()) ++indeg[a.target];
  std::deque<Vertex> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop_front();
    ++removed;
    for (const Arrow& a : q.arrows_from(v))
      if (--indeg[a.target] == 0) ready.push_back(a.target);
  }
  return removed == q.vertices().size();
}

namespace {

// Layered enumeration shared by paths_into / paths_from. `grow` produces
// the one-arrow extensions of a path.
std::vector<Path> enumerate_paths(
    const Quiver& q, Vertex v, std::optional<std::size_t> max_len,
    const std::function<std::vector<Path>(const Path&)>& grow) {
  if (!q.has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in quiver");
  if (!max_len && !q.is_finite())
    throw BoundsError("unbounded path enumeration over an infinite quiver");
  std::vector<Path> out;
  std::vector<Path> level{Path(v)};
  std::size_t limit = max_len ? *max_len : q.vertices().size();  // acyclic cap
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == limit || level.empty()) {
      if (!max_len && !level.empty())
        throw DomainError("co-reachable part has a cycle; path set is infinite");
      break;
    }
    std::vector<Path> next;
    for (const Path& p : level) {
      auto grown = grow(p);
      next.insert(next.end(), grown.begin(), grown.end());
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Path> paths_into(const Quiver& q, Vertex v, std::optional<std::size_t> max_len) {
  return enumerate_paths(q, v, max_len, [&q](const Path& p) {
    std::vector<Path> grown;
    for (const Arrow& a : q.arrows_into(p.source())) {
      std::vector<Arrow> arrows{a};
      arrows.insert(arrows.end(), p.arrows().begin(), p.arrows().end());
      grown.emplace_back(std::move(arrows));
    }
    return grown;
  });
}

std::vector<Path> paths_from(const Quiver& q, Vertex v, std::size_t max_len) {
  return enumerate_paths(q, v, max_len, [&q](const Path& p) {
    std::vector<Path> grown;
    for (const Arrow& a : q.arrows_from(p.target())) {
      std::vector<Arrow> arrows = p.arrows();
      arrows.push_back(a);
      grown.emplace_back(std::move(arrows));
    }
    return grown;
  });
}

std::vector<Path> paths_between(const Quiver& q, Vertex u, Vertex w) {
  if (!q.is_finite() || !is_acyclic(q))
    throw DomainError("paths_between needs a finite acyclic quiver");
  std::vector<Path> out;
  for (const Path& p : paths_from(q, u, q.vertices().size()))
    if (p.target() == w) out.push_back(p);
  return out;
}

std::size_t path_count(const Quiver& q, Vertex u, Vertex w) {
  if (!q.is_finite() || !is_acyclic(q))
    throw DomainError("path_count needs a finite acyclic quiver");
  // counts[v] = number of paths u -> v, filled in topological order.
  std::map<Vertex, std::size_t> counts;
  counts[u] = 1;
  std::map<Vertex, std::size_t> indeg;
  for (Vertex v : q.vertices()) indeg[v] = 0;
  for (const Arrow& a : q.arrows()) ++indeg[a.target];
  std::deque<Vertex> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop_front();
    std::size_t c = counts.count(v) ? counts[v] : 0;
    for (const Arrow& a : q.arrows_from(v)) {
      counts[a.target] += c;
      if (--indeg[a.target] == 0) ready.push_back(a.target);
    }
  }
  return counts.count(w) ? counts[w] : 0;
}

Path power_cycle(const Quiver& q, std::size_t n) {
  std::int64_t size = q.circular_size();
  if (n == 0) return Path(Vertex{0});
  std::vector<Arrow> arrows;
  arrows.reserve(n * static_cast<std::size_t>(size));
  for (std::size_t rep = 0; rep < n; ++rep)
    for (std::int64_t i = 0; i < size; ++i)
      arrows.push_back(Arrow{"a" + std::to_string(i), i, (i + 1) % size});
  return Path(std::move(arrows));
}

}  // namespace quiverhom
