#include "textio.hpp"

#include <algorithm>
#include <sstream>

namespace quiverhom {

namespace {

struct Line {
  int no;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{no, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

long parse_long(const Line& line, const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    throw ParseError(line.no, "expected " + what + ", got '" + tok + "'");
  }
}

Vertex resolve_vertex(const Line& line, const Quiver& q, const std::string& name) {
  auto v = q.vertex_by_name(name);
  if (!v) throw ParseError(line.no, "unknown vertex '" + name + "'");
  return *v;
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  std::vector<std::string> vertex_names;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  std::optional<Quiver> family;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "family") {
      if (family) throw ParseError(line.no, "duplicate family line");
      if (!vertex_names.empty() || !arrows.empty())
        throw ParseError(line.no, "family cannot be mixed with explicit declarations");
      if (t.size() >= 2 && t[1] == "ainfinity" && t.size() == 2)
        family = Quiver::a_infinity();
      else if (t.size() == 2 && t[1] == "ainfinity-branch")
        family = Quiver::a_infinity_branch();
      else if (t.size() == 3 && t[1] == "circular")
        family = Quiver::circular(parse_long(line, t[2], "circle size"));
      else
        throw ParseError(line.no, "unknown family declaration");
    } else if (t[0] == "vertex") {
      if (t.size() != 2) throw ParseError(line.no, "vertex takes one name");
      vertex_names.push_back(t[1]);
    } else if (t[0] == "arrow") {
      // arrow a: 1 -> 2
      if (t.size() != 5 || t[3] != "->" || t[1].empty() || t[1].back() != ':')
        throw ParseError(line.no, "expected 'arrow <id>: <src> -> <dst>'");
      arrows.emplace_back(t[1].substr(0, t[1].size() - 1), t[2], t[4]);
    } else {
      throw ParseError(line.no, "unknown declaration '" + t[0] + "'");
    }
  }
  if (family) return *family;
  try {
    return Quiver::finite(vertex_names, arrows);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string quiver_to_text(const Quiver& q) {
  switch (q.kind()) {
    case Quiver::Kind::AInfinity:
      return "family ainfinity\n";
    case Quiver::Kind::Circular:
      return "family circular " + std::to_string(q.circular_size()) + "\n";
    case Quiver::Kind::Generated:
      if (q == Quiver::a_infinity_branch()) return "family ainfinity-branch\n";
      throw DomainError("generated quiver has no text form");
    case Quiver::Kind::Finite:
      break;
  }
  std::ostringstream os;
  for (Vertex v : q.vertices()) os << "vertex " << q.vertex_name(v) << "\n";
  for (const Arrow& a : q.arrows())
    os << "arrow " << a.id << ": " << q.vertex_name(a.source) << " -> "
       << q.vertex_name(a.target) << "\n";
  return os.str();
}

Scalar parse_scalar(const Field& f, const std::string& token) {
  if (token.empty()) throw DomainError("empty scalar");
  auto slash = token.find('/');
  try {
    if (f.is_rational()) {
      mpq_class q(token, 10);
      q.canonicalize();
      return Scalar::rational(q);
    }
    if (slash != std::string::npos) throw std::invalid_argument("fraction over a prime field");
    long v = std::stol(token);
    return Scalar::of_int(f, v);
  } catch (const std::exception&) {
    throw DomainError("bad scalar '" + token + "'");
  }
}

Representation parse_rep(const std::string& text, const Quiver& q, const Field& f) {
  std::map<Vertex, std::size_t> dims;
  std::map<std::string, Matrix> mats;
  struct PendingMap {
    int line_no;
    std::string arrow;
    std::string literal;
  };
  std::vector<PendingMap> pending;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "dim") {
      if (t.size() != 3) throw ParseError(line.no, "expected 'dim <vertex> <n>'");
      Vertex v = resolve_vertex(line, q, t[1]);
      long d = parse_long(line, t[2], "a dimension");
      if (d < 0) throw ParseError(line.no, "negative dimension");
      dims[v] = static_cast<std::size_t>(d);
    } else if (t[0] == "map") {
      // map a = [[1,0],[0,1]]   (the literal may contain spaces)
      if (t.size() < 4 || t[2] != "=")
        throw ParseError(line.no, "expected 'map <arrow> = [[...],[...]]'");
      std::string literal;
      for (std::size_t i = 3; i < t.size(); ++i) literal += t[i];
      pending.push_back({line.no, t[1], literal});
    } else {
      throw ParseError(line.no, "unknown declaration '" + t[0] + "'");
    }
  }
  for (const PendingMap& pm : pending) {
    auto arrow = q.arrow_by_id(pm.arrow);
    if (!arrow) throw ParseError(pm.line_no, "unknown arrow '" + pm.arrow + "'");
    // Parse the [[..],[..]] literal.
    const std::string& s = pm.literal;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw ParseError(pm.line_no, "matrix for arrow '" + pm.arrow + "' is not bracketed");
    std::vector<std::vector<Scalar>> rows;
    std::string inner = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
      if (inner[pos] == ',') {
        ++pos;
        continue;
      }
      if (inner[pos] != '[')
        throw ParseError(pm.line_no, "matrix row for arrow '" + pm.arrow + "' is not bracketed");
      auto close = inner.find(']', pos);
      if (close == std::string::npos)
        throw ParseError(pm.line_no, "unterminated matrix row for arrow '" + pm.arrow + "'");
      std::string rowtext = inner.substr(pos + 1, close - pos - 1);
      std::vector<Scalar> row;
      std::istringstream rs(rowtext);
      std::string cell;
      while (std::getline(rs, cell, ','))
        if (!cell.empty()) {
          try {
            row.push_back(parse_scalar(f, cell));
          } catch (const Error& e) {
            throw ParseError(pm.line_no, std::string(e.what()) + " in matrix for arrow '" +
                                             pm.arrow + "'");
          }
        }
      rows.push_back(std::move(row));
      pos = close + 1;
    }
    try {
      mats.emplace(pm.arrow, Matrix::from_rows(f, rows));
    } catch (const Error& e) {
      throw ParseError(pm.line_no,
                       std::string(e.what()) + " in matrix for arrow '" + pm.arrow + "'");
    }
  }
  try {
    return Representation::build(q, f, dims, mats);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string rep_to_text(const Representation& x) {
  std::ostringstream os;
  for (const auto& [v, d] : x.dims())
    os << "dim " << x.quiver().vertex_name(v) << " " << d << "\n";
  for (const auto& [id, m] : x.stored_matrices()) os << "map " << id << " = " << m.str() << "\n";
  return os.str();
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.is_stationary()) return "e" + q.vertex_name(p.source());
  return p.str();
}

Path parse_path(const Quiver& q, const std::string& token) {
  if (token.empty()) throw DomainError("empty path");
  if (token[0] == 'e') {
    auto v = q.vertex_by_name(token.substr(1));
    if (v) return Path(*v);
  }
  std::vector<Arrow> arrows;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    auto dot = token.find('.', pos);
    std::string id = token.substr(pos, dot == std::string::npos ? dot : dot - pos);
    auto arrow = q.arrow_by_id(id);
    if (!arrow) throw DomainError("unknown arrow '" + id + "' in path '" + token + "'");
    arrows.push_back(*arrow);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return Path(std::move(arrows));
}

std::string format_element(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    Scalar coeff = c;
    bool negative = coeff.field().is_rational() && coeff.rational_value() < 0;
    if (first) {
      first = false;
      if (negative) {
        os << "-";
        coeff = -coeff;
      }
    } else if (negative) {
      os << " - ";
      coeff = -coeff;
    } else {
      os << " + ";
    }
    if (!coeff.is_one()) os << coeff.str() << "*";
    os << format_path(x.quiver(), p);
  }
  return os.str();
}

AlgebraElement parse_element(const Quiver& q, const Field& f, const std::string& text) {
  AlgebraElement out(q, f);
  if (text == "0") return out;
  // Split into signed terms.
  std::string spaced = text;
  std::vector<std::pair<int, std::string>> terms;  // sign, body
  int sign = 1;
  std::istringstream is(spaced);
  std::string tok;
  std::vector<std::string> tokens;
  while (is >> tok) tokens.push_back(tok);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "+") {
      sign = 1;
      continue;
    }
    if (tokens[i] == "-") {
      sign = -1;
      continue;
    }
    std::string body = tokens[i];
    int tsign = sign;
    if (!body.empty() && body[0] == '-') {
      tsign = -tsign;
      body = body.substr(1);
    }
    terms.emplace_back(tsign, body);
    sign = 1;
  }
  for (const auto& [tsign, body] : terms) {
    auto star = body.find('*');
    Scalar coeff = Scalar::one(f);
    std::string pathtok = body;
    if (star != std::string::npos) {
      coeff = parse_scalar(f, body.substr(0, star));
      pathtok = body.substr(star + 1);
    }
    if (tsign < 0) coeff = -coeff;
    out = out + AlgebraElement::path_term(q, f, parse_path(q, pathtok), coeff);
  }
  return out;
}

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  bool saw_flavor = false, saw_kmax = false, saw_depth = false;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "flavor") {
      if (t.size() < 2) throw ParseError(line.no, "flavor needs an argument");
      if (t[1] == "ainf" && t.size() == 2) {
        sc.flavor = Flavor::AInf;
      } else if (t[1] == "ainf-branch" && t.size() == 2) {
        sc.flavor = Flavor::AInf;
        sc.branch = true;
      } else if (t[1] == "circular" && t.size() == 3) {
        sc.flavor = Flavor::Circular;
        sc.circular_size = parse_long(line, t[2], "circle size");
      } else {
        throw ParseError(line.no, "unknown flavor");
      }
      saw_flavor = true;
    } else if (t[0] == "kmax" && t.size() == 2) {
      sc.kmax = static_cast<int>(parse_long(line, t[1], "kmax"));
      saw_kmax = true;
    } else if (t[0] == "depth" && t.size() == 2) {
      sc.depth = static_cast<int>(parse_long(line, t[1], "depth"));
      saw_depth = true;
    } else if (t[0] == "ladder" && t.size() == 2 && t[1] == "default") {
      // the only built-in ladder; overrides come via zeta lines
    } else if (t[0] == "zeta" && t.size() == 6 && t[3] == "=") {
      sc.zeta_overrides.emplace_back(
          static_cast<int>(parse_long(line, t[1], "limit block")),
          static_cast<int>(parse_long(line, t[2], "rung")),
          OrdinalT{static_cast<int>(parse_long(line, t[4], "block")),
                   static_cast<int>(parse_long(line, t[5], "offset"))});
    } else if (t[0] == "phi" && t.size() >= 2) {
      if (t[1] == "witness" && t.size() == 2)
        sc.phi_kind = Scenario::PhiKind::Witness;
      else if (t[1] == "zero" && t.size() == 2)
        sc.phi_kind = Scenario::PhiKind::Zero;
      else if (t[1] == "random" && t.size() == 3) {
        sc.phi_kind = Scenario::PhiKind::Random;
        sc.seed = static_cast<std::uint64_t>(parse_long(line, t[2], "seed"));
      } else
        throw ParseError(line.no, "expected 'phi witness|zero|random <seed>'");
    } else if (t[0] == "thresholds" && t.size() >= 2) {
      for (std::size_t i = 1; i < t.size(); ++i)
        sc.thresholds.push_back(static_cast<int>(parse_long(line, t[i], "threshold")));
    } else if (t[0] == "mode" && t.size() == 2) {
      if (t[1] == "kq")
        sc.mode = TargetMode::SingleKq;
      else if (t[1] == "free")
        sc.mode = TargetMode::FreeColumns;
      else
        throw ParseError(line.no, "mode is kq or free");
    } else if (t[0] == "window" && t.size() >= 2) {
      for (std::size_t i = 1; i < t.size(); ++i)
        sc.window.push_back(static_cast<int>(parse_long(line, t[i], "limit block")));
    } else if (t[0] == "nmax" && t.size() == 2) {
      sc.n_max = static_cast<int>(parse_long(line, t[1], "nmax"));
    } else if (t[0] == "lenmax" && t.size() == 2) {
      sc.len_max = static_cast<std::size_t>(parse_long(line, t[1], "lenmax"));
    } else if (t[0] == "break-uniformizer" && t.size() == 3) {
      sc.break_point = {static_cast<int>(parse_long(line, t[1], "limit block")),
                        static_cast<int>(parse_long(line, t[2], "rung"))};
    } else {
      throw ParseError(line.no, "unknown scenario directive '" + t[0] + "'");
    }
  }
  if (!saw_flavor) throw ParseError(0, "scenario needs a flavor line");
  if (!saw_kmax || !saw_depth) throw ParseError(0, "scenario needs kmax and depth");
  if (sc.kmax < 1 || sc.depth < 2) throw ParseError(0, "kmax must be >= 1 and depth >= 2");
  if (!sc.thresholds.empty() && sc.thresholds.size() != static_cast<std::size_t>(sc.kmax))
    throw ParseError(0, "thresholds must list one value per limit block");
  return sc;
}

Field parse_field(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s == "q" || s == "Q" || s.empty()) return Field::rationals();
  if (s.rfind("fp", 0) == 0) {
    try {
      long p = std::stol(s.substr(2));
      return Field::fp(static_cast<std::uint32_t>(p));
    } catch (const Error&) {
      throw;
    } catch (...) {
      throw DomainError("bad field spec '" + text + "'");
    }
  }
  throw DomainError("bad field spec '" + text + "' (expected 'q' or 'fp <p>')");
}

}  // namespace quiverhom
