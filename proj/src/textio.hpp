// textio.hpp -- the line-oriented text formats: quiver files, representation
// files, scenario files, and the algebra-element notation.
#ifndef QUIVERHOM_TEXTIO_HPP
#define QUIVERHOM_TEXTIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rep.hpp"
#include "trlifaj.hpp"

namespace quiverhom {

// Quiver files: one declaration per line, '#' comments.
//   vertex <name>
//   arrow <id>: <src> -> <dst>
// or a single family line:
//   family ainfinity | family ainfinity-branch | family circular <size>
Quiver parse_quiver(const std::string& text);
std::string quiver_to_text(const Quiver& q);

// Scalar notation: "p/q" over the rationals (the "/q" optional), plain
// decimal residues over a prime field.
Scalar parse_scalar(const Field& f, const std::string& token);

// Representation files over a given quiver:
//   dim <vertex> <n>
//   map <arrow> = [[...],[...]]
// omitted vertices and maps are zero.
Representation parse_rep(const std::string& text, const Quiver& q, const Field& f);
std::string rep_to_text(const Representation& x);

// Paths as dot-joined arrow ids, e<vertex> for stationary paths; elements
// as "3/2*a1.a0 + e0".
std::string format_path(const Quiver& q, const Path& p);
Path parse_path(const Quiver& q, const std::string& token);
std::string format_element(const AlgebraElement& x);
AlgebraElement parse_element(const Quiver& q, const Field& f, const std::string& text);

// Scenario files driving the ladder-system machinery:
//   flavor ainf | ainf-branch | circular <size>
//   kmax <n>
//   depth <n>
//   ladder default
//   zeta <k> <n> = <k'> <n'>        (optional overrides)
//   phi witness | zero | random <seed>
//   thresholds <n_1> ... <n_kmax>
//   mode kq | free                  (optional, default kq)
//   window <k> ...                  (optional, default all)
//   nmax <n>  /  lenmax <n>         (optional bounds)
//   break-uniformizer <k> <n>       (optional corrupted point)
struct Scenario {
  Flavor flavor = Flavor::AInf;
  bool branch = false;
  std::int64_t circular_size = 3;
  int kmax = 1;
  int depth = 1;
  std::vector<std::tuple<int, int, OrdinalT>> zeta_overrides;
  enum class PhiKind { Witness, Zero, Random } phi_kind = PhiKind::Witness;
  std::uint64_t seed = 0;
  std::vector<int> thresholds;  // one per limit, k = 1..kmax
  TargetMode mode = TargetMode::SingleKq;
  std::vector<int> window;  // limit blocks; empty = all
  std::optional<int> n_max;
  std::optional<std::size_t> len_max;
  std::optional<std::pair<int, int>> break_point;
};

Scenario parse_scenario(const std::string& text);

// Field flag syntax used by the command line: "q", "fp <p>" or "fp<p>".
Field parse_field(const std::string& text);

}  // namespace quiverhom

#endif
