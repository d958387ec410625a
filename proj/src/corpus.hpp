// corpus.hpp -- bundled test quivers, the deterministic representation
// generator, and the batch verification runs behind `corpus-run`.
#ifndef QUIVERHOM_CORPUS_HPP
#define QUIVERHOM_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "homol.hpp"

namespace quiverhom {

// Named corpus quivers: a2, a3 (linear), a3alt (middle sink), a4, d4
// (sink orientation).
std::vector<std::string> corpus_quiver_names();
Quiver corpus_quiver(const std::string& name);
// A seed whose closure is a nontrivial proper closed subquiver, used by
// the restriction checks.
std::vector<Vertex> corpus_closed_seed(const std::string& name);

// Deterministic pseudo-random representation with vertex dimensions up to
// dim_max; entries are small (numerators -2..2, denominators 1 or 2 over
// the rationals).
Representation random_representation(const Quiver& q, const Field& f, std::size_t dim_max,
                                     std::mt19937_64& rng);

struct CorpusInstance {
  std::string id;
  Representation rep;
};

// The full instance list: every direct sum of at most three indecomposable
// projectives (ids p...), then `random_count` generated representations
// (ids r...). Seeded from the quiver name and field, so repeated calls
// agree byte for byte.
std::vector<CorpusInstance> corpus_instances(const std::string& quiver_name, const Field& f,
                                             std::size_t random_count, std::size_t dim_max);

struct CorpusRunResult {
  std::string report;   // text or JSON, newline-terminated
  bool all_ok = false;
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  std::size_t euler_failures = 0;
};

// Runs the two projectivity routes on every instance and the Euler
// identity on random pairs; the report is byte-deterministic.
CorpusRunResult corpus_run(const std::string& quiver_name, const Field& f,
                           std::size_t random_count, std::size_t dim_max,
                           std::size_t euler_pairs, bool json);

}  // namespace quiverhom

#endif
