// commands.hpp -- batch operations behind the CLI subcommands: scenario
// execution and machine-readable reports.
#ifndef QUIVERHOM_COMMANDS_HPP
#define QUIVERHOM_COMMANDS_HPP

#include <string>

#include "corpus.hpp"
#include "textio.hpp"

namespace quiverhom {

struct CommandOutcome {
  std::string report;  // newline-terminated text or JSON
  bool checks_ok = true;
};

// Materializes the scenario's quiver, ladder and context.
TrlifajContext scenario_context(const Scenario& sc, const Field& f);
// The scenario's window of limits (all blocks unless restricted).
std::vector<OrdinalT> scenario_window(const Scenario& sc);
// The scenario's phi witness (canonical, zero, or seeded random).
Witness scenario_witness(const Scenario& sc, const TrlifajContext& ctx,
                         const std::vector<OrdinalT>& window, int n_max);

// Generator independence, phi extension consistency, coloring support
// laws, and telescope spot checks for one scenario.
CommandOutcome run_verify_phi(const Scenario& sc, const Field& f, bool json);

// Coloring extraction, uniformizer construction and reconstruction; reports
// the first violated generator when the uniformizer is broken.
CommandOutcome run_uniformize(const Scenario& sc, const Field& f, bool json);

// The forced-coset checks for N = 0..n_top on a fresh truncation.
CommandOutcome run_prop16(std::size_t n_top, const Field& f, bool json);

}  // namespace quiverhom

#endif
