#pragma once

#include <string>

#include "qn/cnf.hpp"
#include "qn/dpll.hpp"

namespace qn {

// External solver invocation: `command` is run with the DIMACS path appended
// (or substituted for "{cnf}" if present) under a wall-clock timeout.
struct SolverSpec {
  std::string command;
  int sat_exit = 10;
  int unsat_exit = 20;
  double timeout_seconds = 3600;
};

// Resolution order: QN_SOLVER environment variable, then a qn-cadical binary
// near the running executable (same dir or up to three parents), then PATH.
SolverSpec default_solver_spec();

enum class Verdict { sat, unsat, timeout, unknown, error };

const char* verdict_name(Verdict v);

struct ExternalResult {
  Verdict verdict = Verdict::unknown;
  std::vector<uint8_t> model;  // indexed by var; only for sat
  double wall_seconds = 0;
  int exit_code = -1;
  std::string message;
};

// Writes DIMACS to a temp file, runs the solver, maps exit codes, parses
// v-lines on SAT and re-checks the model clause-by-clause. A model failing
// the check comes back as `error` (solver/encoding mismatch).
ExternalResult solve_external(const CnfFormula& f, const SolverSpec& spec);

// Builtin cube generation: branch on the `depth` highest-occurrence variables,
// producing all 2^depth sign combinations -- a tautology cover by
// construction.
std::vector<Cube> generate_cubes_builtin(const CnfFormula& f, int depth);
// External splitter: run `command` on the formula and parse "a ... 0" lines
// from its output file.
std::vector<Cube> generate_cubes_external(const CnfFormula& f, const std::string& command);

struct CampaignOptions {
  int workers = 1;
  bool static_schedule = false;  // cube i on worker i mod W instead of a queue
  std::string journal_path;      // empty = no persistence
  bool resume = false;           // replay an existing journal first
};

struct CubeStatus {
  Verdict verdict = Verdict::unknown;
  double seconds = 0;
  int attempts = 0;
};

struct CampaignReport {
  Verdict verdict = Verdict::unknown;
  std::vector<CubeStatus> cubes;
  std::vector<uint8_t> model;  // model of the first satisfiable cube
  int sat_cube = -1;
  double total_cpu_seconds = 0;
};

// Solves base ∧ cube_i across a worker pool. Any SAT cube decides the
// campaign (remaining cubes are cancelled); UNSAT requires every cube
// terminal-UNSAT; otherwise the verdict is withheld as `unknown`. Errored
// cubes are retried once. Results are journaled line-by-line (JSON) so an
// interrupted campaign can resume.
CampaignReport run_campaign(const CnfFormula& base, const std::vector<Cube>& cubes,
                            const SolverSpec& spec, const CampaignOptions& opts);

}  // namespace qn
