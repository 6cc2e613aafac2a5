#pragma once

#include "qn/cnf.hpp"

namespace qn {

enum class SolveStatus { sat, unsat, unknown };

struct SolveResult {
  SolveStatus status = SolveStatus::unknown;
  // Indexed by variable (model[0] unused); only meaningful when sat.
  std::vector<uint8_t> model;
  long long conflicts = 0;
};

// Self-contained DPLL with watched-literal unit propagation and chronological
// backtracking. Complete on anything it finishes; returns unknown when the
// conflict budget (if >= 0) runs out. Assumptions are enqueued as root-level
// units. Decision phases default to false, so on Horn-like one-sided encodings
// the model found is the propagation-minimal one.
SolveResult solve_internal(const CnfFormula& f, long long max_conflicts = -1,
                           const std::vector<Lit>& assumptions = {});

}  // namespace qn
