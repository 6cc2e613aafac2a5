#pragma once

#include "qn/cnf.hpp"

namespace qn {

// Which implication directions a unary counter carries. `forces_outputs`
// propagates "j inputs true => output_j true"; `outputs_force` the converse.
enum class CounterDirection { forces_outputs, outputs_force, both };

// Sequential unary counter (Sinz-style) over `lits`, with `levels` output
// thresholds. Returns out[j-1] = variable meaning "at least j of lits true"
// (in the direction(s) requested). Auxiliary names use `prefix`.
std::vector<int> encode_counter_seq(const std::vector<Lit>& lits, int levels,
                                    CnfFormula& f, const std::string& prefix,
                                    CounterDirection dir);

// Sinz at-most-k. Returns the counter output variables (levels = min(k, m))
// for reuse, e.g. by the red-degree constraint.
std::vector<int> encode_at_most_k_seq(const std::vector<Lit>& lits, int k,
                                      CnfFormula& f, const std::string& prefix);

struct TotalizerOutputs {
  int modulus = 0;
  std::vector<int> quotient;   // quotient[i-1]: count >= modulus * i
  std::vector<int> remainder;  // remainder[a-1]: remainder part >= a
};

// Modulo totalizer enforcing at least k of `lits` true (implemented as
// at-most-(m-k) over the negated literals, which is the direction the level
// encodings need). Top-level quotient/remainder variables are registered under
// `prefix` so splitting tools can branch on them. k > m emits the empty
// clause; k <= 0 is vacuous.
TotalizerOutputs encode_at_least_k_mtot(const std::vector<Lit>& lits, long long k,
                                        CnfFormula& f, const std::string& prefix);

}  // namespace qn
