#pragma once

#include "qn/cnf.hpp"

namespace qn {

// Two literal sequences to be constrained left <=_lex right, truncated to the
// first `max_comp` positions after fixpoint removal.
struct LexLeaderSpec {
  std::vector<Lit> left;
  std::vector<Lit> right;
  int max_comp = 0;
};

// Emits clauses forcing left <=_lex right via a chain of prefix-equality
// auxiliaries: one ordering clause plus two defining clauses per position
// (3*len - 2 clauses, len - 1 auxiliaries). Positions where the two sequences
// carry the identical literal are dropped first; then the comparison is cut at
// max_comp. Returns the number of clauses added.
int encode_lex_leader(const LexLeaderSpec& spec, CnfFormula& f, const std::string& prefix);

}  // namespace qn
