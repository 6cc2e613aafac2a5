#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace qn {

// DIMACS-convention literal: +v / -v, v >= 1.
using Lit = int;

struct Cube {
  std::vector<Lit> lits;
};

// Clause database with a deterministic variable registry. Building the same
// encoding twice yields byte-identical DIMACS output.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<Lit>> clauses;
  std::vector<std::string> var_names;  // var_names[v-1]; may be empty
  std::unordered_map<std::string, int> registry;

  // Allocates a fresh variable; a non-empty name must be unique.
  int new_var(const std::string& name = "");
  // 0 if the name is unknown.
  int lookup(const std::string& name) const;
  // Sorts and deduplicates literals; drops tautologies; rejects stray vars.
  void add_clause(std::vector<Lit> lits);
  void add_unit(Lit l) { add_clause({l}); }
  void add_binary(Lit a, Lit b) { add_clause({a, b}); }
  void add_ternary(Lit a, Lit b, Lit c) { add_clause({a, b, c}); }
};

void write_dimacs(const CnfFormula& f, std::ostream& os);
CnfFormula parse_dimacs(std::istream& is);
// "p inccnf" header, clauses, then one "a <lits> 0" line per cube.
void write_icnf(const CnfFormula& f, const std::vector<Cube>& cubes, std::ostream& os);
// Cube lines ("a ... 0") from an iCNF-style stream; other lines are ignored.
std::vector<Cube> parse_cube_lines(std::istream& is);
// Sidecar: "<name> <index>" for every named variable, in index order.
void write_registry(const CnfFormula& f, std::ostream& os);

// True iff `model` (indexed by var, model[0] unused) satisfies every clause.
bool model_satisfies(const CnfFormula& f, const std::vector<uint8_t>& model);

}  // namespace qn
