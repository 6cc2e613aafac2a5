#pragma once

#include "qn/cnf.hpp"
#include "qn/hypercube.hpp"

namespace qn {

struct EncodingConfig {
  bool symmetry_breaking = true;
  int max_comp = 30;
  bool red_degree = true;
  // Skip path-extension clauses into neighbors of the start vertex (the side
  // condition w not in N(u); vacuous for geodesic encodings).
  bool skip_start_neighbors = true;
  // Also generate the identity-permutation single-flip symmetries.
  bool identity_perm_flips = false;
};

// A CNF together with the edge-variable map needed to decode models back into
// colorings. In the implicit-antipodal scheme only edges whose lo endpoint is
// lexicographically smaller than the antipodal edge's lo carry a variable; the
// omitted half is referenced through the complemented literal.
struct Encoding {
  CnfFormula cnf;
  int dim = 0;
  bool implicit_antipodal = false;
  std::vector<int> r_var;  // canonical edge index -> var; 0 in the omitted half

  // Literal asserting "edge is red", complementing through the antipodal edge
  // when the edge itself carries no variable.
  Lit r_lit(int edge_index) const;
};

// Conjecture 1: every antipodal coloring has a monochromatic antipodal path.
// UNSAT proves the conjecture at n; SAT models must be re-verified (the path
// variables are one-sided).
Encoding build_phi(int n, const EncodingConfig& cfg = {});
// Conjecture 2: as phi but restricted to geodesics (distance-increasing
// extension steps only).
Encoding build_psi(int n, const EncodingConfig& cfg = {});
// Conjecture 3: every coloring has an antipodal path with at most one color
// change. Colored level variables over arbitrary paths, unit-forbidden at
// level 1.
Encoding build_conj3(int n, const EncodingConfig& cfg = {});
// Conjecture 4: geodesic variant of conjecture 3.
Encoding build_conj4(int n, const EncodingConfig& cfg = {});

// Lex-leader constraints c <= c o S over the generating symmetries, with
// fixpoint removal and truncation at max_comp. Safe on any encoding built
// over the canonical edge ordering. Returns the number of clauses added.
int inject_symmetry_breaking(Encoding& e, int max_comp, bool identity_perm_flips = false);
// Sequential-counter red-degree variables d(v,i) per vertex plus the
// implications d(0,i) -> d(v,i): the all-zero vertex has minimum red degree.
void inject_red_degree_minimum(Encoding& e);

// Shared builder for the colored level encodings (conjectures 3/4, F, F-hat,
// mu). Level variables p^x(u,v,i) exist for u in the lexicographic half,
// v != u, x in {red, blue}, i in [0, max_level]. Exposed for the bound
// encoders; not part of the CLI surface.
struct LevelEncoding {
  Encoding enc;
  int max_level = 0;
  // p_var[x][u_half_index][v][i]; 0 where absent.
  std::vector<std::vector<std::vector<std::vector<int>>>> p_var;
  std::vector<uint32_t> half_vertices;  // bit patterns with u < antipodal(u)
};
LevelEncoding build_level_encoding(int n, int max_level, bool geodesic,
                                   const EncodingConfig& cfg);

}  // namespace qn
