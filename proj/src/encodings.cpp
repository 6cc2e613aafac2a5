#include "qn/encodings.hpp"

#include <stdexcept>
#include <string>

#include "qn/cardinality.hpp"
#include "qn/lexleader.hpp"

namespace qn {

namespace {

std::string vname(uint32_t bits) { return std::to_string(bits); }

std::string r_name(const Edge& e) {
  return "r(" + vname(e.lo.bits) + "," + vname(e.hi.bits) + ")";
}

// Shared construction of phi/psi: implicit antipodal r variables, one
// uncolored path variable per (start, current) pair, extension clauses, and
// the unit clauses forbidding monochromatic antipodal paths.
Encoding build_path_encoding(int n, bool geodesic, bool include_self_p,
                             const EncodingConfig& cfg) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  const auto& ord = edge_ordering(n);
  Encoding e;
  e.dim = n;
  e.implicit_antipodal = true;
  e.r_var.assign(ord.size(), 0);
  for (int i = 0; i < ord.size(); ++i) {
    const Edge& ed = ord.sequence[i];
    if (ed.lo < antipodal_edge(ed).lo) e.r_var[i] = e.cnf.new_var(r_name(ed));
  }

  uint32_t nv = 1u << n;
  // p[u][v]; the diagonal is allocated only for the non-geodesic variant
  // (start variables; unconstrained but present, matching the measured
  // variable counts).
  std::vector<std::vector<int>> p(nv, std::vector<int>(nv, 0));
  for (uint32_t u = 0; u < nv; ++u)
    for (uint32_t v = 0; v < nv; ++v) {
      if (u == v && !include_self_p) continue;
      p[u][v] = e.cnf.new_var("p(" + vname(u) + "," + vname(v) + ")");
    }

  auto rl = [&](Vertex a, Vertex b) { return e.r_lit(ord.index_of(make_edge(a, b))); };

  for (uint32_t ub = 0; ub < nv; ++ub) {
    Vertex u{ub, n};
    // A red first edge starts a red path.
    for (int axis = 1; axis <= n; ++axis) {
      Vertex v = flip(u, axis);
      e.cnf.add_binary(-rl(u, v), p[ub][v.bits]);
    }
    // Extension: a red path to v plus a red edge vw reaches w.
    for (uint32_t vb = 0; vb < nv; ++vb) {
      if (vb == ub) continue;
      Vertex v{vb, n};
      int duv = distance(u, v);
      for (int axis = 1; axis <= n; ++axis) {
        Vertex w = flip(v, axis);
        // Extensions closing back into the start land on the diagonal
        // variable where one exists (non-geodesic only).
        if (w.bits == ub && !include_self_p) continue;
        if (geodesic) {
          if (distance(u, w) != duv + 1) continue;
        } else if (cfg.skip_start_neighbors && distance(u, w) == 1) {
          continue;
        }
        e.cnf.add_ternary(-p[ub][vb], -rl(v, w), p[ub][w.bits]);
      }
    }
  }
  // No monochromatic antipodal path.
  for (uint32_t ub = 0; ub < nv; ++ub)
    if (ub < antipodal(Vertex{ub, n}).bits) e.cnf.add_unit(-p[ub][ub ^ (nv - 1)]);

  if (cfg.symmetry_breaking) inject_symmetry_breaking(e, cfg.max_comp, cfg.identity_perm_flips);
  if (cfg.red_degree) inject_red_degree_minimum(e);
  return e;
}

}  // namespace

Lit Encoding::r_lit(int edge_index) const {
  if (r_var[edge_index] != 0) return r_var[edge_index];
  const auto& ord = edge_ordering(dim);
  int anti = ord.index_of(antipodal_edge(ord.sequence[edge_index]));
  return -r_var[anti];
}

Encoding build_phi(int n, const EncodingConfig& cfg) {
  return build_path_encoding(n, /*geodesic=*/false, /*include_self_p=*/true, cfg);
}

Encoding build_psi(int n, const EncodingConfig& cfg) {
  return build_path_encoding(n, /*geodesic=*/true, /*include_self_p=*/false, cfg);
}

LevelEncoding build_level_encoding(int n, int max_level, bool geodesic,
                                   const EncodingConfig& cfg) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (max_level < 1 || max_level > n - 1) throw std::invalid_argument("bad level range");
  const auto& ord = edge_ordering(n);
  LevelEncoding le;
  Encoding& e = le.enc;
  e.dim = n;
  e.implicit_antipodal = false;
  le.max_level = max_level;
  e.r_var.assign(ord.size(), 0);
  for (int i = 0; i < ord.size(); ++i) e.r_var[i] = e.cnf.new_var(r_name(ord.sequence[i]));

  uint32_t nv = 1u << n;
  for (uint32_t u = 0; u < nv; ++u)
    if (u < (nv - 1) - u) le.half_vertices.push_back(u);

  const char* cname[2] = {"b", "r"};  // index by Color
  le.p_var.assign(2, std::vector<std::vector<std::vector<int>>>(
                         le.half_vertices.size(),
                         std::vector<std::vector<int>>(nv, std::vector<int>(max_level + 1, 0))));
  for (size_t ui = 0; ui < le.half_vertices.size(); ++ui) {
    uint32_t ub = le.half_vertices[ui];
    for (uint32_t v = 0; v < nv; ++v) {
      if (v == ub) continue;
      for (int x = 0; x < 2; ++x)
        for (int i = 0; i <= max_level; ++i)
          le.p_var[x][ui][v][i] = e.cnf.new_var("p" + std::string(cname[x]) + "(" + vname(ub) +
                                                "," + vname(v) + "," + std::to_string(i) + ")");
    }
  }

  auto rl = [&](Vertex a, Vertex b) { return e.r_var[ord.index_of(make_edge(a, b))]; };

  for (size_t ui = 0; ui < le.half_vertices.size(); ++ui) {
    uint32_t ub = le.half_vertices[ui];
    Vertex u{ub, n};
    auto& pr = le.p_var[(int)Color::red][ui];
    auto& pb = le.p_var[(int)Color::blue][ui];
    // Base: the first edge fixes the color at level 0.
    for (int axis = 1; axis <= n; ++axis) {
      Vertex v = flip(u, axis);
      e.cnf.add_binary(-rl(u, v), pr[v.bits][0]);
      e.cnf.add_binary(rl(u, v), pb[v.bits][0]);
    }
    for (uint32_t vb = 0; vb < nv; ++vb) {
      if (vb == ub) continue;
      Vertex v{vb, n};
      int duv = distance(u, v);
      // Monotone levels.
      for (int i = 1; i <= max_level; ++i) {
        e.cnf.add_binary(-pr[vb][i - 1], pr[vb][i]);
        e.cnf.add_binary(-pb[vb][i - 1], pb[vb][i]);
      }
      for (int axis = 1; axis <= n; ++axis) {
        Vertex w = flip(v, axis);
        if (w.bits == ub) continue;
        if (geodesic) {
          if (distance(u, w) != duv + 1) continue;
        } else if (cfg.skip_start_neighbors && distance(u, w) == 1) {
          continue;
        }
        Lit red_vw = rl(v, w);
        for (int i = 0; i <= max_level; ++i) {
          // Same color keeps the level...
          e.cnf.add_ternary(-pr[vb][i], -red_vw, pr[w.bits][i]);
          e.cnf.add_ternary(-pb[vb][i], red_vw, pb[w.bits][i]);
          // ...switching costs one.
          if (i + 1 <= max_level) {
            e.cnf.add_ternary(-pr[vb][i], red_vw, pb[w.bits][i + 1]);
            e.cnf.add_ternary(-pb[vb][i], -red_vw, pr[w.bits][i + 1]);
          }
        }
      }
    }
  }

  if (cfg.symmetry_breaking) inject_symmetry_breaking(e, cfg.max_comp, cfg.identity_perm_flips);
  if (cfg.red_degree) inject_red_degree_minimum(e);
  return le;
}

namespace {

Encoding build_conj34(int n, bool geodesic, const EncodingConfig& cfg) {
  LevelEncoding le = build_level_encoding(n, 1, geodesic, cfg);
  uint32_t nv = 1u << n;
  for (size_t ui = 0; ui < le.half_vertices.size(); ++ui) {
    uint32_t anti = (nv - 1) ^ le.half_vertices[ui];
    for (int x = 0; x < 2; ++x) le.enc.cnf.add_unit(-le.p_var[x][ui][anti][1]);
  }
  return std::move(le.enc);
}

}  // namespace

Encoding build_conj3(int n, const EncodingConfig& cfg) { return build_conj34(n, false, cfg); }
Encoding build_conj4(int n, const EncodingConfig& cfg) { return build_conj34(n, true, cfg); }

int inject_symmetry_breaking(Encoding& e, int max_comp, bool identity_perm_flips) {
  if (max_comp <= 0) return 0;
  const auto& ord = edge_ordering(e.dim);
  auto gens = generating_symmetries(e.dim, identity_perm_flips);
  int added = 0;
  for (size_t si = 0; si < gens.size(); ++si) {
    LexLeaderSpec spec;
    spec.max_comp = max_comp;
    spec.left.reserve(ord.size());
    spec.right.reserve(ord.size());
    for (int i = 0; i < ord.size(); ++i) {
      spec.left.push_back(e.r_lit(i));
      spec.right.push_back(e.r_lit(ord.index_of(gens[si](ord.sequence[i]))));
    }
    added += encode_lex_leader(spec, e.cnf, "sb" + std::to_string(si));
  }
  return added;
}

void inject_red_degree_minimum(Encoding& e) {
  int n = e.dim;
  const auto& ord = edge_ordering(n);
  std::vector<int> d0;
  for (uint32_t vb = 0; vb < (1u << n); ++vb) {
    Vertex v{vb, n};
    std::vector<Lit> inc;
    for (int axis = 1; axis <= n; ++axis)
      inc.push_back(e.r_lit(ord.index_of(make_edge(v, flip(v, axis)))));
    // Two-sided counters pin d_{v,j} to "red degree of v is at least j".
    auto dv = encode_counter_seq(inc, n, e.cnf, "rd" + vname(vb), CounterDirection::both);
    if (vb == 0)
      d0 = std::move(dv);
    else
      for (int j = 0; j < n; ++j) e.cnf.add_binary(-d0[j], dv[j]);
  }
}

}  // namespace qn
