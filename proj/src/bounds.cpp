#include "qn/bounds.hpp"

#include <bit>
#include <stdexcept>

#include "qn/cardinality.hpp"

namespace qn {

Threshold Threshold::from_rational(const Rational& a) {
  if (std::popcount((unsigned long long)a.den()) != 1)
    throw std::invalid_argument("threshold must be dyadic: " + a.str());
  Threshold t;
  t.num = a.num();
  t.log2_den = std::countr_zero((unsigned long long)a.den());
  return t;
}

namespace {

// Level core without injections; symmetry breaking and the red-degree chain
// go in after the counting structure so auxiliaries stay grouped at the end.
LevelEncoding build_core(int n, int max_level, const EncodingConfig& cfg) {
  EncodingConfig core = cfg;
  core.symmetry_breaking = false;
  core.red_degree = false;
  return build_level_encoding(n, max_level, /*geodesic=*/true, core);
}

void finish(Encoding& e, const EncodingConfig& cfg) {
  if (cfg.symmetry_breaking) inject_symmetry_breaking(e, cfg.max_comp, cfg.identity_perm_flips);
  if (cfg.red_degree) inject_red_degree_minimum(e);
}

// ceil(2^{n-1} * alpha [+ shift]); the counted sums are integers, so an
// at-least constraint may round a fractional right-hand side up.
long long rhs_ceil(int n, const Rational& alpha, long long shift) {
  Rational rhs = alpha * Rational(1ll << (n - 1)) + Rational(shift);
  return rhs.ceil();
}

}  // namespace

Encoding build_f(int n, const Rational& alpha, const EncodingConfig& cfg) {
  Threshold::from_rational(alpha);  // validate dyadic form
  if (alpha > Rational(n - 1)) throw std::invalid_argument("alpha above the trivial maximum");
  LevelEncoding le = build_core(n, n - 1, cfg);
  Encoding& e = le.enc;
  uint32_t nv = 1u << n;
  std::vector<Lit> unreached;
  for (size_t ui = 0; ui < le.half_vertices.size(); ++ui) {
    uint32_t ub = le.half_vertices[ui];
    uint32_t anti = (nv - 1) ^ ub;
    for (int i = 0; i <= n - 1; ++i) {
      int pt = e.cnf.new_var("pt(" + std::to_string(ub) + "," + std::to_string(i) + ")");
      for (int x = 0; x < 2; ++x) e.cnf.add_binary(-le.p_var[x][ui][anti][i], pt);
      unreached.push_back(-pt);
    }
  }
  long long k = rhs_ceil(n, alpha, 0);
  if (k > 0) encode_at_least_k_mtot(unreached, k, e.cnf, "count");
  finish(e, cfg);
  return std::move(le.enc);
}

Encoding build_fhat(int n, const Rational& alpha, const EncodingConfig& cfg) {
  Threshold::from_rational(alpha);
  LevelEncoding le = build_core(n, n - 1, cfg);
  Encoding& e = le.enc;
  uint32_t nv = 1u << n;
  std::vector<Lit> unreached;
  for (size_t ui = 0; ui < le.half_vertices.size(); ++ui) {
    uint32_t ub = le.half_vertices[ui];
    uint32_t anti = (nv - 1) ^ ub;
    std::vector<int> pt(n + 1);  // pt[i+1] is level i, i in [-1, n-1]
    for (int i = -1; i <= n - 1; ++i)
      pt[i + 1] = e.cnf.new_var("pt(" + std::to_string(ub) + "," + std::to_string(i) + ")");
    for (int i = 0; i <= n - 1; ++i) {
      for (int x = 0; x < 2; ++x) e.cnf.add_binary(-le.p_var[x][ui][anti][i], pt[i + 1]);
      // Both start colors reaching within i changes shaves one level off.
      e.cnf.add_ternary(-le.p_var[0][ui][anti][i], -le.p_var[1][ui][anti][i], pt[i]);
    }
    for (int i = -1; i <= n - 1; ++i) unreached.push_back(-pt[i + 1]);
  }
  long long k = rhs_ceil(n, alpha, 1ll << (n - 1));
  if (k > 0) encode_at_least_k_mtot(unreached, k, e.cnf, "count");
  finish(e, cfg);
  return std::move(le.enc);
}

Encoding build_mu(int n, int target, const EncodingConfig& cfg) {
  if (target < 0 || target > (1 << (n - 1)))
    throw std::invalid_argument("mu target out of range");
  LevelEncoding le = build_core(n, 1, cfg);
  Encoding& e = le.enc;
  uint32_t nv = 1u << n;
  std::vector<Lit> blocked;
  for (size_t ui = 0; ui < le.half_vertices.size(); ++ui) {
    uint32_t ub = le.half_vertices[ui];
    uint32_t anti = (nv - 1) ^ ub;
    int pt = e.cnf.new_var("pt(" + std::to_string(ub) + ",1)");
    for (int x = 0; x < 2; ++x) e.cnf.add_binary(-le.p_var[x][ui][anti][1], pt);
    blocked.push_back(-pt);
  }
  if (target > 0) encode_at_least_k_mtot(blocked, target, e.cnf, "count");
  finish(e, cfg);
  return std::move(le.enc);
}

Coloring decode_coloring(const Encoding& e, const std::vector<uint8_t>& model) {
  if ((int)model.size() < e.cnf.num_vars + 1)
    throw std::invalid_argument("model does not cover the formula");
  Coloring c = uniform_coloring(e.dim, Color::blue);
  for (size_t i = 0; i < e.r_var.size(); ++i) {
    Lit l = e.r_lit((int)i);
    bool red = l > 0 ? model[l] : !model[-l];
    c.set((int)i, red ? Color::red : Color::blue);
  }
  return c;
}

Rational compute_bound(BoundKind kind, int n,
                       const std::function<bool(const Rational&)>& probe) {
  long long lo, hi;
  long long den;
  if (kind == BoundKind::mu) {
    lo = 0;
    hi = 1ll << (n - 1);
    den = 1;
  } else {
    lo = 0;
    hi = (long long)(n - 1) << n;
    den = 1ll << n;
  }
  // Largest numerator that still probes satisfiable; probe(0) is vacuous.
  while (lo < hi) {
    long long mid = lo + (hi - lo + 1) / 2;
    if (probe(Rational(mid, den))) lo = mid;
    else hi = mid - 1;
  }
  return Rational(lo, den);
}

}  // namespace qn
