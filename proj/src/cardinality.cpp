#include "qn/cardinality.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qn {

std::vector<int> encode_counter_seq(const std::vector<Lit>& lits, int levels,
                                    CnfFormula& f, const std::string& prefix,
                                    CounterDirection dir) {
  int m = (int)lits.size();
  if (levels < 1 || m == 0) return {};
  if (levels > m) levels = m;
  bool fwd = dir != CounterDirection::outputs_force;   // count>=j  =>  s_{i,j}
  bool bwd = dir != CounterDirection::forces_outputs;  // s_{i,j}   =>  count>=j

  // s[i][j], 1 <= j <= min(i, levels); s[i] is 1-based via offset vectors.
  std::vector<std::vector<int>> s(m + 1);
  for (int i = 1; i <= m; ++i) {
    int top = std::min(i, levels);
    s[i].assign(top + 1, 0);
    for (int j = 1; j <= top; ++j)
      s[i][j] = f.new_var(prefix + ".s(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  if (fwd) {
    f.add_binary(-lits[0], s[1][1]);
    for (int i = 2; i <= m; ++i) {
      f.add_binary(-lits[i - 1], s[i][1]);
      for (int j = 1; j <= std::min(i - 1, levels); ++j) f.add_binary(-s[i - 1][j], s[i][j]);
      for (int j = 2; j <= std::min(i, levels); ++j)
        f.add_ternary(-lits[i - 1], -s[i - 1][j - 1], s[i][j]);
    }
  }
  if (bwd) {
    f.add_binary(-s[1][1], lits[0]);
    for (int i = 2; i <= m; ++i) {
      f.add_ternary(-s[i][1], s[i - 1][1], lits[i - 1]);
      for (int j = 2; j <= std::min(i - 1, levels); ++j) {
        f.add_ternary(-s[i][j], s[i - 1][j], lits[i - 1]);
        f.add_ternary(-s[i][j], s[i - 1][j], s[i - 1][j - 1]);
      }
      if (i <= levels) {
        f.add_binary(-s[i][i], lits[i - 1]);
        f.add_binary(-s[i][i], s[i - 1][i - 1]);
      }
    }
  }
  std::vector<int> out(s[m].begin() + 1, s[m].end());
  return out;
}

std::vector<int> encode_at_most_k_seq(const std::vector<Lit>& lits, int k,
                                      CnfFormula& f, const std::string& prefix) {
  int m = (int)lits.size();
  if (k < 0) throw std::invalid_argument("negative cardinality bound");
  if (k >= m) return {};
  if (k == 0) {
    for (Lit l : lits) f.add_unit(-l);
    return {};
  }
  // Standard Sinz: forward counters up to level k plus overflow blockers.
  std::vector<std::vector<int>> s(m + 1);
  auto out = encode_counter_seq(lits, k, f, prefix, CounterDirection::forces_outputs);
  // Recover the per-prefix top-level counters from the registry for blocking.
  for (int i = k + 1; i <= m; ++i) {
    int prev_top = f.lookup(prefix + ".s(" + std::to_string(i - 1) + "," + std::to_string(k) + ")");
    f.add_binary(-lits[i - 1], -prev_top);
  }
  return out;
}

namespace {

struct TotNode {
  int m = 0;
  std::vector<int> q;  // q[i-1]: count >= p*i (literals)
  std::vector<int> r;  // r[a-1]: remainder >= a (literals)
};

struct TotBuilder {
  CnfFormula& f;
  int p;
  std::string prefix;
  int next_id = 0;

  TotNode build(const std::vector<Lit>& lits, int lo, int hi, bool root) {
    if (hi - lo == 1) {
      TotNode leaf;
      leaf.m = 1;
      if (p > 1) leaf.r = {lits[lo]};
      else leaf.q = {lits[lo]};
      return leaf;
    }
    int mid = lo + (hi - lo) / 2;
    TotNode a = build(lits, lo, mid, false);
    TotNode b = build(lits, mid, hi, false);
    return merge(a, b, root);
  }

  int fresh(bool root, const char* kind, int idx) {
    if (root) return f.new_var(prefix + "." + kind + "(" + std::to_string(idx) + ")");
    return f.new_var(prefix + ".n" + std::to_string(next_id) + "." + kind + "(" +
                     std::to_string(idx) + ")");
  }

  TotNode merge(const TotNode& a, const TotNode& b, bool root) {
    ++next_id;
    TotNode o;
    o.m = a.m + b.m;
    int qlen = o.m / p;
    int rlen = std::min(p - 1, o.m);
    for (int i = 1; i <= qlen; ++i) o.q.push_back(fresh(root, "q", i));
    for (int i = 1; i <= rlen; ++i) o.r.push_back(fresh(root, "r", i));
    int carry = (p > 1 && (!a.r.empty() || !b.r.empty())) ? f.new_var() : 0;

    // Remainder sums, with a carry when they wrap past the modulus.
    for (int al = 0; al <= (int)a.r.size(); ++al) {
      for (int be = 0; be <= (int)b.r.size(); ++be) {
        if (al + be == 0) continue;
        std::vector<Lit> premise;
        if (al > 0) premise.push_back(-a.r[al - 1]);
        if (be > 0) premise.push_back(-b.r[be - 1]);
        int s = al + be;
        if (s < p) {
          auto cl = premise;
          cl.push_back(o.r[s - 1]);
          cl.push_back(carry);
          f.add_clause(cl);
        } else if (s == p) {
          auto cl = premise;
          cl.push_back(carry);
          f.add_clause(cl);
        } else {
          auto cl = premise;
          cl.push_back(o.r[s - p - 1]);
          f.add_clause(cl);
          auto cl2 = premise;
          cl2.push_back(carry);
          f.add_clause(cl2);
        }
      }
    }
    // Quotient sums, optionally bumped by the carry.
    for (int i = 0; i <= (int)a.q.size(); ++i) {
      for (int j = 0; j <= (int)b.q.size(); ++j) {
        std::vector<Lit> premise;
        if (i > 0) premise.push_back(-a.q[i - 1]);
        if (j > 0) premise.push_back(-b.q[j - 1]);
        if (i + j >= 1 && i + j <= (int)o.q.size()) {
          auto cl = premise;
          cl.push_back(o.q[i + j - 1]);
          f.add_clause(cl);
        }
        if (carry) {
          // A remainder wrap bumps the quotient; with no landing slot the
          // combination is impossible (count would exceed the subtree size),
          // so forbid it instead of leaving the carry as an escape hatch.
          auto cl = premise;
          cl.push_back(-carry);
          if (i + j + 1 <= (int)o.q.size()) cl.push_back(o.q[i + j]);
          f.add_clause(cl);
        }
      }
    }
    return o;
  }
};

}  // namespace

TotalizerOutputs encode_at_least_k_mtot(const std::vector<Lit>& lits, long long k,
                                        CnfFormula& f, const std::string& prefix) {
  int m = (int)lits.size();
  TotalizerOutputs out;
  if (k <= 0) return out;
  if (k > m) {
    f.clauses.push_back({});  // statically infeasible
    return out;
  }
  if (k == m) {
    for (Lit l : lits) f.add_unit(l);
    return out;
  }
  // At least k of lits  <=>  at most (m - k) of the negations. Count the
  // negations and forbid a count of K = m - k + 1 or more.
  std::vector<Lit> neg(lits.size());
  for (int i = 0; i < m; ++i) neg[i] = -lits[i];
  long long bound_k = m - k + 1;
  int p = 2;
  while ((long long)p * p < bound_k) p *= 2;

  TotBuilder tb{f, p, prefix};
  TotNode top = tb.build(neg, 0, m, true);
  long long qpart = bound_k / p, rpart = bound_k % p;
  if (rpart == 0) {
    f.add_unit(-top.q[qpart - 1]);
  } else {
    if (qpart + 1 <= (long long)top.q.size()) f.add_unit(-top.q[qpart]);
    if (qpart == 0) {
      f.add_unit(-top.r[rpart - 1]);
    } else {
      f.add_binary(-top.q[qpart - 1], -top.r[rpart - 1]);
    }
  }
  out.modulus = p;
  out.quotient = top.q;
  out.remainder = top.r;
  return out;
}

}  // namespace qn
