#include "qn/dpll.hpp"

#include <algorithm>
#include <cstdlib>

namespace qn {

namespace {

struct Dpll {
  int nvars;
  std::vector<std::vector<Lit>> clauses;
  std::vector<std::vector<int>> watchers;  // literal index -> clause ids
  std::vector<int8_t> assign;              // 1-based; -1 unassigned
  std::vector<Lit> trail;
  size_t qhead = 0;
  std::vector<int> order;  // decision order, by descending occurrence count

  struct Decision {
    size_t trail_pos;
    Lit lit;
    bool flipped;
  };
  std::vector<Decision> decisions;

  static int widx(Lit l) { return 2 * std::abs(l) + (l < 0); }

  int8_t value(Lit l) const {
    int8_t a = assign[std::abs(l)];
    if (a < 0) return -1;
    return (l > 0) == (a == 1) ? 1 : 0;
  }

  bool enqueue(Lit l) {
    int8_t v = value(l);
    if (v == 0) return false;
    if (v == 1) return true;
    assign[std::abs(l)] = l > 0 ? 1 : 0;
    trail.push_back(l);
    return true;
  }

  bool propagate() {
    while (qhead < trail.size()) {
      Lit l = trail[qhead++];
      auto& ws = watchers[widx(-l)];
      size_t keep = 0;
      for (size_t wi = 0; wi < ws.size(); ++wi) {
        int ci = ws[wi];
        auto& cl = clauses[ci];
        // Ensure the falsified literal sits at position 1.
        if (cl[0] == -l) std::swap(cl[0], cl[1]);
        if (value(cl[0]) == 1) { ws[keep++] = ci; continue; }
        bool moved = false;
        for (size_t k = 2; k < cl.size(); ++k) {
          if (value(cl[k]) != 0) {
            std::swap(cl[1], cl[k]);
            watchers[widx(cl[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (!enqueue(cl[0])) {
          for (size_t k = wi + 1; k < ws.size(); ++k) ws[keep++] = ws[k];
          ws.resize(keep);
          return false;
        }
      }
      ws.resize(keep);
    }
    return true;
  }

  // Undo the trail down to `pos`.
  void backtrack_to(size_t pos) {
    while (trail.size() > pos) {
      assign[std::abs(trail.back())] = -1;
      trail.pop_back();
    }
    qhead = trail.size();
  }

  SolveResult run(long long budget, const std::vector<Lit>& assumptions) {
    SolveResult res;
    // Root units and assumptions.
    for (const auto& cl : clauses)
      if (cl.empty()) { res.status = SolveStatus::unsat; return res; }
    for (size_t ci = 0; ci < clauses.size(); ++ci) {
      if (clauses[ci].size() == 1) {
        if (!enqueue(clauses[ci][0])) { res.status = SolveStatus::unsat; return res; }
      } else {
        watchers[widx(clauses[ci][0])].push_back((int)ci);
        watchers[widx(clauses[ci][1])].push_back((int)ci);
      }
    }
    for (Lit a : assumptions)
      if (!enqueue(a)) { res.status = SolveStatus::unsat; return res; }
    if (!propagate()) { res.status = SolveStatus::unsat; return res; }

    while (true) {
      // Pick the next unassigned variable in static order; phase false.
      int var = 0;
      for (int v : order)
        if (assign[v] < 0) { var = v; break; }
      if (var == 0) {
        res.status = SolveStatus::sat;
        res.model.assign(nvars + 1, 0);
        for (int v = 1; v <= nvars; ++v) res.model[v] = assign[v] == 1;
        return res;
      }
      decisions.push_back({trail.size(), -var, false});
      enqueue(-var);
      while (!propagate()) {
        ++res.conflicts;
        if (budget >= 0 && res.conflicts > budget) { res.status = SolveStatus::unknown; return res; }
        // Chronological backtracking: flip the deepest unflipped decision.
        while (!decisions.empty() && decisions.back().flipped) decisions.pop_back();
        if (decisions.empty()) { res.status = SolveStatus::unsat; return res; }
        auto& d = decisions.back();
        backtrack_to(d.trail_pos);
        d.lit = -d.lit;
        d.flipped = true;
        enqueue(d.lit);
      }
    }
  }
};

}  // namespace

SolveResult solve_internal(const CnfFormula& f, long long max_conflicts,
                           const std::vector<Lit>& assumptions) {
  Dpll d;
  d.nvars = f.num_vars;
  d.clauses = f.clauses;
  d.watchers.assign(2 * (f.num_vars + 1), {});
  d.assign.assign(f.num_vars + 1, -1);
  std::vector<long long> occ(f.num_vars + 1, 0);
  for (const auto& cl : f.clauses)
    for (Lit l : cl) ++occ[std::abs(l)];
  d.order.resize(f.num_vars);
  for (int v = 1; v <= f.num_vars; ++v) d.order[v - 1] = v;
  std::stable_sort(d.order.begin(), d.order.end(),
                   [&](int a, int b) { return occ[a] > occ[b]; });
  return d.run(max_conflicts, assumptions);
}

}  // namespace qn
