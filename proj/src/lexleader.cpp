#include "qn/lexleader.hpp"

#include <stdexcept>

namespace qn {

int encode_lex_leader(const LexLeaderSpec& spec, CnfFormula& f, const std::string& prefix) {
  if (spec.left.size() != spec.right.size())
    throw std::invalid_argument("lex-leader sequences differ in length");
  std::vector<Lit> xs, ys;
  for (size_t i = 0; i < spec.left.size(); ++i) {
    if (spec.left[i] == spec.right[i]) continue;  // fixpoint
    if ((int)xs.size() == spec.max_comp) break;
    xs.push_back(spec.left[i]);
    ys.push_back(spec.right[i]);
  }
  int len = (int)xs.size();
  if (len == 0) return 0;

  int added = 0;
  auto emit = [&](std::vector<Lit> cl) {
    size_t before = f.clauses.size();
    f.add_clause(std::move(cl));
    added += (int)(f.clauses.size() - before);
  };

  // Position 0 ordering clause, then per position: force the prefix-equality
  // auxiliary when the previous position matched, and compare under it.
  emit({-xs[0], ys[0]});
  int prev_eq = 0;
  for (int i = 1; i < len; ++i) {
    int eq = f.new_var(prefix + ".a(" + std::to_string(i) + ")");
    std::vector<Lit> both{-xs[i - 1], -ys[i - 1], eq};
    std::vector<Lit> neither{xs[i - 1], ys[i - 1], eq};
    if (prev_eq != 0) {
      both.insert(both.begin(), -prev_eq);
      neither.insert(neither.begin(), -prev_eq);
    }
    emit(std::move(both));
    emit(std::move(neither));
    emit({-eq, -xs[i], ys[i]});
    prev_eq = eq;
  }
  return added;
}

}  // namespace qn
