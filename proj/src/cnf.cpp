#include "qn/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qn {

int CnfFormula::new_var(const std::string& name) {
  ++num_vars;
  var_names.push_back(name);
  if (!name.empty()) {
    auto [it, inserted] = registry.emplace(name, num_vars);
    if (!inserted) throw std::logic_error("duplicate variable name: " + name);
  }
  return num_vars;
}

int CnfFormula::lookup(const std::string& name) const {
  auto it = registry.find(name);
  return it == registry.end() ? 0 : it->second;
}

void CnfFormula::add_clause(std::vector<Lit> lits) {
  std::sort(lits.begin(), lits.end(), [](Lit a, Lit b) {
    int va = std::abs(a), vb = std::abs(b);
    return va != vb ? va < vb : a < b;
  });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (size_t i = 0; i < lits.size(); ++i) {
    Lit l = lits[i];
    if (l == 0 || std::abs(l) > num_vars) throw std::logic_error("literal out of range");
    if (i + 1 < lits.size() && lits[i + 1] == -l) return;  // tautology
  }
  clauses.push_back(std::move(lits));
}

void write_dimacs(const CnfFormula& f, std::ostream& os) {
  os << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& cl : f.clauses) {
    for (Lit l : cl) os << l << " ";
    os << "0\n";
  }
}

CnfFormula parse_dimacs(std::istream& is) {
  CnfFormula f;
  std::string line;
  bool header = false;
  std::vector<Lit> cur;
  long long declared_vars = 0, declared_clauses = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream ss(line);
      std::string p, cnf;
      ss >> p >> cnf >> declared_vars >> declared_clauses;
      if (cnf != "cnf" && cnf != "inccnf") throw std::runtime_error("bad DIMACS header");
      header = true;
      while (f.num_vars < declared_vars) f.new_var();
      continue;
    }
    if (line[0] == 'a') continue;  // cube line; ignored here
    std::istringstream ss(line);
    Lit l;
    while (ss >> l) {
      if (l == 0) {
        while (f.num_vars < (long long)std::abs(l)) f.new_var();
        f.add_clause(cur);
        cur.clear();
      } else {
        while (f.num_vars < std::abs(l)) f.new_var();
        cur.push_back(l);
      }
    }
  }
  if (!header) throw std::runtime_error("missing DIMACS header");
  if (!cur.empty()) f.add_clause(cur);
  return f;
}

void write_icnf(const CnfFormula& f, const std::vector<Cube>& cubes, std::ostream& os) {
  os << "p inccnf\n";
  for (const auto& cl : f.clauses) {
    for (Lit l : cl) os << l << " ";
    os << "0\n";
  }
  for (const auto& cu : cubes) {
    os << "a";
    for (Lit l : cu.lits) os << " " << l;
    os << " 0\n";
  }
}

std::vector<Cube> parse_cube_lines(std::istream& is) {
  std::vector<Cube> cubes;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] != 'a') continue;
    std::istringstream ss(line.substr(1));
    Cube cu;
    Lit l;
    while (ss >> l && l != 0) cu.lits.push_back(l);
    cubes.push_back(std::move(cu));
  }
  return cubes;
}

void write_registry(const CnfFormula& f, std::ostream& os) {
  for (int v = 1; v <= f.num_vars; ++v)
    if (!f.var_names[v - 1].empty()) os << f.var_names[v - 1] << " " << v << "\n";
}

bool model_satisfies(const CnfFormula& f, const std::vector<uint8_t>& model) {
  if ((int)model.size() < f.num_vars + 1) return false;
  for (const auto& cl : f.clauses) {
    bool sat = false;
    for (Lit l : cl) {
      if ((l > 0 && model[l]) || (l < 0 && !model[-l])) { sat = true; break; }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace qn
