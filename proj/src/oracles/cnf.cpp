#include "wasync/oracles/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "wasync/core/error.hpp"

namespace wasync {

CnfFormula::CnfFormula(std::size_t n_vars, std::vector<std::vector<int>> clauses)
    : n_vars_(n_vars), clauses_(std::move(clauses)) {
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    if (clauses_[j].empty()) throw InputError("clause " + std::to_string(j + 1) + " is empty");
    for (int lit : clauses_[j]) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      if (lit == 0 || var > n_vars_) {
        throw InputError("literal " + std::to_string(lit) + " outside 1.." + std::to_string(n_vars_));
      }
    }
  }
}

bool CnfFormula::satisfied_by(std::size_t j, std::size_t var, bool value) const {
  const int wanted = value ? static_cast<int>(var) : -static_cast<int>(var);
  const auto& c = clauses_.at(j);
  return std::find(c.begin(), c.end(), wanted) != c.end();
}

std::size_t CnfFormula::min_variable(std::size_t j) const {
  const auto& c = clauses_.at(j);
  std::size_t best = n_vars_ + 1;
  for (int lit : c) best = std::min(best, static_cast<std::size_t>(std::abs(lit)));
  return best;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.values.size() != f.n_vars()) return false;
  for (const auto& clause : f.clauses()) {
    const bool sat = std::any_of(clause.begin(), clause.end(), [&](int lit) {
      const bool v = a.values[static_cast<std::size_t>(std::abs(lit)) - 1];
      return lit > 0 ? v : !v;
    });
    if (!sat) return false;
  }
  return true;
}

}  // namespace wasync
