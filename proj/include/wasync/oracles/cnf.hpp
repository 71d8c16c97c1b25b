#pragma once

#include <vector>

namespace wasync {

/// Literals are signed 1-based variable indices: +i is x_i, -i is not x_i.
class CnfFormula {
 public:
  CnfFormula() = default;
  /// Throws InputError on an empty clause or a literal outside 1..n_vars.
  CnfFormula(std::size_t n_vars, std::vector<std::vector<int>> clauses);

  std::size_t n_vars() const noexcept { return n_vars_; }
  std::size_t n_clauses() const noexcept { return clauses_.size(); }
  const std::vector<std::vector<int>>& clauses() const noexcept { return clauses_; }
  const std::vector<int>& clause(std::size_t j) const { return clauses_.at(j); }

  /// Does setting variable `var` (1-based) to `value` satisfy clause j?
  bool satisfied_by(std::size_t j, std::size_t var, bool value) const;
  /// Smallest variable index (1-based) occurring in clause j.
  std::size_t min_variable(std::size_t j) const;

  bool operator==(const CnfFormula&) const = default;

 private:
  std::size_t n_vars_ = 0;
  std::vector<std::vector<int>> clauses_;
};

struct Assignment {
  std::vector<bool> values;  ///< values[i] is x_{i+1}

  bool operator==(const Assignment&) const = default;
};

bool satisfies(const CnfFormula& f, const Assignment& a);

}  // namespace wasync
