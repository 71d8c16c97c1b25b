#include <algorithm>
#include <string>

#include "campaigns.hpp"
#include "wasync/engines/sync.hpp"
#include "wasync/gadgets/sat_gadgets.hpp"
#include "wasync/harness/generators.hpp"
#include "wasync/matrix/semigroup.hpp"
#include "wasync/oracles/brute.hpp"
#include "wasync/oracles/dimacs.hpp"

namespace wasync::detail {

namespace {

using std::to_string;

struct CnfCase {
  std::string label;
  CnfFormula formula;
};

// The shared instance list of every SAT campaign:
//  - grid: per_cell random formulas for each n, m in 1..grid_max, clause
//    width drawn from 1..min(3, n);
//  - all clause sequences over one variable with m <= grid_max;
//  - `count` random 3-CNFs with n in 3..n_max, m in 1..m_max.
std::vector<CnfCase> cnf_cases(const CampaignParams& params) {
  const auto grid_max = static_cast<std::size_t>(params.option("grid_max", 4));
  const auto per_cell = static_cast<std::size_t>(params.option("per_cell", 20));
  const auto n_max = static_cast<std::size_t>(params.option("n_max", 5));
  const auto m_max = static_cast<std::size_t>(params.option("m_max", 6));
  const std::size_t count = params.count_or(300);

  std::vector<CnfCase> out;
  std::uint64_t stream = 0;
  for (std::size_t n = 1; n <= grid_max; ++n) {
    for (std::size_t m = 1; m <= grid_max; ++m) {
      for (std::size_t i = 0; i < per_cell; ++i) {
        const std::uint64_t s = derive_seed(params.seed, stream++);
        const std::size_t width = 1 + static_cast<std::size_t>(s % std::min<std::size_t>(3, n));
        out.push_back({"grid n=" + to_string(n) + " m=" + to_string(m) + " #" + to_string(i),
                       gen_random_cnf(n, m, width, derive_seed(s, 1))});
      }
    }
  }

  const std::vector<std::vector<int>> unary_clauses{{1}, {-1}, {-1, 1}};
  for (std::size_t m = 1; m <= grid_max; ++m) {
    std::size_t total = 1;
    for (std::size_t j = 0; j < m; ++j) total *= unary_clauses.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::vector<int>> clauses;
      for (std::size_t j = 0, c = code; j < m; ++j, c /= unary_clauses.size())
        clauses.push_back(unary_clauses[c % unary_clauses.size()]);
      out.push_back({"n=1 m=" + to_string(m) + " all#" + to_string(code), CnfFormula(1, std::move(clauses))});
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(params.seed, stream++);
    const std::size_t n = 3 + static_cast<std::size_t>(s % (n_max - 2));
    const std::size_t m = 1 + static_cast<std::size_t>((s >> 16) % m_max);
    out.push_back({"3cnf n=" + to_string(n) + " m=" + to_string(m) + " #" + to_string(i),
                   gen_random_cnf(n, m, 3, derive_seed(s, 1))});
  }
  return out;
}

// The careful and reachability gadgets have m(n+2)+1 states, above the
// default cap for the larger random formulas.
SearchLimits sat_limits(const CampaignParams& params) {
  SearchLimits limits = params.limits;
  limits.state_cap = std::max<std::size_t>(limits.state_cap, 1024);
  return limits;
}

std::string sat_text(bool sat) { return sat ? "sat=1" : "sat=0"; }

template <class Check>
std::vector<InstanceTask> sat_campaign(const CampaignParams& params, Check check) {
  std::vector<InstanceTask> tasks;
  for (auto& c : cnf_cases(params)) {
    tasks.push_back({c.label, [f = std::move(c.formula), check, limits = sat_limits(params)] {
      const std::optional<Assignment> model = sat_solve_brute(f);
      return check(f, model, limits);
    }});
  }
  return tasks;
}

InstanceOutcome subset_sync(const CnfFormula& f, const std::optional<Assignment>& model, const SearchLimits& limits) {
  const GadgetBundle b = gadget_sat_subset_sync(f);
  const SyncResult r = subset_shortest_sync_word(b.dfa(), *b.subset, limits);
  InstanceOutcome out;
  out.digest = b.source.instance_digest;
  out.expected = sat_text(model.has_value());
  out.computed = sat_text(r.synchronizing);
  if (model) {
    out.expected += " assignment_word=sync";
    out.computed += synchronizes(b.dfa(), *b.subset, assignment_word(*model)) ? " assignment_word=sync"
                                                                               : " assignment_word=not-sync";
  }
  return out;
}

InstanceOutcome careful(const CnfFormula& f, const std::optional<Assignment>& model, const SearchLimits& limits) {
  const GadgetBundle b = gadget_sat_careful(f);
  const PartialDfa& a = b.partial();
  const SyncResult r = careful_shortest_word(a, limits);
  InstanceOutcome out;
  out.digest = b.source.instance_digest;
  out.expected = sat_text(model.has_value());
  out.computed = sat_text(r.synchronizing);
  if (model) {
    const PartialImage img = partial_image(a, StateSet::full(a.n_states()), careful_witness_word(*model));
    out.expected += " r_w_0=careful";
    out.computed += img.defined() && img.image->size() == 1 ? " r_w_0=careful" : " r_w_0=not-careful";
  }
  return out;
}

InstanceOutcome intersection(const CnfFormula& f, const std::optional<Assignment>& model, const SearchLimits& limits) {
  const IntersectionGadget g = gadget_sat_intersection(f);
  const IntersectionResult r = intersection_nonempty(g.acceptors, limits);
  InstanceOutcome out;
  out.digest = g.source.instance_digest;
  out.expected = sat_text(model.has_value());
  out.computed = sat_text(r.nonempty);
  return out;
}

InstanceOutcome reachability(const CnfFormula& f, const std::optional<Assignment>& model, const SearchLimits& limits) {
  const GadgetBundle b = gadget_sat_reachability(f);
  const ReachResult r = is_subset_reachable(b.dfa(), *b.target_set, limits);
  InstanceOutcome out;
  out.digest = b.source.instance_digest;
  out.expected = sat_text(model.has_value());
  out.computed = sat_text(r.reachable);
  return out;
}

InstanceOutcome positive(const CnfFormula& f, const std::optional<Assignment>& model, const SearchLimits&) {
  const MatrixGadget g = gadget_sat_matrices(f);
  const PositiveProductResult r = positive_product_search(g.matrices);
  InstanceOutcome out;
  out.digest = g.source.instance_digest;
  out.expected = sat_text(model.has_value());
  out.computed = sat_text(r.outcome == ProductOutcome::kFound);
  out.conclusive = r.outcome != ProductOutcome::kInconclusive;
  out.note = std::string(to_string(r.outcome)) + " after " + to_string(r.elements) + " elements";
  return out;
}

std::string orientation_text(const BoolMatrix& m) {
  if (is_triangular(m, Orientation::kUpper)) return "upper";
  if (is_triangular(m, Orientation::kLower)) return "lower";
  return "none";
}

InstanceOutcome triangular(const CnfFormula& f, const std::optional<Assignment>&, const SearchLimits&) {
  const MatrixGadget g = gadget_sat_matrices(f);
  InstanceOutcome out;
  out.digest = g.source.instance_digest;
  out.expected = "0:upper 1:upper r:lower spread:lower";
  for (std::size_t i = 0; i < g.matrices.size(); ++i) {
    if (i != 0) out.computed += ' ';
    out.computed += g.matrix_names[i] + ":" + orientation_text(g.matrices[i]);
  }
  return out;
}

}  // namespace

std::vector<CampaignSpec> sat_campaigns() {
  using Fn = InstanceOutcome (*)(const CnfFormula&, const std::optional<Assignment>&, const SearchLimits&);
  auto make = [](std::string name, std::string summary, Fn fn) {
    return CampaignSpec{std::move(name), std::move(summary),
                        [fn](const CampaignParams& p) { return sat_campaign(p, fn); }};
  };
  return {
      make("sat-subset-sync", "SAT to subset synchronizability", subset_sync),
      make("sat-careful", "SAT to careful synchronizability of a partial automaton", careful),
      make("sat-intersection", "SAT to nonemptiness of an acceptor intersection", intersection),
      make("sat-reachability", "SAT to exact reachability of a target image", reachability),
      make("sat-positive", "SAT to existence of an all-ones matrix product", positive),
      make("sat-triangular", "orientation of the four gadget matrices", triangular),
  };
}

}  // namespace wasync::detail
