#include "wasync/gadgets/sat_gadgets.hpp"

#include <string>

#include "builder.hpp"
#include "wasync/oracles/brute.hpp"
#include "wasync/oracles/dimacs.hpp"

namespace wasync {

namespace {

constexpr Letter kR = 2;

std::string num(std::size_t i) { return std::to_string(i); }
std::string y(std::size_t i, std::size_t j) { return "y" + num(i) + "^" + num(j); }
std::string z(std::size_t i, std::size_t j) { return "z" + num(i) + "^" + num(j); }
std::string s(std::size_t j) { return "s^" + num(j); }

nlohmann::json cnf_params(const CnfFormula& f) {
  return {{"n", f.n_vars()}, {"m", f.n_clauses()}, {"clauses", f.clauses()}};
}

Expected sat_expected(const CnfFormula& f) { return {{"sat", sat_solve_brute(f).has_value() ? 1 : 0}}; }

bool has_z(const CnfFormula& f, std::size_t j, std::size_t i) { return i >= f.min_variable(j) + 1; }

// States and 0/1 transitions of A_base, optionally with the s^j states.
void build_base(detail::TableBuilder& b, const CnfFormula& f, bool with_s) {
  const std::size_t n = f.n_vars();
  for (std::size_t j = 1; j <= f.n_clauses(); ++j) {
    b.add(y(1, j));
    if (with_s) b.add(s(j));
    for (std::size_t i = 2; i <= n + 1; ++i) {
      b.add(y(i, j));
      if (has_z(f, j - 1, i)) b.add(z(i, j));
    }
  }
  b.add("f");

  for (std::size_t j = 1; j <= f.n_clauses(); ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (Letter a = 0; a < 2; ++a) {
        const bool sat = f.satisfied_by(j - 1, i, a == 1);
        b.set(y(i, j), a, sat ? z(i + 1, j) : y(i + 1, j));
      }
    }
    for (std::size_t i = 2; i <= n + 1; ++i) {
      if (!has_z(f, j - 1, i)) continue;
      for (Letter a = 0; a < 2; ++a) b.set(z(i, j), a, i == n + 1 ? std::string("f") : z(i + 1, j));
    }
  }
  for (Letter a = 0; a < 2; ++a) b.set("f", a, "f");
}

}  // namespace

GadgetBundle gadget_sat_subset_sync(const CnfFormula& f) {
  const std::size_t n = f.n_vars();
  detail::TableBuilder b({"0", "1"});
  for (std::size_t j = 1; j <= f.n_clauses(); ++j) {
    for (std::size_t i = 1; i <= n + 1; ++i) b.add(y(i, j));
  }
  b.add("f");
  for (std::size_t j = 1; j <= f.n_clauses(); ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (Letter a = 0; a < 2; ++a) {
        b.set(y(i, j), a, f.satisfied_by(j - 1, i, a == 1) ? std::string("f") : y(i + 1, j));
      }
    }
  }

  StateSet subset(b.size());
  for (std::size_t j = 1; j <= f.n_clauses(); ++j) subset.insert(b.id(y(1, j)));

  GadgetBundle out{b.complete()};
  out.subset = subset;
  out.expected = sat_expected(f);
  out.source = make_provenance("sat-subset-sync", cnf_params(f), serialize_dimacs_cnf(f));
  return out;
}

IntersectionGadget gadget_sat_intersection(const CnfFormula& f) {
  const std::size_t n = f.n_vars();
  IntersectionGadget out;
  for (std::size_t j = 1; j <= f.n_clauses(); ++j) {
    detail::TableBuilder b({"0", "1"});
    for (std::size_t i = 1; i <= n + 1; ++i) b.add(y(i, j));
    const State fin = b.add("f");
    for (std::size_t i = 1; i <= n; ++i) {
      for (Letter a = 0; a < 2; ++a) {
        b.set(y(i, j), a, f.satisfied_by(j - 1, i, a == 1) ? std::string("f") : y(i + 1, j));
      }
    }
    StateSet accepting(b.size());
    accepting.insert(fin);
    out.acceptors.push_back(Acceptor{b.complete(), 0, accepting});
  }
  out.expected = sat_expected(f);
  out.source = make_provenance("sat-intersection", cnf_params(f), serialize_dimacs_cnf(f));
  return out;
}

GadgetBundle build_a_base(const CnfFormula& f) {
  detail::TableBuilder b({"0", "1"});
  build_base(b, f, false);
  GadgetBundle out{b.partial()};
  out.expected = sat_expected(f);
  out.source = make_provenance("a-base", cnf_params(f), serialize_dimacs_cnf(f));
  return out;
}

GadgetBundle gadget_sat_careful(const CnfFormula& f) {
  const std::size_t n = f.n_vars();
  detail::TableBuilder b({"0", "1", "r"});
  build_base(b, f, true);
  for (std::size_t j = 1; j <= f.n_clauses(); ++j) {
    const std::string start = y(1, j);
    b.set(s(j), kR, start);
    for (std::size_t i = 1; i <= n + 1; ++i) {
      b.set(y(i, j), kR, start);
      if (b.has(z(i, j))) b.set(z(i, j), kR, start);
    }
  }
  b.set("f", kR, "f");

  GadgetBundle out{b.partial()};
  out.expected = sat_expected(f);
  out.source = make_provenance("sat-careful", cnf_params(f), serialize_dimacs_cnf(f));
  return out;
}

GadgetBundle gadget_sat_reachability(const CnfFormula& f) {
  const std::size_t n = f.n_vars();
  detail::TableBuilder b({"0", "1"});
  build_base(b, f, false);
  for (std::size_t j = 1; j <= f.n_clauses(); ++j) {
    for (Letter a = 0; a < 2; ++a) b.set(y(n + 1, j), a, "f");
  }
  StateSet target(b.size());
  for (std::size_t j = 1; j <= f.n_clauses(); ++j) target.insert(b.id(z(n + 1, j)));
  target.insert(b.id("f"));

  GadgetBundle out{b.complete()};
  out.target_set = target;
  out.expected = sat_expected(f);
  out.source = make_provenance("sat-reachability", cnf_params(f), serialize_dimacs_cnf(f));
  return out;
}

MatrixGadget gadget_sat_matrices(const CnfFormula& f) {
  const GadgetBundle careful = gadget_sat_careful(f);
  const auto& a = careful.partial();
  MatrixGadget out;
  for (Letter x = 0; x < a.n_letters(); ++x) {
    out.matrices.push_back(transition_matrix(a, x));
    out.matrix_names.push_back(a.letter_name(x));
  }
  BoolMatrix spread(a.n_states());
  const State fin = *a.find_state("f");
  for (std::size_t q = 0; q < a.n_states(); ++q) spread.set(fin, q);
  out.matrices.push_back(std::move(spread));
  out.matrix_names.push_back("spread");
  for (State q = 0; q < a.n_states(); ++q) out.state_names.push_back(a.state_name(q));
  out.expected = careful.expected;
  out.source = make_provenance("sat-positive", cnf_params(f), serialize_dimacs_cnf(f));
  return out;
}

Word assignment_word(const Assignment& a) {
  Word w;
  for (bool v : a.values) w.letters.push_back(v ? 1 : 0);
  return w;
}

Word careful_witness_word(const Assignment& a) {
  Word w{kR};
  w += assignment_word(a);
  w.letters.push_back(0);
  return w;
}

}  // namespace wasync
