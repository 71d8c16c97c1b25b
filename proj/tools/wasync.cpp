// wasync: command-line front end.
//
// Exit codes: 0 success, 1 the queried property does not hold (or a
// campaign has failing records), 2 input error, 3 resource cap hit.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wasync/core/dfa_io.hpp"
#include "wasync/core/error.hpp"
#include "wasync/engines/max_sync.hpp"
#include "wasync/engines/rank.hpp"
#include "wasync/engines/sync.hpp"
#include "wasync/gadgets/bundle_io.hpp"
#include "wasync/gadgets/families.hpp"
#include "wasync/gadgets/maxsync_gadgets.hpp"
#include "wasync/gadgets/rank_gadgets.hpp"
#include "wasync/gadgets/sat_gadgets.hpp"
#include "wasync/harness/generators.hpp"
#include "wasync/harness/runner.hpp"
#include "wasync/matrix/matrix_io.hpp"
#include "wasync/matrix/semigroup.hpp"
#include "wasync/oracles/dimacs.hpp"

namespace {

using namespace wasync;
using nlohmann::json;

enum Exit : int { kOk = 0, kViolation = 1, kInput = 2, kResource = 3 };

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  std::string set;
  std::string out;
  std::string cnf;
  std::string graph;
  std::string dfa;
  std::string mode = "exact";
  std::string name;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::size_t cap = kDefaultElementCap;
  bool json = false;
  bool exact = false;
  bool serial = false;
  bool no_timings = false;
  bool list = false;
};

std::map<std::string, std::int64_t> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::int64_t> out;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got '" + kv + "'");
    try {
      std::size_t used = 0;
      const std::int64_t v = std::stoll(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
      out[kv.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw InputError("--param value must be an integer, got '" + kv + "'");
    }
  }
  return out;
}

std::size_t require_param(const std::map<std::string, std::int64_t>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InputError("missing --param " + key + "=<value>");
  if (it->second < 0) throw InputError("--param " + key + " must be non-negative");
  return static_cast<std::size_t>(it->second);
}

Dfa load_dfa(const std::string& path) {
  AnyAutomaton a = read_automaton_file(path);
  if (auto* d = std::get_if<Dfa>(&a)) return std::move(*d);
  if (auto d = std::get<PartialDfa>(a).to_dfa()) return std::move(*d);
  throw InputError("'" + path + "' is a partial automaton; this command needs a complete one");
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string word_or_empty(const TransitionTable& a, const Word& w) {
  return w.empty() ? "<empty>" : render_word(a, w);
}

int report_sync(const Options& o, const TransitionTable& a, const SyncResult& r) {
  json j{{"synchronizing", r.synchronizing}, {"explored", r.explored}};
  std::string text = std::string("synchronizing: ") + (r.synchronizing ? "yes" : "no") + "\n";
  if (r.synchronizing) {
    j["word"] = render_word(a, *r.witness);
    j["length"] = r.witness->size();
    j["target"] = a.state_name(*r.target);
    text += "word: " + word_or_empty(a, *r.witness) + "\nlength: " + std::to_string(r.witness->size()) +
            "\ntarget: " + a.state_name(*r.target) + "\n";
  }
  emit(o, j, text);
  return r.synchronizing ? kOk : kViolation;
}

int cmd_check(const Options& o) {
  const Dfa a = load_dfa(o.input);
  const SyncResult pair = is_synchronizing(a);
  if (!pair.synchronizing) return report_sync(o, a, pair);
  return report_sync(o, a, shortest_sync_word(a, SearchLimits::from_environment()));
}

int cmd_subset(const Options& o) {
  const Dfa a = load_dfa(o.input);
  if (o.set.empty()) throw InputError("subset needs --set");
  return report_sync(o, a, subset_shortest_sync_word(a, parse_state_list(a, o.set), SearchLimits::from_environment()));
}

int cmd_rank(const Options& o) {
  const Dfa a = load_dfa(o.input);
  const SearchLimits limits = SearchLimits::from_environment();
  const RankResult r = o.set.empty()
                           ? rank_of_automaton(a, o.exact ? RankMode::kExact : RankMode::kAuto, limits)
                           : rank_of_subset(a, parse_state_list(a, o.set), limits);
  json j{{"rank", r.rank}, {"word", render_word(a, r.witness)}, {"image", render_set(a, r.final_image)}};
  emit(o, j,
       "rank: " + std::to_string(r.rank) + "\nword: " + word_or_empty(a, r.witness) +
           "\nimage: " + render_set(a, r.final_image) + "\n");
  return kOk;
}

int cmd_maxset(const Options& o) {
  const Dfa a = load_dfa(o.input);
  MaxSyncSetResult r;
  if (o.mode == "unary") {
    r = max_sync_set_unary(a);
  } else {
    MaxSyncOptions opts;
    opts.limits = SearchLimits::from_environment();
    if (o.mode == "exact") {
      opts.mode = MaxSyncMode::kExact;
    } else if (o.mode == "witness") {
      opts.mode = MaxSyncMode::kWitnessOnly;
    } else if (o.mode == "monoid") {
      opts.mode = MaxSyncMode::kMonoid;
    } else {
      throw InputError("unknown --mode '" + o.mode + "' (exact, witness, monoid, unary)");
    }
    r = max_sync_set(a, opts);
  }
  json j{{"size", r.set.size()},
         {"set", render_set(a, r.set)},
         {"word", render_word(a, r.witness)},
         {"target", a.state_name(r.target)}};
  emit(o, j,
       "size: " + std::to_string(r.set.size()) + "\nset: " + render_set(a, r.set) +
           "\nword: " + word_or_empty(a, r.witness) + "\ntarget: " + a.state_name(r.target) + "\n");
  return kOk;
}

int cmd_careful(const Options& o) {
  const PartialDfa a = parse_partial_dfa(read_text_file(o.input));
  return report_sync(o, a, careful_shortest_word(a, SearchLimits::from_environment()));
}

int cmd_reach(const Options& o) {
  const Dfa a = load_dfa(o.input);
  if (o.set.empty()) throw InputError("reach needs --set");
  const ReachResult r = is_subset_reachable(a, parse_state_list(a, o.set), SearchLimits::from_environment());
  json j{{"reachable", r.reachable}, {"explored", r.explored}};
  std::string text = std::string("reachable: ") + (r.reachable ? "yes" : "no") + "\n";
  if (r.reachable) {
    j["word"] = render_word(a, *r.witness);
    text += "word: " + word_or_empty(a, *r.witness) + "\n";
  }
  emit(o, j, text);
  return r.reachable ? kOk : kViolation;
}

int cmd_intersect(const Options& o) {
  std::vector<Acceptor> acceptors;
  for (const auto& path : o.inputs) acceptors.push_back(parse_acceptor(read_text_file(path)));
  if (acceptors.empty()) throw InputError("intersect needs at least one acceptor file");
  const IntersectionResult r = intersection_nonempty(acceptors, SearchLimits::from_environment());
  json j{{"nonempty", r.nonempty}, {"explored", r.explored}};
  std::string text = std::string("nonempty: ") + (r.nonempty ? "yes" : "no") + "\n";
  if (r.nonempty) {
    j["word"] = render_word(acceptors.front().automaton, *r.witness);
    text += "word: " + word_or_empty(acceptors.front().automaton, *r.witness) + "\n";
  }
  emit(o, j, text);
  return r.nonempty ? kOk : kViolation;
}

// Without --out the primary artifact goes to stdout with the sidecar
// appended as '#' comment lines, so the output still parses.
std::string commented(const json& sidecar) {
  std::string out;
  std::istringstream lines(sidecar.dump(2));
  for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
  return out;
}

template <class Bundle, class Text>
int emit_bundle(const Options& o, const Bundle& b, Text text) {
  if (!o.out.empty()) {
    write_bundle(b, o.out);
  } else if (o.json) {
    std::cout << json{{"artifact", text()}, {"sidecar", bundle_sidecar(b)}}.dump(2) << '\n';
  } else {
    std::cout << text() << commented(bundle_sidecar(b));
  }
  return kOk;
}

int cmd_gadget(const Options& o) {
  const auto params = parse_params(o.params);
  const std::string& name = o.name;
  auto cnf = [&] {
    if (o.cnf.empty()) throw InputError("gadget " + name + " needs --cnf");
    return parse_dimacs_cnf(read_text_file(o.cnf));
  };
  auto graph = [&] {
    if (o.graph.empty()) throw InputError("gadget " + name + " needs --graph");
    return parse_dimacs_graph(read_text_file(o.graph));
  };
  auto plain = [&](const GadgetBundle& b) { return emit_bundle(o, b, [&] { return serialize_dfa(b.automaton); }); };

  if (name == "tight-family") return plain(family_tight_rank(require_param(params, "n"), require_param(params, "r")));
  if (name == "family-fig1")
    return plain(family_subset_binary(require_param(params, "n"), require_param(params, "k")));
  if (name == "family-reviewer")
    return plain(family_subset_large_alphabet(require_param(params, "n"), require_param(params, "k")));
  if (name == "layered-subset" || name == "maxsync-padding") {
    if (o.dfa.empty()) throw InputError("gadget " + name + " needs --dfa");
    const Dfa a = load_dfa(o.dfa);
    if (name == "layered-subset") return plain(gadget_layered_subset(a));
    if (o.set.empty()) throw InputError("gadget maxsync-padding needs --set");
    return plain(gadget_maxsync_padding(a, parse_state_list(a, o.set)));
  }
  if (name == "is-maxsync-large") return plain(gadget_is_maxsync_large_alphabet(graph()));
  if (name == "is-maxsync-binary") return plain(gadget_is_maxsync_binary(graph()));
  if (name == "is-maxsync-binary-wa") return plain(gadget_is_maxsync_binary_wa(graph()));
  if (name == "chromatic-rank") return plain(gadget_chromatic_rank(graph()));
  if (name == "chromatic-rank-binary") return plain(gadget_chromatic_rank_binary(graph()));
  if (name == "sat-subset-sync") return plain(gadget_sat_subset_sync(cnf()));
  if (name == "a-base") return plain(build_a_base(cnf()));
  if (name == "sat-careful") return plain(gadget_sat_careful(cnf()));
  if (name == "sat-reachability") return plain(gadget_sat_reachability(cnf()));
  if (name == "sat-intersection") {
    const IntersectionGadget g = gadget_sat_intersection(cnf());
    return emit_bundle(o, g, [&] {
      std::string text;
      for (std::size_t j = 0; j < g.acceptors.size(); ++j)
        text += "# acceptor " + std::to_string(j) + "\n" + serialize_acceptor(g.acceptors[j]);
      return text;
    });
  }
  if (name == "sat-positive") {
    const MatrixGadget g = gadget_sat_matrices(cnf());
    return emit_bundle(o, g, [&] { return serialize_matrices(g.matrices); });
  }
  throw InputError("unknown gadget '" + name + "'");
}

int cmd_matrices(const Options& o) {
  std::vector<BoolMatrix> ms;
  if (!o.cnf.empty()) {
    ms = gadget_sat_matrices(parse_dimacs_cnf(read_text_file(o.cnf))).matrices;
  } else if (!o.input.empty()) {
    const AnyAutomaton a = read_automaton_file(o.input);
    const TransitionTable& t = table_of(a);
    for (Letter x = 0; x < t.n_letters(); ++x) ms.push_back(transition_matrix(t, x));
  } else {
    throw InputError("matrices needs an automaton file or --cnf");
  }
  const std::string text = serialize_matrices(ms);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
  return kOk;
}

int cmd_positive(const Options& o) {
  const std::vector<BoolMatrix> ms = parse_matrices(read_text_file(o.input));
  const PositiveProductResult r = positive_product_search(ms, o.cap);
  std::string seq;
  for (std::size_t i : r.sequence) seq += (seq.empty() ? "" : " ") + std::to_string(i);
  json j{{"outcome", to_string(r.outcome)}, {"sequence", r.sequence}, {"elements", r.elements}};
  std::string text = std::string("outcome: ") + to_string(r.outcome) + "\nelements: " + std::to_string(r.elements) + "\n";
  if (r.outcome == ProductOutcome::kFound) text += "sequence: " + seq + "\n";
  emit(o, j, text);
  switch (r.outcome) {
    case ProductOutcome::kFound: return kOk;
    case ProductOutcome::kExhausted: return kViolation;
    case ProductOutcome::kInconclusive: return kResource;
  }
  return kResource;
}

int cmd_gen(const Options& o) {
  const auto params = parse_params(o.params);
  const std::string& g = o.name;
  auto p = [&](const std::string& key, std::int64_t fallback) {
    auto it = params.find(key);
    const std::int64_t v = it == params.end() ? fallback : it->second;
    if (v < 1) throw InputError("--param " + key + " must be positive");
    return static_cast<std::size_t>(v);
  };
  std::string text;
  if (g == "weakly-acyclic") {
    text = serialize_dfa(gen_random_weakly_acyclic(p("n", 8), p("k", 2), o.seed));
  } else if (g == "dfa") {
    text = serialize_dfa(gen_random_dfa(p("n", 8), p("k", 2), o.seed));
  } else if (g == "eulerian") {
    text = serialize_dfa(gen_random_eulerian(p("n", 6), p("k", 2), o.seed));
  } else if (g == "eulerian-connected") {
    text = serialize_dfa(gen_random_eulerian_connected(p("n", 6), p("k", 2), o.seed));
  } else if (g == "graph") {
    text = serialize_dimacs_graph(gen_random_graph(p("p", 5), static_cast<double>(p("density", 50)) / 100.0, o.seed));
  } else if (g == "cnf") {
    text = serialize_dimacs_cnf(gen_random_cnf(p("n", 4), p("m", 4), p("width", 3), o.seed));
  } else {
    throw InputError("unknown generator '" + g + "' (weakly-acyclic, dfa, eulerian, eulerian-connected, graph, cnf)");
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.list || o.name.empty()) {
    for (const auto& c : campaign_registry()) std::cout << c.name << "  " << c.summary << '\n';
    return o.list ? kOk : kInput;
  }
  CampaignParams params;
  params.seed = o.seed;
  params.count = o.count;
  params.options = parse_params(o.params);
  params.serial = o.serial;
  const VerificationReport report = run_campaign(o.name, params);
  const std::string text =
      o.json ? report_to_json(report, !o.no_timings).dump(2) + "\n" : report_to_table(report, !o.no_timings);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
  return report.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronization toolkit for finite automata"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };
  auto add_input = [&](CLI::App* c, const char* what) { c->add_option("file", o.input, what)->required(); };

  auto* check = app.add_subcommand("check", "synchronizability and a shortest synchronizing word");
  add_input(check, "automaton file");
  add_json(check);

  auto* subset = app.add_subcommand("subset", "shortest word synchronizing a subset");
  add_input(subset, "automaton file");
  subset->add_option("--set", o.set, "comma-separated state names or indices")->required();
  add_json(subset);

  auto* rank = app.add_subcommand("rank", "rank of the automaton or of a subset");
  add_input(rank, "automaton file");
  rank->add_option("--set", o.set, "subset (default: all states)");
  rank->add_flag("--exact", o.exact, "image search even for weakly acyclic input");
  add_json(rank);

  auto* maxset = app.add_subcommand("maxset", "largest synchronizing set");
  add_input(maxset, "automaton file");
  maxset->add_option("--mode", o.mode, "exact | witness | monoid | unary");
  add_json(maxset);

  auto* careful = app.add_subcommand("careful", "careful synchronization of a partial automaton");
  add_input(careful, "automaton file");
  add_json(careful);

  auto* reach = app.add_subcommand("reach", "is the set an exact image of Q?");
  add_input(reach, "automaton file");
  reach->add_option("--set", o.set, "target set")->required();
  add_json(reach);

  auto* intersect = app.add_subcommand("intersect", "common word accepted by all acceptors");
  intersect->add_option("files", o.inputs, "acceptor files")->required();
  add_json(intersect);

  auto* gadget = app.add_subcommand("gadget", "emit a gadget bundle");
  gadget->add_option("name", o.name, "gadget name")->required();
  gadget->add_option("--cnf", o.cnf, "DIMACS CNF source");
  gadget->add_option("--graph", o.graph, "DIMACS graph source");
  gadget->add_option("--dfa", o.dfa, "automaton source");
  gadget->add_option("--set", o.set, "subset of the source automaton");
  gadget->add_option("--param", o.params, "key=value");
  gadget->add_option("--out", o.out, "output prefix");
  add_json(gadget);

  auto* matrices = app.add_subcommand("matrices", "transition matrices in 'mat' format");
  matrices->add_option("file", o.input, "automaton file");
  matrices->add_option("--cnf", o.cnf, "emit the four matrices of the SAT gadget instead");
  matrices->add_option("--out", o.out, "output file");

  auto* positive = app.add_subcommand("positive", "search for an all-ones product");
  add_input(positive, "matrix file");
  positive->add_option("--cap", o.cap, "element cap");
  add_json(positive);

  auto* gen = app.add_subcommand("gen", "seeded random instance");
  gen->add_option("generator", o.name, "weakly-acyclic | dfa | eulerian | eulerian-connected | graph | cnf")
      ->required();
  gen->add_option("--seed", o.seed, "seed");
  gen->add_option("--param", o.params, "key=value (n, k, p, density percent, m, width)");
  gen->add_option("--out", o.out, "output file");

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("campaign", o.name, "campaign name");
  verify->add_flag("--list", o.list, "list campaigns");
  verify->add_option("--seed", o.seed, "seed");
  verify->add_option("--count", o.count, "random instances (0 = campaign default)");
  verify->add_option("--param", o.params, "campaign option key=value");
  verify->add_flag("--serial", o.serial, "evaluate on one thread");
  verify->add_flag("--no-timings", o.no_timings, "omit timing fields");
  verify->add_option("--out", o.out, "report file");
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*check) return cmd_check(o);
    if (*subset) return cmd_subset(o);
    if (*rank) return cmd_rank(o);
    if (*maxset) return cmd_maxset(o);
    if (*careful) return cmd_careful(o);
    if (*reach) return cmd_reach(o);
    if (*intersect) return cmd_intersect(o);
    if (*gadget) return cmd_gadget(o);
    if (*matrices) return cmd_matrices(o);
    if (*positive) return cmd_positive(o);
    if (*gen) return cmd_gen(o);
    if (*verify) return cmd_verify(o);
  } catch (const ResourceError& e) {
    std::cerr << "wasync: inconclusive: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "wasync: error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
