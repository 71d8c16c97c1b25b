#include "wasync/gadgets/bundle_io.hpp"

#include <sstream>

#include "wasync/core/dfa_io.hpp"
#include "wasync/core/error.hpp"
#include "wasync/gadgets/digest.hpp"
#include "wasync/matrix/matrix_io.hpp"

namespace wasync {

Provenance make_provenance(std::string gadget, nlohmann::json parameters, std::string_view source_text) {
  Provenance p{std::move(gadget), std::move(parameters), {}};
  std::string material = p.gadget;
  material += '\n';
  material += p.parameters.dump();
  material += '\n';
  material += source_text;
  p.instance_digest = sha256_hex(material);
  return p;
}

const Dfa& GadgetBundle::dfa() const {
  if (const auto* d = std::get_if<Dfa>(&automaton)) return *d;
  throw InputError("gadget " + source.gadget + " is partial");
}

const PartialDfa& GadgetBundle::partial() const {
  if (const auto* d = std::get_if<PartialDfa>(&automaton)) return *d;
  throw InputError("gadget " + source.gadget + " is complete");
}

namespace {

void put_set(nlohmann::json& j, const char* key, const TransitionTable& t, const std::optional<StateSet>& s) {
  if (!s) {
    j[key] = nullptr;
    return;
  }
  nlohmann::json names = nlohmann::json::array();
  for (State q : s->members()) names.push_back(t.state_name(q));
  j[key] = s->members();
  j[std::string(key) + "_names"] = names;
}

nlohmann::json header(const Provenance& source, const Expected& expected) {
  nlohmann::json j;
  j["gadget"] = source.gadget;
  j["parameters"] = source.parameters;
  j["expected"] = expected;
  j["instance_digest"] = source.instance_digest;
  j["schema_version"] = kBundleSchemaVersion;
  return j;
}

}  // namespace

nlohmann::json bundle_sidecar(const GadgetBundle& bundle) {
  auto j = header(bundle.source, bundle.expected);
  put_set(j, "subset", bundle.table(), bundle.subset);
  put_set(j, "target_set", bundle.table(), bundle.target_set);
  j["threshold"] = bundle.threshold ? nlohmann::json(*bundle.threshold) : nlohmann::json(nullptr);
  j["partial"] = bundle.is_partial();
  return j;
}

nlohmann::json bundle_sidecar(const IntersectionGadget& bundle) {
  auto j = header(bundle.source, bundle.expected);
  j["acceptors"] = bundle.acceptors.size();
  return j;
}

nlohmann::json bundle_sidecar(const MatrixGadget& bundle) {
  auto j = header(bundle.source, bundle.expected);
  j["matrices"] = bundle.matrix_names;
  j["state_order"] = bundle.state_names;
  return j;
}

std::string serialize_acceptor(const Acceptor& a) {
  std::ostringstream out;
  out << serialize_dfa(a.automaton);
  out << "initial: " << a.automaton.state_name(a.initial) << '\n';
  out << "accepting: ";
  bool first = true;
  for (State q : a.accepting.members()) {
    out << (first ? "" : ",") << a.automaton.state_name(q);
    first = false;
  }
  out << '\n';
  return out.str();
}

Acceptor parse_acceptor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string dfa_text;
  std::optional<std::pair<std::size_t, std::string>> initial;
  std::optional<std::pair<std::size_t, std::string>> accepting;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with("initial:")) {
      initial.emplace(line_no, line.substr(8));
      dfa_text += '\n';  // keep line numbers aligned for DFA parse errors
    } else if (line.starts_with("accepting:")) {
      accepting.emplace(line_no, line.substr(10));
      dfa_text += '\n';
    } else {
      dfa_text += line;
      dfa_text += '\n';
    }
  }
  Dfa dfa = parse_dfa(dfa_text);
  if (!initial) throw ParseError(line_no + 1, "acceptor is missing an 'initial:' line");
  if (!accepting) throw ParseError(line_no + 1, "acceptor is missing an 'accepting:' line");

  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  const std::string init_name = trim(initial->second);
  const auto q = dfa.find_state(init_name);
  if (!q) throw ParseError(initial->first, "unknown initial state '" + init_name + "'");
  StateSet acc(dfa.n_states());
  const std::string acc_text = trim(accepting->second);
  if (!acc_text.empty()) {
    try {
      acc = parse_state_list(dfa, acc_text);
    } catch (const InputError& e) {
      throw ParseError(accepting->first, e.what());
    }
  }
  return Acceptor{std::move(dfa), *q, std::move(acc)};
}

void write_bundle(const GadgetBundle& bundle, const std::string& prefix) {
  write_text_file(prefix + ".dfa", serialize_dfa(bundle.automaton));
  write_text_file(prefix + ".json", bundle_sidecar(bundle).dump(2) + "\n");
}

void write_bundle(const IntersectionGadget& bundle, const std::string& prefix) {
  for (std::size_t j = 0; j < bundle.acceptors.size(); ++j) {
    write_text_file(prefix + "." + std::to_string(j + 1) + ".acc", serialize_acceptor(bundle.acceptors[j]));
  }
  write_text_file(prefix + ".json", bundle_sidecar(bundle).dump(2) + "\n");
}

void write_bundle(const MatrixGadget& bundle, const std::string& prefix) {
  write_text_file(prefix + ".mat", serialize_matrices(bundle.matrices));
  write_text_file(prefix + ".json", bundle_sidecar(bundle).dump(2) + "\n");
}

}  // namespace wasync
