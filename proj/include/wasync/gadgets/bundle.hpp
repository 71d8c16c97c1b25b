#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wasync/core/automaton.hpp"
#include "wasync/engines/sync.hpp"
#include "wasync/matrix/bool_matrix.hpp"

namespace wasync {

struct Provenance {
  std::string gadget;
  nlohmann::json parameters = nlohmann::json::object();
  /// SHA-256 over the gadget name, parameters and the canonical text of the
  /// source instance.
  std::string instance_digest;
};

/// Digest of (gadget, parameters, source text).
Provenance make_provenance(std::string gadget, nlohmann::json parameters, std::string_view source_text);

using Expected = std::map<std::string, std::int64_t>;

struct GadgetBundle {
  explicit GadgetBundle(AnyAutomaton a) : automaton(std::move(a)) {}

  AnyAutomaton automaton;
  std::optional<StateSet> subset;
  std::optional<StateSet> target_set;
  std::optional<std::int64_t> threshold;
  Expected expected;
  Provenance source;

  const TransitionTable& table() const { return table_of(automaton); }
  bool is_partial() const { return std::holds_alternative<PartialDfa>(automaton); }
  /// Throws InputError if the automaton is partial.
  const Dfa& dfa() const;
  /// Throws InputError if the automaton is complete.
  const PartialDfa& partial() const;
};

struct IntersectionGadget {
  std::vector<Acceptor> acceptors;
  Expected expected;
  Provenance source;
};

struct MatrixGadget {
  std::vector<BoolMatrix> matrices;
  std::vector<std::string> matrix_names;  ///< one per matrix, in order
  std::vector<std::string> state_names;   ///< canonical row/column order
  Expected expected;
  Provenance source;
};

}  // namespace wasync
