#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "wasync/gadgets/bundle.hpp"

namespace wasync {

inline constexpr int kBundleSchemaVersion = 1;

/// {gadget, parameters, subset, target_set, threshold, expected,
///  instance_digest, schema_version}. Sets are lists of state indices,
/// mirrored by *_names lists.
nlohmann::json bundle_sidecar(const GadgetBundle& bundle);
nlohmann::json bundle_sidecar(const IntersectionGadget& bundle);
nlohmann::json bundle_sidecar(const MatrixGadget& bundle);

/// Acceptor text: the DFA interchange format followed by
///   initial: <state>
///   accepting: <comma-separated states>
std::string serialize_acceptor(const Acceptor& a);
Acceptor parse_acceptor(std::string_view text);

/// Writes <prefix>.dfa and <prefix>.json.
void write_bundle(const GadgetBundle& bundle, const std::string& prefix);
/// Writes <prefix>.<j>.acc for each acceptor and <prefix>.json.
void write_bundle(const IntersectionGadget& bundle, const std::string& prefix);
/// Writes <prefix>.mat and <prefix>.json.
void write_bundle(const MatrixGadget& bundle, const std::string& prefix);

}  // namespace wasync
