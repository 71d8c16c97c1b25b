#pragma once

#include <string>
#include <string_view>

#include "wasync/core/automaton.hpp"

namespace wasync {

// Interchange format:
//
//   dfa <n> <k> [partial]
//   <n rows of k whitespace-separated targets; '-' = undefined, partial only>
//   states: <n names>      (optional)
//   letters: <k names>     (optional)
//
// Lines starting with '#' and blank lines are ignored.

/// Parses either kind. A `partial` header always yields a PartialDfa.
AnyAutomaton parse_automaton(std::string_view text);

/// Parses a complete automaton. A partial file is accepted only if it has no
/// undefined entry.
Dfa parse_dfa(std::string_view text);

/// Parses a partial automaton; complete files are accepted as well.
PartialDfa parse_partial_dfa(std::string_view text);

std::string serialize_dfa(const Dfa& a);
std::string serialize_dfa(const PartialDfa& a);
std::string serialize_dfa(const AnyAutomaton& a);

AnyAutomaton read_automaton_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace wasync
