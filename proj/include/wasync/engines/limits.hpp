#pragma once

#include <cstddef>
#include <string_view>

namespace wasync {

/// Caps shared by the exponential engines. Exceeding one raises
/// ResourceError, which callers must treat as "unknown".
struct SearchLimits {
  /// Largest automaton accepted by searches over images of the whole state set.
  std::size_t state_cap = 64;
  /// Distinct image sets (or product tuples) a single search may store.
  std::size_t visited_budget = std::size_t{1} << 24;

  /// Defaults, overridden by the WASYNC_BUDGET environment variable if set.
  /// Accepted forms: "<visited>" or "visited=<n>,states=<n>".
  static SearchLimits from_environment();
  static SearchLimits parse(std::string_view spec);
};

}  // namespace wasync
