#include "wasync/engines/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

std::size_t to_size(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("invalid budget value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

SearchLimits SearchLimits::parse(std::string_view spec) {
  SearchLimits limits;
  if (spec.find('=') == std::string_view::npos) {
    limits.visited_budget = to_size(spec);
    return limits;
  }
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("invalid budget item '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::size_t value = to_size(item.substr(eq + 1));
    if (key == "visited") {
      limits.visited_budget = value;
    } else if (key == "states") {
      limits.state_cap = value;
    } else {
      throw InputError("unknown budget key '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return limits;
}

SearchLimits SearchLimits::from_environment() {
  const char* env = std::getenv("WASYNC_BUDGET");
  if (env == nullptr || *env == '\0') return SearchLimits{};
  return parse(env);
}

}  // namespace wasync
