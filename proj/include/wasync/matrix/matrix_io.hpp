#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wasync/matrix/bool_matrix.hpp"

namespace wasync {

/// Text format: a header `mat <count> <n>`, then `count` blocks of n rows,
/// each row n characters of 0/1. '#' comments and blank lines are ignored.
std::vector<BoolMatrix> parse_matrices(std::string_view text);
std::string serialize_matrices(const std::vector<BoolMatrix>& ms);

}  // namespace wasync
