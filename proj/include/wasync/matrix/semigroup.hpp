#pragma once

#include <vector>

#include "wasync/matrix/bool_matrix.hpp"

namespace wasync {

enum class ProductOutcome {
  kFound,        ///< sequence holds a shortest positive product
  kExhausted,    ///< the whole semigroup was generated; none is all-ones
  kInconclusive, ///< element cap hit first; says nothing about existence
};

struct PositiveProductResult {
  ProductOutcome outcome = ProductOutcome::kInconclusive;
  /// Generator indices i1..ik with M_i1 x ... x M_ik all-ones.
  std::vector<std::size_t> sequence;
  std::size_t elements = 0;  ///< distinct semigroup elements generated
};

inline constexpr std::size_t kDefaultElementCap = std::size_t{1} << 20;

/// Breadth-first search over the semigroup generated by `ms`, deduplicated
/// by matrix value. Products are extended on the right in generator order,
/// so the first all-ones product found is shortest and, among those,
/// lexicographically least in its index sequence.
PositiveProductResult positive_product_search(const std::vector<BoolMatrix>& ms,
                                              std::size_t cap = kDefaultElementCap);

const char* to_string(ProductOutcome outcome);

}  // namespace wasync
