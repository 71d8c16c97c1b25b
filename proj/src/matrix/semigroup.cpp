#include "wasync/matrix/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "wasync/core/error.hpp"

namespace wasync {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

struct Node {
  std::size_t parent;
  std::size_t generator;
};

std::vector<std::size_t> trace(const std::vector<Node>& nodes, std::size_t i) {
  std::vector<std::size_t> seq;
  for (; i != kNoParent; i = nodes[i].parent) seq.push_back(nodes[i].generator);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

PositiveProductResult positive_product_search(const std::vector<BoolMatrix>& ms, std::size_t cap) {
  if (ms.empty()) throw InputError("positive_product_search needs at least one matrix");
  for (const auto& m : ms) {
    if (m.n() != ms.front().n()) throw InputError("matrices of different dimensions");
  }

  PositiveProductResult out;
  std::vector<BoolMatrix> elements;
  std::vector<Node> nodes;
  std::unordered_map<BoolMatrix, std::size_t> seen;

  auto admit = [&](BoolMatrix m, std::size_t parent, std::size_t gen) -> bool {
    if (seen.contains(m)) return false;
    const bool positive = m.is_all_ones();
    seen.emplace(m, elements.size());
    elements.push_back(std::move(m));
    nodes.push_back({parent, gen});
    if (positive) {
      out.outcome = ProductOutcome::kFound;
      out.sequence = trace(nodes, nodes.size() - 1);
    }
    return positive;
  };

  for (std::size_t g = 0; g < ms.size(); ++g) {
    if (admit(ms[g], kNoParent, g)) {
      out.elements = elements.size();
      return out;
    }
  }
  // elements doubles as the FIFO queue: indices are assigned in BFS order.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t g = 0; g < ms.size(); ++g) {
      BoolMatrix product = bool_mul(elements[head], ms[g]);
      if (seen.contains(product)) continue;
      if (elements.size() >= cap) {
        out.outcome = ProductOutcome::kInconclusive;
        out.elements = elements.size();
        return out;
      }
      if (admit(std::move(product), head, g)) {
        out.elements = elements.size();
        return out;
      }
    }
  }
  out.outcome = ProductOutcome::kExhausted;
  out.elements = elements.size();
  return out;
}

const char* to_string(ProductOutcome outcome) {
  switch (outcome) {
    case ProductOutcome::kFound: return "found";
    case ProductOutcome::kExhausted: return "exhausted";
    case ProductOutcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace wasync
