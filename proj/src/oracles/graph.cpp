#include "wasync/oracles/graph.hpp"

#include <algorithm>
#include <string>

#include "wasync/core/error.hpp"

namespace wasync {

Graph::Graph(std::size_t n_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n_vertices), adjacency_(n_vertices * n_vertices, false) {
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) {
      throw InputError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (adjacency_[u * n_ + v]) continue;
    adjacency_[u * n_ + v] = adjacency_[v * n_ + u] = true;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw InputError("vertex out of range");
  return adjacency_[u * n_ + v];
}

std::vector<Graph> all_graphs(std::size_t p) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < p; ++u) {
    for (Vertex v = u + 1; v < p; ++v) slots.emplace_back(u, v);
  }
  if (slots.size() > 20) throw InputError("too many graphs to enumerate");
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    }
    out.emplace_back(p, edges);
  }
  return out;
}

}  // namespace wasync
