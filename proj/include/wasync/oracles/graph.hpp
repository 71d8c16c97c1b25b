#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace wasync {

using Vertex = std::uint32_t;

/// Simple undirected graph on vertices 0..n-1 (v1..vp in display form).
class Graph {
 public:
  Graph() = default;
  /// Edges in either orientation; duplicates are merged. Self-loops and
  /// out-of-range endpoints throw InputError.
  Graph(std::size_t n_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t n_vertices() const noexcept { return n_; }
  /// Sorted, each edge as (u, v) with u < v.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  bool adjacent(Vertex u, Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<bool> adjacency_;
};

/// All 2^(p(p-1)/2) labeled graphs on p vertices, in edge-mask order.
std::vector<Graph> all_graphs(std::size_t p);

}  // namespace wasync
