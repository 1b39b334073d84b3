#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hyperis {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;  // stored with first < second

/// Simple undirected graph. Edges are canonicalized (smaller endpoint
/// first) and kept sorted; self-loops and duplicates are rejected at
/// construction.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::vector<int> degrees() const;

  /// Common degree if the graph is regular, nullopt otherwise.
  /// An edgeless graph is 0-regular.
  std::optional<int> regular_degree() const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace hyperis
