#pragma once

#include <cstdint>
#include <vector>

#include "hyperis/graph.hpp"

namespace hyperis {

/// Hypergraph as a vertex count plus a list of hyperedges. Each hyperedge
/// is stored strictly sorted; repeated vertices inside an edge and
/// duplicate edges are rejected at construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int vertex_count, std::vector<std::vector<VertexId>> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// 2-uniform view of a graph.
  static Hypergraph from_graph(const Graph& g);

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<VertexId>> edges_;
};

/// Maximum number of hyperedges any single vertex appears in; 0 if edgeless.
int max_degree(const Hypergraph& h);

/// Maximum intersection size over unordered pairs of distinct hyperedges;
/// 0 when the hypergraph has fewer than two edges.
int overlap(const Hypergraph& h);

/// True iff every hyperedge has exactly k vertices (vacuously true when
/// edgeless).
bool is_k_uniform(const Hypergraph& h, int k);

}  // namespace hyperis
