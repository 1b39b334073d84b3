#include "hyperis/graph.hpp"

#include <algorithm>
#include <string>

#include "hyperis/errors.hpp"

namespace hyperis {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw InvalidParameters("graph: negative vertex count");
  }
  for (auto& [u, v] : edges_) {
    if (u == v) {
      throw InvalidParameters("graph: self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (static_cast<int>(v) >= vertex_count_) {
      throw InvalidParameters("graph: endpoint " + std::to_string(v) +
                              " out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidParameters("graph: duplicate edge");
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const auto& [u, v] : edges_) {
    deg[u]++;
    deg[v]++;
  }
  return deg;
}

std::optional<int> Graph::regular_degree() const {
  if (vertex_count_ == 0) return 0;
  const auto deg = degrees();
  for (int d : deg) {
    if (d != deg[0]) return std::nullopt;
  }
  return deg[0];
}

}  // namespace hyperis
