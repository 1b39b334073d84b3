#include "hyperis/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hyperis/errors.hpp"

namespace hyperis {

Hypergraph::Hypergraph(int vertex_count,
                       std::vector<std::vector<VertexId>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw InvalidParameters("hypergraph: negative vertex count");
  }
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidParameters("hypergraph: repeated vertex inside a hyperedge");
    }
    if (!e.empty() && static_cast<int>(e.back()) >= vertex_count_) {
      throw InvalidParameters("hypergraph: vertex " + std::to_string(e.back()) +
                              " out of range");
    }
  }
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidParameters("hypergraph: duplicate hyperedge");
  }
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(g.vertex_count(), std::move(edges));
}

int max_degree(const Hypergraph& h) {
  std::vector<int> deg(h.vertex_count(), 0);
  for (const auto& e : h.edges()) {
    for (VertexId v : e) deg[v]++;
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int overlap(const Hypergraph& h) {
  const auto& edges = h.edges();
  int best = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      // edges are sorted, so a single merge pass counts the intersection
      const auto& a = edges[i];
      const auto& b = edges[j];
      int common = 0;
      std::size_t x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] < b[y]) {
          ++x;
        } else if (a[x] > b[y]) {
          ++y;
        } else {
          ++common;
          ++x;
          ++y;
        }
      }
      best = std::max(best, common);
    }
  }
  return best;
}

bool is_k_uniform(const Hypergraph& h, int k) {
  for (const auto& e : h.edges()) {
    if (static_cast<int>(e.size()) != k) return false;
  }
  return true;
}

}  // namespace hyperis
