#pragma once

// Test-only oracles and instance helpers. The oracles are deliberately
// naive (full 2^n filters) and share no code with the counting engine or
// the partition-function evaluator they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "hyperis/graph.hpp"
#include "hyperis/hypergraph.hpp"
#include "hyperis/rng.hpp"

namespace testsupport {

// Counts independent sets by filtering every subset of the vertex set.
inline mpz_class naive_count_independent_sets(const hyperis::Hypergraph& h) {
  const int n = h.vertex_count();
  std::vector<std::uint64_t> edge_masks;
  for (const auto& e : h.edges()) {
    std::uint64_t mask = 0;
    for (auto v : e) mask |= std::uint64_t{1} << v;
    edge_masks.push_back(mask);
  }
  mpz_class count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (std::uint64_t em : edge_masks) {
      if ((s & em) == em) {
        independent = false;
        break;
      }
    }
    if (independent) ++count;
  }
  return count;
}

// Partition function by direct summation, with its own stats counting and
// its own exponentiation loop.
inline mpq_class naive_partition_function(const hyperis::Graph& g,
                                          const mpq_class& beta,
                                          const mpq_class& gamma,
                                          const mpq_class& lambda) {
  const int n = g.vertex_count();
  mpq_class total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int n0 = 0, m00 = 0, m11 = 0;
    for (int v = 0; v < n; ++v) {
      if (((mask >> v) & 1) == 0) n0++;
    }
    for (const auto& [u, v] : g.edges()) {
      const bool su = (mask >> u) & 1, sv = (mask >> v) & 1;
      if (!su && !sv) m00++;
      if (su && sv) m11++;
    }
    mpq_class w = 1;
    for (int i = 0; i < n0; ++i) w *= lambda;
    for (int i = 0; i < m00; ++i) w *= beta;
    for (int i = 0; i < m11; ++i) w *= gamma;
    total += w;
  }
  return total;
}

// Random hypergraph for property tests: up to max_edges edges of size 1..4.
inline hyperis::Hypergraph random_hypergraph(hyperis::SplitMix64& rng, int n,
                                             int max_edges) {
  std::vector<std::vector<hyperis::VertexId>> edges;
  const int m = static_cast<int>(rng.below(max_edges + 1));
  for (int i = 0; i < m; ++i) {
    const int size = 1 + static_cast<int>(rng.below(std::min(4, n)));
    std::vector<hyperis::VertexId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<hyperis::VertexId> edge;
    for (int j = 0; j < size; ++j) {
      const auto at = rng.below(pool.size());
      edge.push_back(pool[at]);
      pool.erase(pool.begin() + at);
    }
    std::sort(edge.begin(), edge.end());
    if (std::find(edges.begin(), edges.end(), edge) == edges.end()) {
      edges.push_back(std::move(edge));
    }
  }
  return hyperis::Hypergraph(n, std::move(edges));
}

// Random simple graph with edge probability ~1/2.
inline hyperis::Graph random_graph(hyperis::SplitMix64& rng, int n) {
  std::vector<hyperis::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.below(2) == 0) edges.emplace_back(u, v);
    }
  }
  return hyperis::Graph(n, std::move(edges));
}

// Applies a vertex permutation: vertex v becomes perm[v].
inline hyperis::Hypergraph relabel(const hyperis::Hypergraph& h,
                                   const std::vector<hyperis::VertexId>& perm) {
  std::vector<std::vector<hyperis::VertexId>> edges;
  for (const auto& e : h.edges()) {
    std::vector<hyperis::VertexId> edge;
    for (auto v : e) edge.push_back(perm[v]);
    edges.push_back(std::move(edge));
  }
  return hyperis::Hypergraph(h.vertex_count(), std::move(edges));
}

inline hyperis::Graph relabel(const hyperis::Graph& g,
                              const std::vector<hyperis::VertexId>& perm) {
  std::vector<hyperis::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return hyperis::Graph(g.vertex_count(), std::move(edges));
}

inline std::vector<hyperis::VertexId> random_permutation(
    hyperis::SplitMix64& rng, int n) {
  std::vector<hyperis::VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Disjoint union, second graph's ids shifted.
inline hyperis::Graph disjoint_union(const hyperis::Graph& a,
                                     const hyperis::Graph& b) {
  std::vector<hyperis::Edge> edges = a.edges();
  const hyperis::VertexId shift = a.vertex_count();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return hyperis::Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace testsupport
