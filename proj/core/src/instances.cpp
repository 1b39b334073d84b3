#include "hyperis/instances.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyperis/errors.hpp"
#include "hyperis/rng.hpp"

namespace hyperis {

Graph gen_cycle(int n) {
  if (n < 3) {
    throw InvalidParameters("gen_cycle: need n >= 3, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) {
    const VertexId u = static_cast<VertexId>(i);
    const VertexId v = static_cast<VertexId>((i + 1) % n);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(n, std::move(edges));
}

Graph gen_complete(int n) {
  if (n < 2) {
    throw InvalidParameters("gen_complete: need n >= 2, got " +
                            std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_random_regular(int n, int degree, std::uint64_t seed) {
  if (n < 1 || degree < 1 || degree >= n || (n * degree) % 2 != 0) {
    throw InvalidParameters(
        "gen_random_regular: need degree < n and n*degree even, got n=" +
        std::to_string(n) + " degree=" + std::to_string(degree));
  }

  constexpr int kMaxAttempts = 10000;
  SplitMix64 rng(seed);
  std::vector<VertexId> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * degree);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < degree; ++i) stubs.push_back(static_cast<VertexId>(v));
    }
    // Fisher-Yates with the portable generator.
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
      std::swap(stubs[i], stubs[j]);
    }

    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
      VertexId u = stubs[t], v = stubs[t + 1];
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!edges.emplace(u, v).second) {
        simple = false;
        break;
      }
    }
    if (simple) {
      return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    }
  }
  throw GenerationFailure("gen_random_regular: no simple pairing after " +
                          std::to_string(kMaxAttempts) + " attempts (n=" +
                          std::to_string(n) +
                          ", degree=" + std::to_string(degree) + ")");
}

}  // namespace hyperis
