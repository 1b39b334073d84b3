#pragma once

#include <span>

#include <gmpxx.h>

#include "hyperis/graph.hpp"

namespace hyperis {

/// Two-spin system on a graph: interaction weights beta (both endpoints 0)
/// and gamma (both endpoints 1), external field lambda on 0-vertices.
/// All exact rationals, all >= 0.
struct SpinParams {
  mpq_class beta;
  mpq_class gamma;
  mpq_class lambda;

  bool antiferromagnetic() const { return beta * gamma < 1; }
};

/// The parameterization driven by the hypergraph reduction:
///   beta = 1,  gamma = 1 - 2^-(k-2b),  lambda = 2^b - 1.
/// Requires k >= 2 and 1 <= 2b <= k; the result is always
/// anti-ferromagnetic (asserted).
SpinParams paper_params(int k, int b);

/// Exact tallies of a configuration: vertices assigned 0, edges with both
/// endpoints 0, edges with both endpoints 1.
struct ConfigStats {
  int zero_vertices = 0;
  int zero_zero_edges = 0;
  int one_one_edges = 0;
};

/// sigma must assign every vertex of g a value in {0,1}.
ConfigStats config_stats(const Graph& g, std::span<const std::uint8_t> sigma);

/// lambda^zeros * beta^(00-edges) * gamma^(11-edges), with 0^0 = 1
/// (needed when gamma = 0 and there are no 11-edges).
mpq_class config_weight(const SpinParams& p, const ConfigStats& s);

inline constexpr int kDefaultPartitionCap = 24;

/// Exact sum of config_weight over all 2^|V| assignments.
/// Throws InstanceTooLarge above the cap.
mpq_class partition_function(const Graph& g, const SpinParams& p,
                             int max_vertices = kDefaultPartitionCap);

/// Rational power with the 0^0 = 1 convention.
mpq_class rational_pow(const mpq_class& base, unsigned long exponent);

}  // namespace hyperis
