#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "hyperis/counting.hpp"
#include "hyperis/graph.hpp"
#include "hyperis/hypergraph.hpp"
#include "hyperis/spin.hpp"

namespace hyperis {

/// Gadget shape: hyperedge size k, block size b. Valid when k >= 2 and
/// 1 <= 2b <= k, so each hyperedge holds two blocks plus k-2b fillers.
struct ReductionParams {
  int k = 2;
  int b = 1;
};

/// Bookkeeping of the gadget's vertex layout. Vertex ids are assigned
/// blocks-first (grouped by graph vertex, ascending), then fillers
/// (grouped by graph edge in canonical order); blocks and fillers are
/// pairwise disjoint and jointly cover all gadget vertices.
struct GadgetMap {
  int k = 0;
  int b = 0;
  int graph_vertices = 0;
  std::vector<Edge> graph_edges;                  // canonical order
  std::vector<std::vector<VertexId>> blocks;      // per graph vertex, size b
  std::vector<std::vector<VertexId>> fillers;     // per graph edge, size k-2b

  /// Inclusion mask of the block of graph vertex v.
  VertexMask block_mask(int v) const;
};

struct Gadget {
  Hypergraph hypergraph;
  GadgetMap map;
};

/// Builds the hypergraph that replaces each graph vertex with a block of b
/// vertices and pads each edge with k-2b private fillers. The result is
/// k-uniform with |E| hyperedges on b|V| + (k-2b)|E| vertices, overlap at
/// most b; block vertices keep their graph degree and fillers have
/// degree 1.
Gadget build_gadget(const Graph& g, ReductionParams params);

/// Spin configuration induced by a subset of gadget vertices:
/// sigma(v) = 1 iff the whole block of v is contained in the subset.
/// Total on all subsets; independence is the caller's concern.
std::vector<std::uint8_t> classify_independent_set(VertexMask subset,
                                                   const GadgetMap& map);

/// Closed-form size of the class of independent sets inducing sigma:
///   (2^(k-2b)-1)^m11 * (2^(k-2b))^(|E|-m11) * (2^b-1)^n0.
mpz_class part_size_formula(std::span<const std::uint8_t> sigma,
                            const Graph& g, ReductionParams params);

/// Exact number of independent sets of the gadget inducing sigma, computed
/// by constrained backtracking (no product structure assumed): blocks of
/// 1-vertices are forced in, blocks of 0-vertices may not be complete, and
/// no hyperedge may be complete.
mpz_class count_class_by_search(std::span<const std::uint8_t> sigma,
                                const Gadget& gadget,
                                int max_vertices = kDefaultCountCap);

struct VerifyOptions {
  int max_vertices = kDefaultCountCap;      // gadget-size cap for counting
  int partition_max_vertices = kDefaultPartitionCap;
  // Class sizes come from enumerate+classify when the total count is at
  // most this budget, and from per-class constrained counts otherwise.
  mpz_class enumeration_budget = mpz_class(1) << 25;
  int threads = 1;
  // Materialize the per-class table only when the graph has at most this
  // many vertices (the table has 2^|V| rows).
  int table_vertex_limit = 12;
};

enum class VerifyRoute { Enumeration, PerClassCount };

struct ClassRow {
  std::uint32_t sigma_bits = 0;  // bit v = sigma(v)
  mpz_class observed;
  mpz_class expected;
};

struct IdentityReport {
  mpz_class independent_sets;   // brute-force gadget count
  mpq_class partition_value;    // Z(G) at paper_params(k, b)
  mpz_class scaled_partition;   // 2^(|E|(k-2b)) * Z(G)
  bool counts_match = false;    // independent_sets == scaled_partition
  bool classes_match = false;   // every class size equals the formula
  bool class_total_matches = false;  // sum of class sizes == total count
  bool pass = false;
  bool regular = false;         // regime claims need a regular input graph
  int degree = 0;               // valid when regular
  VerifyRoute route = VerifyRoute::Enumeration;
  std::vector<ClassRow> classes;  // materialized only for small graphs
  bool classes_materialized = false;
};

/// Counts the gadget's independent sets two ways -- brute force on the
/// hypergraph, and 2^(|E|(k-2b)) * Z(G) on the spin side -- and checks
/// every per-class size against the closed formula. All equalities exact.
IdentityReport verify_identity(const Graph& g, ReductionParams params,
                               const VerifyOptions& options = {});

}  // namespace hyperis
