#include "hyperis/reduction.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "hyperis/errors.hpp"

namespace hyperis {

namespace {

void check_params(ReductionParams p) {
  if (p.k < 2 || p.b < 1 || 2 * p.b > p.k) {
    throw InvalidParameters("reduction: need k >= 2 and 1 <= b <= k/2, got k=" +
                            std::to_string(p.k) + " b=" + std::to_string(p.b));
  }
}

std::vector<std::uint8_t> sigma_from_bits(std::uint32_t bits, int n) {
  std::vector<std::uint8_t> sigma(n);
  for (int v = 0; v < n; ++v) sigma[v] = (bits >> v) & 1;
  return sigma;
}

}  // namespace

VertexMask GadgetMap::block_mask(int v) const {
  VertexMask mask = 0;
  for (VertexId id : blocks[v]) mask |= VertexMask{1} << id;
  return mask;
}

Gadget build_gadget(const Graph& g, ReductionParams params) {
  check_params(params);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int fill = params.k - 2 * params.b;

  GadgetMap map;
  map.k = params.k;
  map.b = params.b;
  map.graph_vertices = n;
  map.graph_edges = g.edges();
  map.blocks.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < params.b; ++i) {
      map.blocks[v].push_back(static_cast<VertexId>(v * params.b + i));
    }
  }
  map.fillers.resize(m);
  const int filler_base = n * params.b;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < fill; ++i) {
      map.fillers[j].push_back(static_cast<VertexId>(filler_base + j * fill + i));
    }
  }

  std::vector<std::vector<VertexId>> hyperedges;
  hyperedges.reserve(m);
  for (int j = 0; j < m; ++j) {
    const auto& [u, v] = map.graph_edges[j];
    std::vector<VertexId> e;
    e.reserve(params.k);
    e.insert(e.end(), map.blocks[u].begin(), map.blocks[u].end());
    e.insert(e.end(), map.blocks[v].begin(), map.blocks[v].end());
    e.insert(e.end(), map.fillers[j].begin(), map.fillers[j].end());
    hyperedges.push_back(std::move(e));
  }

  // The Hypergraph constructor rejects duplicate hyperedges, which also
  // certifies that distinct graph edges produced distinct block unions in
  // the fillerless k = 2b case.
  return Gadget{Hypergraph(n * params.b + m * fill, std::move(hyperedges)),
                std::move(map)};
}

std::vector<std::uint8_t> classify_independent_set(VertexMask subset,
                                                   const GadgetMap& map) {
  std::vector<std::uint8_t> sigma(map.graph_vertices);
  for (int v = 0; v < map.graph_vertices; ++v) {
    const VertexMask block = map.block_mask(v);
    sigma[v] = (subset & block) == block ? 1 : 0;
  }
  return sigma;
}

mpz_class part_size_formula(std::span<const std::uint8_t> sigma,
                            const Graph& g, ReductionParams params) {
  check_params(params);
  const ConfigStats s = config_stats(g, sigma);
  const mpz_class fill_patterns = mpz_class(1) << (params.k - 2 * params.b);

  mpz_class result, factor;
  // 0^0 = 1 holds for mpz_pow_ui, which the k = 2b case relies on.
  mpz_pow_ui(result.get_mpz_t(), mpz_class(fill_patterns - 1).get_mpz_t(),
             static_cast<unsigned long>(s.one_one_edges));
  mpz_pow_ui(factor.get_mpz_t(), fill_patterns.get_mpz_t(),
             static_cast<unsigned long>(g.edge_count() - s.one_one_edges));
  result *= factor;
  mpz_pow_ui(factor.get_mpz_t(),
             mpz_class((mpz_class(1) << params.b) - 1).get_mpz_t(),
             static_cast<unsigned long>(s.zero_vertices));
  result *= factor;
  return result;
}

mpz_class count_class_by_search(std::span<const std::uint8_t> sigma,
                                const Gadget& gadget, int max_vertices) {
  detail::check_count_cap(gadget.hypergraph, max_vertices);
  if (static_cast<int>(sigma.size()) != gadget.map.graph_vertices) {
    throw InvalidParameters("count_class_by_search: assignment size mismatch");
  }

  auto constraints = detail::edge_constraints(gadget.hypergraph);
  VertexMask forced_in = 0;
  for (int v = 0; v < gadget.map.graph_vertices; ++v) {
    const VertexMask block = gadget.map.block_mask(v);
    if (sigma[v]) {
      forced_in |= block;
    } else {
      constraints.push_back({block, gadget.map.b - 1});
    }
  }
  return count_constrained_subsets(gadget.hypergraph.vertex_count(),
                                   constraints, forced_in);
}

namespace {

// Class sizes observed by walking every independent set once.
std::vector<mpz_class> classes_by_enumeration(const Gadget& gadget,
                                              const VerifyOptions& options) {
  const int n = gadget.map.graph_vertices;
  std::vector<VertexMask> block(n);
  for (int v = 0; v < n; ++v) block[v] = gadget.map.block_mask(v);

  std::vector<std::uint64_t> tally(std::size_t{1} << n, 0);
  enumerate_independent_sets(
      gadget.hypergraph,
      [&](VertexMask set) {
        std::uint32_t bits = 0;
        for (int v = 0; v < n; ++v) {
          if ((set & block[v]) == block[v]) bits |= std::uint32_t{1} << v;
        }
        tally[bits]++;
      },
      options.max_vertices);

  std::vector<mpz_class> counts(tally.size());
  for (std::size_t i = 0; i < tally.size(); ++i) counts[i] = tally[i];
  return counts;
}

// Class sizes observed by one constrained count per configuration.
std::vector<mpz_class> classes_by_search(const Gadget& gadget,
                                         const VerifyOptions& options) {
  const int n = gadget.map.graph_vertices;
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<mpz_class> counts(total);

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    for (std::uint32_t bits = 0; bits < total; ++bits) {
      counts[bits] = count_class_by_search(sigma_from_bits(bits, n), gadget,
                                           options.max_vertices);
    }
    return counts;
  }

  const std::uint32_t chunk = (total + threads - 1) / threads;
  std::vector<std::future<std::vector<mpz_class>>> futures;
  for (int t = 0; t < threads; ++t) {
    const std::uint32_t lo = std::min(total, t * chunk);
    const std::uint32_t hi = std::min(total, lo + chunk);
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      std::vector<mpz_class> part;
      part.reserve(hi - lo);
      for (std::uint32_t bits = lo; bits < hi; ++bits) {
        part.push_back(count_class_by_search(sigma_from_bits(bits, n), gadget,
                                             options.max_vertices));
      }
      return part;
    }));
  }
  std::size_t at = 0;
  for (auto& fut : futures) {
    for (auto& value : fut.get()) counts[at++] = std::move(value);
  }
  return counts;
}

}  // namespace

IdentityReport verify_identity(const Graph& g, ReductionParams params,
                               const VerifyOptions& options) {
  check_params(params);
  const Gadget gadget = build_gadget(g, params);
  const int n = g.vertex_count();
  if (n > 20) {
    throw InstanceTooLarge(
        "verify: the per-class table needs 2^|V| rows; |V| = " +
        std::to_string(n) + " exceeds 20");
  }

  IdentityReport report;
  report.independent_sets =
      count_independent_sets(gadget.hypergraph, options.max_vertices);
  report.partition_value = partition_function(g, paper_params(params.k, params.b),
                                              options.partition_max_vertices);
  const mpq_class scaled =
      report.partition_value *
      mpq_class(mpz_class(1) << (g.edge_count() * (params.k - 2 * params.b)));
  report.counts_match = scaled.get_den() == 1 &&
                        mpq_class(report.independent_sets) == scaled;
  report.scaled_partition = scaled.get_num() / scaled.get_den();

  if (const auto deg = g.regular_degree()) {
    report.regular = true;
    report.degree = *deg;
  }

  report.route = (n <= 20 && report.independent_sets <= options.enumeration_budget)
                     ? VerifyRoute::Enumeration
                     : VerifyRoute::PerClassCount;
  const std::vector<mpz_class> observed =
      report.route == VerifyRoute::Enumeration
          ? classes_by_enumeration(gadget, options)
          : classes_by_search(gadget, options);

  report.classes_match = true;
  mpz_class total = 0;
  const mpq_class scale(mpz_class(1)
                        << (g.edge_count() * (params.k - 2 * params.b)));
  const SpinParams spin = paper_params(params.k, params.b);
  report.classes_materialized = n <= options.table_vertex_limit;
  for (std::uint32_t bits = 0; bits < observed.size(); ++bits) {
    const auto sigma = sigma_from_bits(bits, n);
    const mpz_class expected = part_size_formula(sigma, g, params);
    // the closed form must also agree with the scaled configuration weight
    const mpq_class weight_route =
        scale * config_weight(spin, config_stats(g, sigma));
    if (observed[bits] != expected || mpq_class(expected) != weight_route) {
      report.classes_match = false;
    }
    total += observed[bits];
    if (report.classes_materialized) {
      report.classes.push_back({bits, observed[bits], expected});
    }
  }
  report.class_total_matches = total == report.independent_sets;
  report.pass = report.counts_match && report.classes_match &&
                report.class_total_matches;
  return report;
}

}  // namespace hyperis
