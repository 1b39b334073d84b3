#pragma once

#include <gmpxx.h>

#include "hyperis/hypergraph.hpp"
#include "hyperis/subset_counter.hpp"

namespace hyperis {

/// Default exhaustive-search ceiling. A config knob, not a hard constant;
/// the bitmask engine itself tops out at kMaskVertexLimit.
inline constexpr int kDefaultCountCap = 30;

/// Exact number of (weak) independent sets of h: subsets containing no
/// hyperedge entirely. Throws InstanceTooLarge above the cap.
mpz_class count_independent_sets(const Hypergraph& h,
                                 int max_vertices = kDefaultCountCap);

/// Visits every independent set exactly once as an inclusion bitmask, in
/// increasing numeric order. Same cap as the counter.
template <class Visitor>
void enumerate_independent_sets(const Hypergraph& h, Visitor&& visit,
                                int max_vertices = kDefaultCountCap);

namespace detail {
std::vector<AtMostConstraint> edge_constraints(const Hypergraph& h);
void check_count_cap(const Hypergraph& h, int max_vertices);
}  // namespace detail

template <class Visitor>
void enumerate_independent_sets(const Hypergraph& h, Visitor&& visit,
                                int max_vertices) {
  detail::check_count_cap(h, max_vertices);
  const auto constraints = detail::edge_constraints(h);
  for_each_constrained_subset(h.vertex_count(), constraints,
                              std::forward<Visitor>(visit));
}

}  // namespace hyperis
