#include "hyperis/counting.hpp"

#include <string>

#include "hyperis/errors.hpp"

namespace hyperis {

namespace detail {

std::vector<AtMostConstraint> edge_constraints(const Hypergraph& h) {
  std::vector<AtMostConstraint> constraints;
  constraints.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    VertexMask members = 0;
    for (VertexId v : e) members |= VertexMask{1} << v;
    constraints.push_back({members, static_cast<int>(e.size()) - 1});
  }
  return constraints;
}

void check_count_cap(const Hypergraph& h, int max_vertices) {
  if (h.vertex_count() > max_vertices ||
      h.vertex_count() > kMaskVertexLimit) {
    throw InstanceTooLarge(
        "independent-set search: " + std::to_string(h.vertex_count()) +
        " vertices exceeds the cap of " +
        std::to_string(std::min(max_vertices, kMaskVertexLimit)));
  }
}

}  // namespace detail

mpz_class count_independent_sets(const Hypergraph& h, int max_vertices) {
  detail::check_count_cap(h, max_vertices);
  const auto constraints = detail::edge_constraints(h);
  return count_constrained_subsets(h.vertex_count(), constraints);
}

}  // namespace hyperis
