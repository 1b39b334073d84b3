#include <doctest.h>

#include "hyperis/errors.hpp"
#include "hyperis/hypergraph.hpp"
#include "hyperis/instances.hpp"
#include "hyperis/reduction.hpp"
#include "hyperis/rng.hpp"
#include "support.hpp"

using hyperis::Hypergraph;

TEST_CASE("hypergraph construction and validation") {
  const Hypergraph h(4, {{2, 0, 1}});
  CHECK(h.edges()[0] == std::vector<hyperis::VertexId>{0, 1, 2});

  CHECK_THROWS_AS(Hypergraph(3, {{0, 0, 1}}), hyperis::InvalidParameters);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), hyperis::InvalidParameters);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), hyperis::InvalidParameters);
}

TEST_CASE("max_degree") {
  CHECK(max_degree(Hypergraph(3, {{0, 1, 2}})) == 1);
  CHECK(max_degree(Hypergraph(5, {})) == 0);

  // block vertices of the K4 gadget keep the graph degree 3
  const auto gadget = hyperis::build_gadget(hyperis::gen_complete(4), {7, 3});
  CHECK(max_degree(gadget.hypergraph) == 3);
}

TEST_CASE("overlap") {
  CHECK(overlap(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}})) == 0);
  CHECK(overlap(Hypergraph(4, {{0, 1, 2}, {1, 2, 3}})) == 2);
  CHECK(overlap(Hypergraph(4, {{0, 1}})) == 0);
  CHECK(overlap(Hypergraph(4, {})) == 0);

  // adjacent graph edges share exactly one block of size b = 3
  const auto gadget = hyperis::build_gadget(hyperis::gen_complete(4), {7, 3});
  CHECK(overlap(gadget.hypergraph) == 3);
}

TEST_CASE("is_k_uniform") {
  CHECK(is_k_uniform(Hypergraph(3, {{0, 1}, {1, 2}}), 2));
  CHECK_FALSE(is_k_uniform(Hypergraph(4, {{0, 1}, {1, 2, 3}}), 2));
  CHECK(is_k_uniform(Hypergraph(4, {}), 99));

  const auto gadget = hyperis::build_gadget(hyperis::gen_cycle(4), {7, 3});
  CHECK(is_k_uniform(gadget.hypergraph, 7));
}

TEST_CASE("structural queries are relabeling invariants") {
  hyperis::SplitMix64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const auto h = testsupport::random_hypergraph(rng, n, 6);
    const auto perm = testsupport::random_permutation(rng, n);
    const auto relabeled = testsupport::relabel(h, perm);
    CHECK(max_degree(h) == max_degree(relabeled));
    CHECK(overlap(h) == overlap(relabeled));
    for (int k = 1; k <= 4; ++k) {
      CHECK(is_k_uniform(h, k) == is_k_uniform(relabeled, k));
    }
  }
}
