#include <doctest.h>

#include <vector>

#include "hyperis/counting.hpp"
#include "hyperis/errors.hpp"
#include "hyperis/instances.hpp"
#include "hyperis/reduction.hpp"
#include "hyperis/rng.hpp"
#include "support.hpp"

using hyperis::count_independent_sets;
using hyperis::Hypergraph;
using hyperis::VertexMask;

TEST_CASE("counting basics") {
  CHECK(count_independent_sets(Hypergraph(0, {})) == 1);
  CHECK(count_independent_sets(Hypergraph(10, {})) == mpz_class(1) << 10);

  // single hyperedge of size k: only the full edge is excluded
  CHECK(count_independent_sets(Hypergraph(3, {{0, 1, 2}})) == 7);
  CHECK(count_independent_sets(Hypergraph(5, {{0, 1, 2}})) == 7 * 4);

  // triangle as a 2-uniform hypergraph: {}, {0}, {1}, {2}
  CHECK(count_independent_sets(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})) == 4);

  // one hyperedge on 3 vertices, the K2 gadget at k=3, b=1
  const auto gadget = hyperis::build_gadget(hyperis::gen_complete(2), {3, 1});
  CHECK(count_independent_sets(gadget.hypergraph) == 7);

  // an empty hyperedge is contained in every subset
  CHECK(count_independent_sets(Hypergraph(3, {{}})) == 0);
}

TEST_CASE("counter agrees with the naive filter") {
  hyperis::SplitMix64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const auto h = testsupport::random_hypergraph(rng, n, 8);
    CHECK(count_independent_sets(h) ==
          testsupport::naive_count_independent_sets(h));
  }
}

TEST_CASE("2-uniform count equals the graph independent-set count") {
  hyperis::SplitMix64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const auto g = testsupport::random_graph(rng, n);
    const auto h = Hypergraph::from_graph(g);
    CHECK(count_independent_sets(h) ==
          testsupport::naive_count_independent_sets(h));
  }
  CHECK(count_independent_sets(Hypergraph::from_graph(hyperis::gen_cycle(5))) ==
        11);
  CHECK(count_independent_sets(
            Hypergraph::from_graph(hyperis::gen_complete(4))) == 5);
}

TEST_CASE("enumeration is lexicographic and complete") {
  SUBCASE("single edge") {
    std::vector<VertexMask> sets;
    hyperis::enumerate_independent_sets(Hypergraph(2, {{0, 1}}),
                                        [&](VertexMask m) { sets.push_back(m); });
    CHECK(sets == std::vector<VertexMask>{0, 1, 2});
  }
  SUBCASE("edgeless pair") {
    std::vector<VertexMask> sets;
    hyperis::enumerate_independent_sets(Hypergraph(2, {}),
                                        [&](VertexMask m) { sets.push_back(m); });
    CHECK(sets == std::vector<VertexMask>{0, 1, 2, 3});
  }
  SUBCASE("triangle") {
    std::vector<VertexMask> sets;
    hyperis::enumerate_independent_sets(
        Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}),
        [&](VertexMask m) { sets.push_back(m); });
    CHECK(sets == std::vector<VertexMask>{0, 1, 2, 4});
  }
  SUBCASE("count equals enumeration length, order strictly increasing") {
    hyperis::SplitMix64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(10));
      const auto h = testsupport::random_hypergraph(rng, n, 7);
      mpz_class seen = 0;
      VertexMask prev = 0;
      bool ordered = true;
      hyperis::enumerate_independent_sets(h, [&](VertexMask m) {
        if (seen > 0 && m <= prev) ordered = false;
        prev = m;
        ++seen;
      });
      CHECK(ordered);
      CHECK(seen == count_independent_sets(h));
    }
  }
}

TEST_CASE("adding a hyperedge never increases the count") {
  hyperis::SplitMix64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    auto h = testsupport::random_hypergraph(rng, n, 5);
    auto edges = h.edges();
    std::vector<hyperis::VertexId> extra = {
        static_cast<hyperis::VertexId>(rng.below(n))};
    while (extra.size() < 2) {
      const auto v = static_cast<hyperis::VertexId>(rng.below(n));
      if (v != extra[0]) extra.push_back(v);
    }
    std::sort(extra.begin(), extra.end());
    if (std::find(edges.begin(), edges.end(), extra) != edges.end()) continue;
    edges.push_back(extra);
    const Hypergraph larger(n, edges);
    CHECK(count_independent_sets(larger) <= count_independent_sets(h));
  }
}

TEST_CASE("an isolated vertex exactly doubles the count") {
  hyperis::SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const auto h = testsupport::random_hypergraph(rng, n, 6);
    const Hypergraph extended(n + 1, h.edges());
    CHECK(count_independent_sets(extended) == 2 * count_independent_sets(h));
  }
}

TEST_CASE("vertex cap") {
  const Hypergraph big(31, {});
  CHECK_THROWS_AS(count_independent_sets(big), hyperis::InstanceTooLarge);
  CHECK(count_independent_sets(big, 31) == mpz_class(1) << 31);
  CHECK_THROWS_AS(count_independent_sets(Hypergraph(63, {}), 100),
                  hyperis::InstanceTooLarge);
  CHECK_THROWS_AS(
      hyperis::enumerate_independent_sets(big, [](VertexMask) {}),
      hyperis::InstanceTooLarge);
}
