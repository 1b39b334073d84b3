#pragma once

#include <cstdint>

#include "hyperis/graph.hpp"

namespace hyperis {

/// Cycle C_n (2-regular), n >= 3.
Graph gen_cycle(int n);

/// Complete graph K_n ((n-1)-regular), n >= 2.
Graph gen_complete(int n);

/// Simple degree-regular graph from the pairing (configuration) model:
/// shuffle n*degree vertex stubs with the in-repo SplitMix64 generator,
/// pair consecutive stubs, and reject attempts containing self-loops or
/// repeated edges. Deterministic for a fixed seed. Requires n*degree even
/// and degree < n; throws GenerationFailure after 10^4 rejected attempts.
Graph gen_random_regular(int n, int degree, std::uint64_t seed);

}  // namespace hyperis
