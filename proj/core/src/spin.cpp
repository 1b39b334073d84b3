#include "hyperis/spin.hpp"

#include <bit>
#include <cassert>
#include <string>
#include <vector>

#include "hyperis/errors.hpp"

namespace hyperis {

mpq_class rational_pow(const mpq_class& base, unsigned long exponent) {
  if (exponent == 0) return 1;  // includes 0^0 = 1
  mpq_class result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

SpinParams paper_params(int k, int b) {
  if (k < 2 || b < 1 || 2 * b > k) {
    throw InvalidParameters("paper_params: need k >= 2 and 1 <= b <= k/2, got k=" +
                            std::to_string(k) + " b=" + std::to_string(b));
  }
  SpinParams p;
  p.beta = 1;
  p.gamma = 1 - mpq_class(1, mpz_class(1) << (k - 2 * b));
  p.lambda = (mpz_class(1) << b) - 1;
  assert(p.antiferromagnetic());
  return p;
}

ConfigStats config_stats(const Graph& g, std::span<const std::uint8_t> sigma) {
  if (static_cast<int>(sigma.size()) != g.vertex_count()) {
    throw InvalidParameters("config_stats: assignment size " +
                            std::to_string(sigma.size()) +
                            " does not match vertex count " +
                            std::to_string(g.vertex_count()));
  }
  ConfigStats s;
  for (std::uint8_t v : sigma) {
    if (v == 0) s.zero_vertices++;
  }
  for (const auto& [u, v] : g.edges()) {
    if (sigma[u] == 0 && sigma[v] == 0) s.zero_zero_edges++;
    if (sigma[u] != 0 && sigma[v] != 0) s.one_one_edges++;
  }
  return s;
}

mpq_class config_weight(const SpinParams& p, const ConfigStats& s) {
  return rational_pow(p.lambda, s.zero_vertices) *
         rational_pow(p.beta, s.zero_zero_edges) *
         rational_pow(p.gamma, s.one_one_edges);
}

mpq_class partition_function(const Graph& g, const SpinParams& p,
                             int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices || n >= 63) {
    throw InstanceTooLarge("partition function: " + std::to_string(n) +
                           " vertices exceeds the cap of " +
                           std::to_string(max_vertices));
  }

  const int m = g.edge_count();
  std::vector<std::uint64_t> neighbor(n, 0);
  for (const auto& [u, v] : g.edges()) {
    neighbor[u] |= std::uint64_t{1} << v;
    neighbor[v] |= std::uint64_t{1} << u;
  }

  // Tally configurations by their (n0, m00, m11) statistics first; the
  // rational work is then one term per realized statistic.
  const std::size_t stride = static_cast<std::size_t>(m) + 1;
  std::vector<std::uint64_t> tally((n + 1) * stride * stride, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int m00 = 0, m11 = 0;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t nb = neighbor[v];
      if ((mask >> v) & 1) {
        m11 += std::popcount(nb & mask);
      } else {
        m00 += std::popcount(nb & ~mask);
      }
    }
    m00 /= 2;  // every monochromatic edge was seen from both endpoints
    m11 /= 2;
    const int n0 = n - std::popcount(mask);
    tally[(static_cast<std::size_t>(n0) * stride + m00) * stride + m11]++;
  }

  mpq_class total = 0;
  for (int n0 = 0; n0 <= n; ++n0) {
    for (int m00 = 0; m00 <= m; ++m00) {
      for (int m11 = 0; m11 <= m; ++m11) {
        const std::uint64_t c =
            tally[(static_cast<std::size_t>(n0) * stride + m00) * stride + m11];
        if (c == 0) continue;
        ConfigStats s{n0, m00, m11};
        total += mpq_class(mpz_class(c)) * config_weight(p, s);
      }
    }
  }
  return total;
}

}  // namespace hyperis
