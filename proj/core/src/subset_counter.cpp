#include "hyperis/subset_counter.hpp"

#include <bit>
#include <limits>
#include <string>

namespace hyperis {

namespace detail {

bool EngineState::init(int n_, std::span<const AtMostConstraint> cs,
                       VertexMask forced_in, VertexMask forced_out) {
  if (n_ < 0 || n_ > kMaskVertexLimit) {
    throw InvalidParameters("subset counter: vertex count " +
                            std::to_string(n_) + " outside [0, " +
                            std::to_string(kMaskVertexLimit) + "]");
  }
  if (forced_in & forced_out) {
    throw InvalidParameters("subset counter: vertex forced both in and out");
  }
  const VertexMask universe =
      n_ == 0 ? 0 : (~VertexMask{0} >> (64 - n_));
  if ((forced_in | forced_out) & ~universe) {
    throw InvalidParameters("subset counter: forced vertex out of range");
  }

  n = n_;
  constraints.assign(cs.begin(), cs.end());
  included.assign(cs.size(), 0);
  undecided.assign(cs.size(), 0);
  vertex_constraints.assign(static_cast<std::size_t>(n), {});

  bool feasible = true;
  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    const auto& c = constraints[ci];
    if (c.members & ~universe) {
      throw InvalidParameters("subset counter: constraint member out of range");
    }
    undecided[ci] = std::popcount(c.members);
    if (c.cap < 0) feasible = false;
    VertexMask m = c.members;
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      vertex_constraints[v].push_back(static_cast<int>(ci));
    }
  }
  return feasible;
}

}  // namespace detail

namespace {

class Counter {
 public:
  Counter(detail::EngineState& st) : st_(st) {}

  mpz_class run(VertexMask undecided_mask) { return count(undecided_mask); }

 private:
  mpz_class count(VertexMask undecided_mask) {
    // Pick the tightest still-violable constraint; if none, every
    // completion over the undecided vertices is feasible.
    int branch_constraint = -1;
    int branch_slack = std::numeric_limits<int>::max();
    for (std::size_t ci = 0; ci < st_.constraints.size(); ++ci) {
      if (st_.included[ci] + st_.undecided[ci] > st_.constraints[ci].cap &&
          st_.undecided[ci] < branch_slack) {
        branch_slack = st_.undecided[ci];
        branch_constraint = static_cast<int>(ci);
      }
    }
    if (branch_constraint < 0) {
      mpz_class all = 1;
      all <<= std::popcount(undecided_mask);
      return all;
    }

    const VertexMask candidates =
        st_.constraints[branch_constraint].members & undecided_mask;
    const int v = std::countr_zero(candidates);
    const VertexMask rest = undecided_mask & ~(VertexMask{1} << v);

    mpz_class total = 0;
    for (int c : st_.vertex_constraints[v]) st_.undecided[c]--;
    total += count(rest);

    bool dead = false;
    for (int c : st_.vertex_constraints[v]) {
      if (++st_.included[c] > st_.constraints[c].cap) dead = true;
    }
    if (!dead) total += count(rest);
    for (int c : st_.vertex_constraints[v]) {
      st_.included[c]--;
      st_.undecided[c]++;
    }
    return total;
  }

  detail::EngineState& st_;
};

}  // namespace

mpz_class count_constrained_subsets(int n,
                                    std::span<const AtMostConstraint> constraints,
                                    VertexMask forced_in,
                                    VertexMask forced_out) {
  detail::EngineState st;
  if (!st.init(n, constraints, forced_in, forced_out)) return 0;

  // Apply the forced decisions up front.
  VertexMask m = forced_in;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    for (int c : st.vertex_constraints[v]) {
      st.included[c]++;
      st.undecided[c]--;
    }
  }
  m = forced_out;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    for (int c : st.vertex_constraints[v]) st.undecided[c]--;
  }
  for (std::size_t ci = 0; ci < st.constraints.size(); ++ci) {
    if (st.included[ci] > st.constraints[ci].cap) return 0;
  }

  const VertexMask universe = n == 0 ? 0 : (~VertexMask{0} >> (64 - n));
  return Counter(st).run(universe & ~(forced_in | forced_out));
}

}  // namespace hyperis
