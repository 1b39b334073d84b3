#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "hyperis/errors.hpp"

namespace hyperis {

/// Vertex subsets over at most 62 vertices, one bit per vertex id.
using VertexMask = std::uint64_t;

/// Bitmask representation forces this hard ceiling; the user-facing caps
/// sit well below it.
inline constexpr int kMaskVertexLimit = 62;

/// Cardinality cap on a vertex set: |S ∩ members| <= cap.
/// A hyperedge e of size s that must not be fully contained is
/// {members = e, cap = s - 1}.
struct AtMostConstraint {
  VertexMask members = 0;
  int cap = 0;
};

/// Exact number of subsets S of {0,...,n-1} with forced_in ⊆ S,
/// S ∩ forced_out = ∅, satisfying every constraint. Backtracking with two
/// exact rules: a branch dies when a constraint already exceeds its cap,
/// and once no constraint can be violated anymore the remaining free
/// vertices contribute a factor 2^free in one step. Deterministic for any
/// constraint order.
mpz_class count_constrained_subsets(int n,
                                    std::span<const AtMostConstraint> constraints,
                                    VertexMask forced_in = 0,
                                    VertexMask forced_out = 0);

/// Visits every satisfying subset exactly once, in increasing order of the
/// inclusion bitmask. No bulk shortcut: each subset is materialized, so
/// this is for instances whose solution count is itself enumerable.
template <class Visitor>
void for_each_constrained_subset(int n,
                                 std::span<const AtMostConstraint> constraints,
                                 Visitor&& visit,
                                 VertexMask forced_in = 0,
                                 VertexMask forced_out = 0);

namespace detail {

struct EngineState {
  int n = 0;
  std::vector<AtMostConstraint> constraints;
  std::vector<int> included;       // decided-in members per constraint
  std::vector<int> undecided;      // undecided members per constraint
  std::vector<std::vector<int>> vertex_constraints;  // constraint ids per vertex

  // Returns false when a constraint is unsatisfiable before any decision
  // (negative cap, e.g. an empty hyperedge that may not be covered).
  bool init(int n_, std::span<const AtMostConstraint> cs, VertexMask in,
            VertexMask out);
};

}  // namespace detail

template <class Visitor>
void for_each_constrained_subset(int n,
                                 std::span<const AtMostConstraint> constraints,
                                 Visitor&& visit,
                                 VertexMask forced_in,
                                 VertexMask forced_out) {
  detail::EngineState st;
  if (!st.init(n, constraints, forced_in, forced_out)) return;

  // Recursion from the highest vertex down, excluded branch first, yields
  // masks in increasing numeric order.
  auto rec = [&](auto&& self, int v, VertexMask chosen) -> void {
    if (v < 0) {
      visit(chosen);
      return;
    }
    const VertexMask bit = VertexMask{1} << v;
    const bool may_exclude = (forced_in & bit) == 0;
    const bool may_include = (forced_out & bit) == 0;

    if (may_exclude) {
      for (int c : st.vertex_constraints[v]) st.undecided[c]--;
      self(self, v - 1, chosen);
      for (int c : st.vertex_constraints[v]) st.undecided[c]++;
    }
    if (may_include) {
      bool dead = false;
      for (int c : st.vertex_constraints[v]) {
        st.undecided[c]--;
        if (++st.included[c] > st.constraints[c].cap) dead = true;
      }
      if (!dead) self(self, v - 1, chosen | bit);
      for (int c : st.vertex_constraints[v]) {
        st.undecided[c]++;
        st.included[c]--;
      }
    }
  };
  rec(rec, n - 1, VertexMask{0});
}

}  // namespace hyperis
