#pragma once

#include <optional>
#include <vector>

#include "cacd/digraph.hpp"
#include "cacd/verdict.hpp"

namespace cacd {

/// A vertex of outdegree zero. Intended for oriented circular-arc catch
/// digraphs without a directed n-cycle, where one is guaranteed to exist;
/// inputs without one raise InternalInconsistencyError so harness sweeps can
/// flag the contradiction rather than silently continue.
int outdegree_zero_witness(const Digraph& g);

/// Directed Hamiltonian path of a unilateral oriented circular-arc catch
/// digraph, built by the peel-or-cut recursion: cut a spanning directed
/// cycle when one exists, otherwise remove an outdegree-zero vertex, solve
/// the rest, and splice it back through its guaranteed in-edge. Every
/// consumed edge is checked; a failed step raises
/// InternalInconsistencyError naming it.
std::vector<int> hamiltonian_path(const Digraph& g);

struct QuadrupleCheck {
    bool holds = true;
    std::vector<int> witness;  // violating (u, v, w, x) when !holds
};

/// For every cyclically ordered quadruple u < v < w < x of sigma with
/// uw in E: either uv, vw in E or ux, xw in E. sigma[pos] = vertex.
QuadrupleCheck check_quadruple_condition(const Digraph& g, const std::vector<int>& sigma);

/// Oriented proper recognition via the circular-vertex-ordering
/// characterization: searches rotation-reduced orderings (vertex 0
/// anchored, reversals counted as distinct candidates) for one passing the
/// quadruple condition. Accepts with the first such sigma in lexicographic
/// order, cross-checked against recognize_proper_cacd. Requires an oriented
/// digraph (TypeError otherwise); bounded at 9 vertices.
Verdict recognize_oriented_proper_cacd(const Digraph& g);

/// Vertex set inducing the complement of a k-cycle in the underlying graph
/// of g, or nullopt. Requires 4 <= k <= g.n().
std::optional<std::vector<int>> contains_complement_cycle(const Digraph& g, int k);

}  // namespace cacd
