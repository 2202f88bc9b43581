#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cacd/binary_matrix.hpp"

namespace cacd {

/// Simple directed graph on vertices 0..n-1, dense bit-matrix adjacency.
/// No self-loops. Values are immutable in practice: every operation in the
/// toolkit is a pure function over const digraphs.
class Digraph {
public:
    explicit Digraph(int n);
    static Digraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);

    /// Out-neighborhood of u as a bitmask (bit v set iff u->v).
    std::uint64_t out_mask(int u) const { return adj_[u]; }
    std::uint64_t in_mask(int v) const;

    int out_degree(int u) const;
    int in_degree(int v) const;
    int edge_count() const;

    std::vector<std::pair<int, int>> edges() const;

    Digraph induced(const std::vector<int>& vertices) const;

    bool operator==(const Digraph& other) const = default;

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

struct DigraphPredicates {
    bool is_oriented = false;
    bool is_tournament = false;
    bool is_unilateral = false;
    bool is_connected = false;
};

/// A*(G): adjacency with the principal diagonal set to 1.
BinaryMatrix augmented_adjacency(const Digraph& g);

/// U(G): symmetric digraph with uv and vu present iff uv in E or vu in E.
Digraph underlying_graph(const Digraph& g);

DigraphPredicates predicates(const Digraph& g);

bool has_directed_hamiltonian_cycle(const Digraph& g);

/// Injective map phi with host[phi(u)][phi(v)] = pattern[u][v] for all u != v,
/// or nullopt. Backtracking with degree-sequence pruning.
std::optional<std::vector<int>> find_induced(const Digraph& host, const Digraph& pattern);

/// Canonical byte string: equal strings iff isomorphic. Minimum adjacency
/// bit-string over all degree-profile-respecting vertex permutations.
/// Bounded at n <= 8.
std::string canonical_form(const Digraph& g);

/// Complement of the n-cycle as a symmetric digraph: i,j adjacent iff they
/// are not consecutive modulo n. Requires n >= 4.
Digraph complement_cycle(int n);

/// Wire format {"n": <int>, "edges": [[u,v], ...]}; duplicate or out-of-range
/// edges and self-loops are rejected.
Digraph digraph_from_json_text(const std::string& text);
std::string digraph_to_json_text(const Digraph& g);

}  // namespace cacd
