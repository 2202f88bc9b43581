#include "cacd/oriented_cacd.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cacd/errors.hpp"
#include "cacd/proper_cacd.hpp"

namespace cacd {

int outdegree_zero_witness(const Digraph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.out_degree(v) == 0) return v;
    throw InternalInconsistencyError(
        "no outdegree-zero vertex exists; the input violates the lemma's hypotheses");
}

namespace {

// Directed cycle through every vertex of the induced subgraph on `alive`,
// or empty. Backtracking from the lowest alive vertex.
std::vector<int> spanning_cycle(const Digraph& g, const std::vector<int>& alive) {
    const int k = static_cast<int>(alive.size());
    if (k < 2) return {};
    std::vector<int> path{alive[0]};
    std::uint64_t used = 1ull << alive[0];
    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(path.size()) == k) return g.edge(path.back(), alive[0]);
        for (int v : alive) {
            if ((used >> v) & 1u) continue;
            if (!g.edge(path.back(), v)) continue;
            used |= 1ull << v;
            path.push_back(v);
            if (extend()) return true;
            path.pop_back();
            used &= ~(1ull << v);
        }
        return false;
    };
    if (!extend()) return {};
    return path;
}

}  // namespace

std::vector<int> hamiltonian_path(const Digraph& g) {
    std::vector<int> alive(g.n());
    std::iota(alive.begin(), alive.end(), 0);

    // Peeled outdegree-zero vertices, most recent first; the final path is
    // the solved core followed by the peeled stack.
    std::vector<int> peeled;

    std::vector<int> core_path;
    while (true) {
        if (alive.size() == 1) {
            core_path = {alive[0]};
            break;
        }
        std::vector<int> cycle = spanning_cycle(g, alive);
        if (!cycle.empty()) {
            // Rotate so the last vertex has an edge to the next peeled
            // vertex (any rotation works at the top level).
            int target = peeled.empty() ? -1 : peeled.back();
            int cut = -1;
            for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
                if (target < 0 || g.edge(cycle[i], target)) {
                    cut = i;
                    break;
                }
            }
            if (cut < 0)
                throw InternalInconsistencyError(
                    "spanning cycle has no edge into the peeled vertex; unilaterality violated");
            core_path.assign(cycle.begin() + cut + 1, cycle.end());
            core_path.insert(core_path.end(), cycle.begin(), cycle.begin() + cut + 1);
            break;
        }
        // No spanning cycle: peel an outdegree-zero vertex of the core.
        int v0 = -1;
        for (int v : alive) {
            bool sink = true;
            for (int w : alive)
                if (w != v && g.edge(v, w)) {
                    sink = false;
                    break;
                }
            if (sink) {
                v0 = v;
                break;
            }
        }
        if (v0 < 0)
            throw InternalInconsistencyError(
                "core has neither a spanning cycle nor an outdegree-zero vertex");
        peeled.push_back(v0);
        std::erase(alive, v0);
    }

    std::vector<int> path = core_path;
    while (!peeled.empty()) {
        int v = peeled.back();
        peeled.pop_back();
        if (!g.edge(path.back(), v))
            throw InternalInconsistencyError("splice edge " + std::to_string(path.back()) + "->" +
                                             std::to_string(v) + " is missing");
        path.push_back(v);
    }

    if (static_cast<int>(path.size()) != g.n())
        throw InternalInconsistencyError("constructed path does not cover every vertex");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.edge(path[i], path[i + 1]))
            throw InternalInconsistencyError("constructed path uses a missing edge");
    return path;
}

QuadrupleCheck check_quadruple_condition(const Digraph& g, const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    QuadrupleCheck out;
    if (n < 4) return out;

    auto violates = [&](int u, int v, int w, int x) {
        if (!g.edge(u, w)) return false;
        if (g.edge(u, v) && g.edge(v, w)) return false;
        if (g.edge(u, x) && g.edge(x, w)) return false;
        return true;
    };

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int q[4] = {sigma[a], sigma[b], sigma[c], sigma[d]};
                    for (int rot = 0; rot < 4; ++rot) {
                        int u = q[rot], v = q[(rot + 1) % 4], w = q[(rot + 2) % 4],
                            x = q[(rot + 3) % 4];
                        if (violates(u, v, w, x)) {
                            out.holds = false;
                            out.witness = {u, v, w, x};
                            return out;
                        }
                    }
                }
    return out;
}

Verdict recognize_oriented_proper_cacd(const Digraph& g) {
    if (!predicates(g).is_oriented) throw TypeError("input digraph is not oriented");
    if (g.n() > 9) throw BoundError("oriented-proper recognition is bounded at 9 vertices");

    const int n = g.n();
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);

    std::optional<std::vector<int>> accepted;
    do {
        std::vector<int> sigma{0};
        sigma.insert(sigma.end(), rest.begin(), rest.end());
        if (check_quadruple_condition(g, sigma).holds) {
            accepted = sigma;
            break;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));

    if (!accepted) {
        return reject_with(Witness{"exhausted-orderings",
                                   "no circular vertex ordering satisfies the quadruple condition",
                                   {}});
    }

    if (!recognize_proper_cacd(g).accepted)
        throw InternalInconsistencyError(
            "quadruple condition accepted but the proper recognizer rejects");

    Verdict v;
    v.accepted = true;
    v.circular_order = *accepted;
    return v;
}

std::optional<std::vector<int>> contains_complement_cycle(const Digraph& g, int k) {
    if (k < 4 || k > g.n())
        throw PreconditionError("complement-cycle search needs 4 <= k <= n");
    auto image = find_induced(underlying_graph(g), complement_cycle(k));
    if (!image) return std::nullopt;
    return image;
}

}  // namespace cacd
