#include "cacd/digraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "cacd/errors.hpp"

namespace cacd {

Digraph::Digraph(int n) : n_(n) {
    if (n < 1) throw PreconditionError("digraph needs at least one vertex");
    if (n > 64) throw BoundError("digraphs are capped at 64 vertices");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Digraph Digraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Digraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Digraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loops are not allowed");
    adj_[u] |= 1ull << v;
}

std::uint64_t Digraph::in_mask(int v) const {
    std::uint64_t mask = 0;
    for (int u = 0; u < n_; ++u)
        if (edge(u, v)) mask |= 1ull << u;
    return mask;
}

int Digraph::out_degree(int u) const { return std::popcount(adj_[u]); }

int Digraph::in_degree(int v) const { return std::popcount(in_mask(v)); }

int Digraph::edge_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u) total += out_degree(u);
    return total;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (edge(u, v)) out.emplace_back(u, v);
    return out;
}

Digraph Digraph::induced(const std::vector<int>& vertices) const {
    Digraph sub(static_cast<int>(vertices.size()));
    for (int a = 0; a < sub.n(); ++a)
        for (int b = 0; b < sub.n(); ++b)
            if (a != b && edge(vertices[a], vertices[b])) sub.add_edge(a, b);
    return sub;
}

BinaryMatrix augmented_adjacency(const Digraph& g) {
    BinaryMatrix m(g.n(), g.n());
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v)
            if (g.edge(u, v)) m.set(u, v, true);
        m.set(u, u, true);
    }
    return m;
}

Digraph underlying_graph(const Digraph& g) {
    Digraph u(g.n());
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            if (g.edge(a, b) || g.edge(b, a)) {
                u.add_edge(a, b);
                u.add_edge(b, a);
            }
    return u;
}

namespace {

std::vector<std::uint64_t> reachability(const Digraph& g) {
    // reach[u] = vertices reachable from u by a directed path (u included).
    std::vector<std::uint64_t> reach(g.n());
    for (int u = 0; u < g.n(); ++u) {
        std::uint64_t seen = 1ull << u;
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (int v = 0; v < g.n(); ++v)
                if ((frontier >> v) & 1u) next |= g.out_mask(v);
            frontier = next & ~seen;
            seen |= next;
        }
        reach[u] = seen;
    }
    return reach;
}

}  // namespace

DigraphPredicates predicates(const Digraph& g) {
    DigraphPredicates p;
    p.is_oriented = true;
    bool complete = true;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.edge(u, v) && g.edge(v, u)) p.is_oriented = false;
            if (!g.edge(u, v) && !g.edge(v, u)) complete = false;
        }
    p.is_tournament = p.is_oriented && complete;

    auto reach = reachability(g);
    p.is_unilateral = true;
    for (int u = 0; u < g.n() && p.is_unilateral; ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!((reach[u] >> v) & 1u) && !((reach[v] >> u) & 1u)) {
                p.is_unilateral = false;
                break;
            }

    Digraph und = underlying_graph(g);
    auto ureach = reachability(und);
    p.is_connected = std::popcount(ureach[0]) == g.n();
    return p;
}

bool has_directed_hamiltonian_cycle(const Digraph& g) {
    const int n = g.n();
    if (n == 1) return false;
    std::vector<int> path{0};
    std::uint64_t used = 1;
    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(path.size()) == n) return g.edge(path.back(), 0);
        for (int v = 1; v < n; ++v) {
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
    return extend();
}

std::optional<std::vector<int>> find_induced(const Digraph& host, const Digraph& pattern) {
    if (pattern.n() > host.n()) throw PreconditionError("pattern larger than host");
    const int pn = pattern.n();
    const int hn = host.n();

    // Assign high-degree pattern vertices first.
    std::vector<int> order(pn);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.out_degree(a) + pattern.in_degree(a) >
               pattern.out_degree(b) + pattern.in_degree(b);
    });

    std::vector<int> image(pn, -1);
    std::uint64_t used = 0;

    std::function<bool(int)> assign = [&](int depth) -> bool {
        if (depth == pn) return true;
        int pu = order[depth];
        for (int hv = 0; hv < hn; ++hv) {
            if ((used >> hv) & 1u) continue;
            if (host.out_degree(hv) < pattern.out_degree(pu)) continue;
            if (host.in_degree(hv) < pattern.in_degree(pu)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int pw = order[d];
                int hw = image[pw];
                ok = pattern.edge(pu, pw) == host.edge(hv, hw) &&
                     pattern.edge(pw, pu) == host.edge(hw, hv);
            }
            if (!ok) continue;
            image[pu] = hv;
            used |= 1ull << hv;
            if (assign(depth + 1)) return true;
            used &= ~(1ull << hv);
            image[pu] = -1;
        }
        return false;
    };

    if (!assign(0)) return std::nullopt;
    return image;
}

std::string canonical_form(const Digraph& g) {
    const int n = g.n();
    if (n > 8) throw BoundError("canonical_form is bounded at 8 vertices");

    // Vertices grouped by (outdeg, indeg); only class-respecting orders are tried.
    std::vector<std::array<int, 3>> profile(n);
    for (int v = 0; v < n; ++v) profile[v] = {g.out_degree(v), g.in_degree(v), v};
    std::sort(profile.begin(), profile.end());

    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || profile[i][0] != profile[i - 1][0] || profile[i][1] != profile[i - 1][1])
            classes.emplace_back();
        classes.back().push_back(profile[i][2]);
    }

    std::string best;
    std::vector<int> perm;  // perm[pos] = original vertex at position pos
    perm.reserve(n);

    auto emit = [&]() {
        std::string bits(static_cast<std::size_t>(n) * n, '0');
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (g.edge(perm[a], perm[b])) bits[static_cast<std::size_t>(a) * n + b] = '1';
        if (best.empty() || bits < best) best = std::move(bits);
    };

    std::function<void(std::size_t)> walk = [&](std::size_t ci) {
        if (ci == classes.size()) {
            emit();
            return;
        }
        std::vector<int> cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        do {
            for (int v : cls) perm.push_back(v);
            walk(ci + 1);
            perm.resize(perm.size() - cls.size());
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    walk(0);

    return std::to_string(n) + ":" + best;
}

Digraph complement_cycle(int n) {
    if (n < 4) throw PreconditionError("complement_cycle requires n >= 4");
    Digraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool consecutive = (j == (i + 1) % n) || (i == (j + 1) % n);
            if (!consecutive) g.add_edge(i, j);
        }
    return g;
}

Digraph digraph_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed digraph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw InputError("digraph JSON needs an integer field \"n\"");
    int n = doc["n"].get<int>();
    if (n < 1 || n > 64) throw InputError("digraph JSON: n out of range [1, 64]");
    Digraph g(n);
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InputError("digraph JSON: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw InputError("digraph JSON: each edge must be [u, v]");
            int u = e[0].get<int>();
            int v = e[1].get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError("digraph JSON: edge endpoint out of range");
            if (u == v) throw InputError("digraph JSON: self-loops are not allowed");
            if (g.edge(u, v)) throw InputError("digraph JSON: duplicate edge");
            g.add_edge(u, v);
        }
    }
    return g;
}

std::string digraph_to_json_text(const Digraph& g) {
    nlohmann::json doc;
    doc["n"] = g.n();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc.dump();
}

}  // namespace cacd
