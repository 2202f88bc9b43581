#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "cacd/digraph.hpp"
#include "cacd/errors.hpp"
#include "fixtures.hpp"

using namespace cacd;

TEST_CASE("augmented adjacency on small cases") {
    Digraph g = Digraph::from_edges(2, {{0, 1}});
    BinaryMatrix m = augmented_adjacency(g);
    CHECK(m.get(0, 0));
    CHECK(m.get(0, 1));
    CHECK_FALSE(m.get(1, 0));
    CHECK(m.get(1, 1));

    BinaryMatrix one = augmented_adjacency(Digraph(1));
    CHECK(one.get(0, 0));

    BinaryMatrix cyc = augmented_adjacency(fixtures::directed_cycle(3));
    CHECK(cyc == BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
}

TEST_CASE("augmented adjacency is idempotent on the diagonal") {
    Digraph g = fixtures::worked_digraph();
    BinaryMatrix once = augmented_adjacency(g);
    // re-augmenting the realized matrix changes nothing
    Digraph withdiag(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v && once.get(u, v)) withdiag.add_edge(u, v);
    CHECK(augmented_adjacency(withdiag) == once);
}

TEST_CASE("underlying graph is symmetric and loop-free") {
    CHECK(underlying_graph(Digraph::from_edges(2, {{0, 1}})) ==
          Digraph::from_edges(2, {{0, 1}, {1, 0}}));
    Digraph tri = underlying_graph(fixtures::directed_cycle(3));
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(tri.edge(u, v) == (u != v));
    Digraph empty(3);
    CHECK(underlying_graph(empty) == empty);
}

TEST_CASE("predicates") {
    auto p = predicates(fixtures::directed_cycle(3));
    CHECK(p.is_oriented);
    CHECK(p.is_tournament);
    CHECK(p.is_unilateral);
    CHECK(p.is_connected);

    auto digon = predicates(Digraph::from_edges(2, {{0, 1}, {1, 0}}));
    CHECK_FALSE(digon.is_oriented);

    auto split = predicates(Digraph::from_edges(3, {{0, 1}}));
    CHECK_FALSE(split.is_unilateral);
    CHECK_FALSE(split.is_connected);
}

TEST_CASE("find_induced basics") {
    CHECK_FALSE(
        find_induced(fixtures::transitive_tournament(4), fixtures::directed_cycle(3)).has_value());

    auto pair = find_induced(fixtures::directed_cycle(4), fixtures::directed_path(2));
    REQUIRE(pair.has_value());
    CHECK(fixtures::directed_cycle(4).edge((*pair)[0], (*pair)[1]));

    auto tri = find_induced(fixtures::d3_tournament(), fixtures::directed_cycle(3));
    REQUIRE(tri.has_value());
    std::set<int> image(tri->begin(), tri->end());
    CHECK(image == std::set<int>{0, 1, 2});
}

TEST_CASE("find_induced image verifies entrywise and absence matches brute force") {
    // deterministic pseudo-random hosts and patterns
    std::uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    for (int trial = 0; trial < 60; ++trial) {
        int hn = 3 + static_cast<int>(next() % 3);  // 3..5
        int pn = 2 + static_cast<int>(next() % 2);  // 2..3
        Digraph host(hn), pattern(pn);
        for (int u = 0; u < hn; ++u)
            for (int v = 0; v < hn; ++v)
                if (u != v && next() % 3 == 0) host.add_edge(u, v);
        for (int u = 0; u < pn; ++u)
            for (int v = 0; v < pn; ++v)
                if (u != v && next() % 3 == 0) pattern.add_edge(u, v);

        auto found = find_induced(host, pattern);
        // brute force over all injections
        bool exists = false;
        std::vector<int> pick(pn, -1);
        std::function<void(int, std::uint64_t)> rec = [&](int d, std::uint64_t used) {
            if (exists) return;
            if (d == pn) {
                for (int a = 0; a < pn; ++a)
                    for (int b = 0; b < pn; ++b)
                        if (a != b && pattern.edge(a, b) != host.edge(pick[a], pick[b])) return;
                exists = true;
                return;
            }
            for (int h = 0; h < hn; ++h)
                if (!((used >> h) & 1u)) {
                    pick[d] = h;
                    rec(d + 1, used | (1ull << h));
                }
        };
        rec(0, 0);
        CHECK(found.has_value() == exists);
        if (found) {
            for (int a = 0; a < pn; ++a)
                for (int b = 0; b < pn; ++b)
                    if (a != b) CHECK(pattern.edge(a, b) == host.edge((*found)[a], (*found)[b]));
        }
    }
}

TEST_CASE("canonical form identifies relabelings and separates classes") {
    Digraph c3 = fixtures::directed_cycle(3);
    Digraph relabeled = Digraph::from_edges(3, {{1, 0}, {0, 2}, {2, 1}});
    CHECK(canonical_form(c3) == canonical_form(relabeled));

    Digraph transitive = Digraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(canonical_form(c3) != canonical_form(transitive));

    CHECK_THROWS_AS(canonical_form(Digraph(9)), BoundError);
}

TEST_CASE("canonical form partitions all labeled digraphs up to 4 vertices") {
    std::map<int, std::size_t> expected = {{3, 16}, {4, 218}};  // digraph classes
    for (int n : {3, 4}) {
        std::map<std::string, Digraph> reps;
        const int pairs = n * (n - 1);
        bool embeddings_ok = true;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Digraph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    if ((mask >> bit) & 1) g.add_edge(u, v);
                    ++bit;
                }
            auto [it, inserted] = reps.emplace(canonical_form(g), g);
            if (!inserted) {
                // same class: mutual induced embeddings at full order must exist
                embeddings_ok = embeddings_ok && find_induced(it->second, g).has_value() &&
                                find_induced(g, it->second).has_value();
            }
        }
        CHECK(embeddings_ok);
        CHECK(reps.size() == expected[n]);
    }
}

TEST_CASE("complement cycle shapes") {
    Digraph c4 = complement_cycle(4);
    CHECK(c4.edge_count() == 4);  // perfect matching, both directions
    CHECK(c4.edge(0, 2));
    CHECK(c4.edge(1, 3));
    CHECK_FALSE(c4.edge(0, 1));

    Digraph c5 = complement_cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.out_degree(v) == 2);

    Digraph c8 = complement_cycle(8);
    for (int v = 0; v < 8; ++v) CHECK(c8.out_degree(v) == 5);
    CHECK(c8.edge_count() == 40);  // 20 undirected edges

    CHECK_THROWS_AS(complement_cycle(3), PreconditionError);
}

TEST_CASE("digraph json round trip and rejection") {
    Digraph g = fixtures::d3_tournament();
    CHECK(digraph_from_json_text(digraph_to_json_text(g)) == g);

    CHECK_THROWS_AS(digraph_from_json_text("{"), InputError);
    CHECK_THROWS_AS(digraph_from_json_text(R"({"edges": []})"), InputError);
    CHECK_THROWS_AS(digraph_from_json_text(R"({"n": 2, "edges": [[0, 0]]})"), InputError);
    CHECK_THROWS_AS(digraph_from_json_text(R"({"n": 2, "edges": [[0, 1], [0, 1]]})"), InputError);
    CHECK_THROWS_AS(digraph_from_json_text(R"({"n": 2, "edges": [[0, 5]]})"), InputError);
}
