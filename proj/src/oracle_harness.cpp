#include "cacd/oracle_harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include <json.hpp>

#include "cacd/cacd_recognition.hpp"
#include "cacd/circular_ones.hpp"
#include "cacd/errors.hpp"
#include "cacd/oriented_cacd.hpp"
#include "cacd/proper_cacd.hpp"

namespace cacd {

namespace {

int worker_count() {
    if (const char* env = std::getenv("CACD_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Chunked parallel map over [0, total); results are merged in chunk order so
// reports stay deterministic.
template <typename Accum, typename Body, typename Merge>
Accum parallel_accumulate(std::uint64_t total, const Body& body, const Merge& merge) {
    int workers = worker_count();
    if (workers <= 1 || total < 1024) {
        Accum acc{};
        for (std::uint64_t i = 0; i < total; ++i) body(acc, i);
        return acc;
    }
    std::vector<Accum> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = chunk * w;
        std::uint64_t end = std::min(total, begin + chunk);
        threads.emplace_back([&, w, begin, end]() {
            for (std::uint64_t i = begin; i < end; ++i) body(parts[w], i);
        });
    }
    for (auto& t : threads) t.join();
    Accum acc{};
    for (auto& part : parts) merge(acc, part);
    return acc;
}

std::vector<Digraph> extend_classes(const std::vector<Digraph>& smaller, int n, int states) {
    // states = 2: tournaments (v->new / new->v); states = 3: oriented (+none)
    std::map<std::string, Digraph> classes;
    const int k = n - 1;
    std::uint64_t patterns = 1;
    for (int i = 0; i < k; ++i) patterns *= states;
    for (const Digraph& base : smaller) {
        for (std::uint64_t pat = 0; pat < patterns; ++pat) {
            Digraph g(n);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            std::uint64_t p = pat;
            for (int v = 0; v < k; ++v) {
                int state = static_cast<int>(p % states);
                p /= states;
                if (states == 2) {
                    if (state == 0)
                        g.add_edge(v, k);
                    else
                        g.add_edge(k, v);
                } else {
                    if (state == 1)
                        g.add_edge(v, k);
                    else if (state == 2)
                        g.add_edge(k, v);
                }
            }
            classes.emplace(canonical_form(g), g);
        }
    }
    std::vector<Digraph> out;
    out.reserve(classes.size());
    for (auto& [canon, g] : classes) out.push_back(g);
    return out;
}

const std::vector<Digraph>& cached_classes(int n, int states) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Digraph>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(n, states);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<Digraph> result;
    if (n == 1) {
        result.push_back(Digraph(1));
    } else {
        // build recursively under the same lock
        std::vector<Digraph> smaller;
        {
            auto skey = std::make_pair(n - 1, states);
            if (auto it = cache.find(skey); it != cache.end()) {
                smaller = it->second;
            } else {
                smaller.push_back(Digraph(1));
                for (int k = 2; k <= n - 1; ++k) smaller = extend_classes(smaller, k, states);
                cache[skey] = smaller;
            }
        }
        result = extend_classes(smaller, n, states);
    }
    return cache[key] = std::move(result);
}

}  // namespace

std::vector<Digraph> enumerate_tournaments(int n) {
    if (n < 1 || n > 7) throw BoundError("tournament enumeration is bounded at n <= 7");
    auto classes = cached_classes(n, 2);
    static const std::uint64_t known[] = {0, 1, 1, 2, 4, 12, 56, 456};
    if (classes.size() != known[n])
        throw InternalInconsistencyError("tournament class count mismatch at n=" +
                                         std::to_string(n) + ": got " +
                                         std::to_string(classes.size()));
    return classes;
}

std::vector<Digraph> enumerate_oriented_digraphs(int n) {
    if (n < 1 || n > 6) throw BoundError("oriented enumeration is bounded at n <= 6");
    return cached_classes(n, 3);
}

SetSystem set_system(const Digraph& tournament, const std::array<int, 3>& cycle) {
    const auto [c0, c1, c2] = cycle;
    if (!tournament.edge(c0, c1) || !tournament.edge(c1, c2) || !tournament.edge(c2, c0))
        throw PreconditionError("the three vertices do not form a directed 3-cycle");

    SetSystem sys;
    sys.partitions = true;
    for (int v = 0; v < tournament.n(); ++v) {
        if (v == c0 || v == c1 || v == c2) continue;
        int in_count = 0;
        std::array<bool, 3> in{};
        const std::array<int, 3> c = {c0, c1, c2};
        for (int i = 0; i < 3; ++i) {
            in[i] = tournament.edge(c[i], v);
            in_count += in[i] ? 1 : 0;
        }
        if (in_count == 3) {
            sys.s4.push_back(v);
        } else if (in_count == 1) {
            for (int i = 0; i < 3; ++i)
                if (in[i]) sys.s_dprime[i].push_back(v);
        } else if (in_count == 2) {
            // in-neighbors are cycle[i] and cycle[i+2]; the out-neighbor is
            // cycle[i+1]
            for (int i = 0; i < 3; ++i)
                if (in[i] && in[(i + 2) % 3]) sys.s_prime[i].push_back(v);
        } else {
            sys.partitions = false;  // v dominates the cycle: a D3 is present
        }
    }
    return sys;
}

namespace {

Digraph explicit_d3() {
    // directed 3-cycle plus a vertex dominating it
    return Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
}

// Tries to tie a derived 7-vertex member to one of the proof's set-system
// patterns. Returns the label or "" plus a note.
std::pair<std::string, std::string> annotate_seven(const Digraph& t) {
    std::vector<std::string> labels;
    for (int a = 0; a < t.n(); ++a)
        for (int b = 0; b < t.n(); ++b)
            for (int c = 0; c < t.n(); ++c) {
                if (a == b || b == c || a == c) continue;
                if (!(t.edge(a, b) && t.edge(b, c) && t.edge(c, a))) continue;
                SetSystem sys = set_system(t, {a, b, c});
                if (!sys.partitions) continue;

                auto np = [&](int i) { return !sys.s_prime[i].empty(); };
                auto nd = [&](int i) { return !sys.s_dprime[i].empty(); };
                bool s4 = !sys.s4.empty();
                int total = static_cast<int>(sys.s4.size());
                for (int i = 0; i < 3; ++i)
                    total += static_cast<int>(sys.s_prime[i].size() + sys.s_dprime[i].size());
                if (total != 4 || !s4) continue;

                if (np(0) && np(1) && np(2) && !nd(0) && !nd(1) && !nd(2)) {
                    labels.push_back("D4");
                    continue;
                }
                if (nd(0) && nd(1) && nd(2) && !np(0) && !np(1) && !np(2)) {
                    labels.push_back("D5");
                    continue;
                }
                for (int i = 0; i < 3; ++i) {
                    int j = (i + 2) % 3;
                    bool d6 = np(j) && nd(j) && nd(i) && !np(i) && !np((i + 1) % 3) &&
                              !nd((i + 1) % 3);
                    bool d7 = np(j) && np(i) && nd(i) && !nd(j) && !np((i + 1) % 3) &&
                              !nd((i + 1) % 3);
                    if (d6) labels.push_back("D6");
                    if (d7) labels.push_back("D7");
                }
            }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() == 1)
        return {labels[0], "matched the set-system pattern of " + labels[0]};
    if (labels.empty()) return {"", "no set-system pattern matched"};
    std::string all;
    for (const auto& l : labels) all += (all.empty() ? "" : ",") + l;
    return {"", "ambiguous set-system patterns: " + all};
}

}  // namespace

ForbiddenCatalog derive_forbidden_catalog(int max_n) {
    if (max_n < 3 || max_n > 7)
        throw BoundError("catalog derivation scans tournament orders 3..7");
    ForbiddenCatalog catalog;
    for (int n = 3; n <= max_n; ++n) {
        for (const Digraph& t : enumerate_tournaments(n)) {
            if (recognize_cacd(t).accepted) continue;
            bool minimal = true;
            for (int drop = 0; drop < n && minimal; ++drop) {
                std::vector<int> keep;
                for (int v = 0; v < n; ++v)
                    if (v != drop) keep.push_back(v);
                minimal = recognize_cacd(t.induced(keep)).accepted;
            }
            if (!minimal) continue;
            CatalogEntry entry{t, canonical_form(t), n, "", ""};
            catalog.entries.push_back(std::move(entry));
        }
    }

    int four = 0, seven = 0, other = 0;
    for (auto& entry : catalog.entries) {
        if (entry.n == 4) {
            ++four;
            if (canonical_form(explicit_d3()) == entry.canon) {
                entry.paper_name = "D3";
                entry.annotation_note =
                    "isomorphic to the directed 3-cycle dominated by a fourth vertex";
            } else {
                entry.annotation_note = "4-vertex member does not match the D3 description";
            }
        } else if (entry.n == 7) {
            ++seven;
            auto [name, note] = annotate_seven(entry.representative);
            entry.paper_name = name;
            entry.annotation_note = note;
        } else {
            ++other;
            entry.annotation_note =
                "minimal member on " + std::to_string(entry.n) +
                " vertices, outside the named family of one 4-vertex and four "
                "7-vertex digraphs";
        }
    }

    bool named = four == 1 && !catalog.entries.empty() && catalog.entries.front().paper_name == "D3";
    std::vector<std::string> seven_names;
    for (const auto& e : catalog.entries)
        if (e.n == 7 && !e.paper_name.empty()) seven_names.push_back(e.paper_name);
    std::sort(seven_names.begin(), seven_names.end());
    bool seven_named = seven_names == std::vector<std::string>{"D4", "D5", "D6", "D7"};

    catalog.matches_expected_profile = four == 1 && seven == 4 && other == 0;
    std::string orders;
    for (const auto& e : catalog.entries)
        orders += (orders.empty() ? "" : ",") + std::to_string(e.n);
    catalog.report = "minimal non-CACD tournaments: " + std::to_string(four) +
                     " on 4 vertices, " + std::to_string(seven) + " on 7 vertices, " +
                     std::to_string(other) + " elsewhere (orders " + orders + "); annotation " +
                     (named && seven_named ? "complete" : "incomplete");
    if (!catalog.matches_expected_profile)
        catalog.report +=
            "; DEVIATION from the expected one-4-vertex-plus-four-7-vertex profile: the "
            "characterization and this enumeration-derived reconstruction disagree; every "
            "member is cross-validated by both ordering backends and minimality checks";
    return catalog;
}

const ForbiddenCatalog& forbidden_catalog() {
    static const ForbiddenCatalog catalog = derive_forbidden_catalog();
    return catalog;
}

namespace {

using CheckFn = std::function<std::optional<std::string>(const Digraph&)>;

struct CheckSpec {
    std::string domain;  // "labeled", "oriented", "tournament"
    int max_n;
    CheckFn fn;
};

std::optional<std::string> check_outdegree_zero(const Digraph& g) {
    if (!predicates(g).is_oriented) return std::nullopt;
    if (!recognize_cacd(g).accepted) return std::nullopt;
    if (has_directed_hamiltonian_cycle(g)) return std::nullopt;
    try {
        outdegree_zero_witness(g);
    } catch (const InternalInconsistencyError&) {
        return "oriented CACD without spanning cycle lacks an outdegree-zero vertex";
    }
    return std::nullopt;
}

std::optional<std::string> check_hamiltonian_path(const Digraph& g) {
    DigraphPredicates p = predicates(g);
    if (!p.is_oriented || !p.is_unilateral) return std::nullopt;
    if (!recognize_cacd(g).accepted) return std::nullopt;
    try {
        hamiltonian_path(g);
    } catch (const InternalInconsistencyError& e) {
        return std::string("hamiltonian path construction failed: ") + e.what();
    }
    return std::nullopt;
}

std::optional<std::string> check_proper_subset(const Digraph& g) {
    if (recognize_proper_cacd(g).accepted && !recognize_cacd(g).accepted)
        return "proper recognizer accepted a digraph the general recognizer rejects";
    return std::nullopt;
}

std::optional<std::string> check_proper_grid(const Digraph& g) {
    bool pipeline = recognize_proper_cacd(g).accepted;
    bool grid = grid_representation_oracle(g);
    if (pipeline != grid)
        return std::string("pipeline says ") + (pipeline ? "yes" : "no") + ", grid oracle says " +
               (grid ? "yes" : "no");
    return std::nullopt;
}

std::optional<std::string> check_oriented_proper_equiv(const Digraph& g) {
    if (!predicates(g).is_oriented) return std::nullopt;
    bool via_sigma = recognize_oriented_proper_cacd(g).accepted;
    bool via_matrix = recognize_proper_cacd(g).accepted;
    if (via_sigma != via_matrix)
        return std::string("quadruple characterization says ") + (via_sigma ? "yes" : "no") +
               ", monotone pipeline says " + (via_matrix ? "yes" : "no");
    return std::nullopt;
}

std::optional<std::string> check_round_proposition(const Digraph& g) {
    if (!predicates(g).is_oriented) return std::nullopt;
    if (!recognize_proper_cacd(g).accepted) return std::nullopt;
    if (!round_enumeration_each_component(underlying_graph(g)))
        return "oriented proper CACD whose underlying graph admits no round enumeration";
    return std::nullopt;
}

std::optional<std::string> check_tournament_agreement(const Digraph& g) {
    bool general = recognize_cacd(g).accepted;
    bool special = recognize_tournament_cacd(g).accepted;
    if (general != special)
        return std::string("general recognizer says ") + (general ? "yes" : "no") +
               ", forbidden-catalog recognizer says " + (special ? "yes" : "no");
    return std::nullopt;
}

const std::map<std::string, CheckSpec>& check_registry() {
    static const std::map<std::string, CheckSpec> registry = {
        {"outdegree-zero-lemma", {"oriented", 6, check_outdegree_zero}},
        {"hamiltonian-path", {"oriented", 6, check_hamiltonian_path}},
        {"proper-subset-cacd", {"labeled", 4, check_proper_subset}},
        {"proper-grid-agreement", {"labeled", 4, check_proper_grid}},
        {"oriented-proper-equivalence", {"oriented", 5, check_oriented_proper_equiv}},
        {"round-proposition", {"oriented", 5, check_round_proposition}},
        {"tournament-recognizer-agreement", {"tournament", 7, check_tournament_agreement}},
    };
    return registry;
}

}  // namespace

std::vector<std::string> sweep_check_names() {
    std::vector<std::string> names;
    for (const auto& [name, spec] : check_registry()) names.push_back(name);
    names.push_back("cbar8-exclusion");
    names.push_back("cbar6-control");
    return names;
}

SweepReport sweep_digraphs(const std::string& check, int n) {
    if (check == "cbar8-exclusion") return cbar_orientation_sweep(8);
    if (check == "cbar6-control") return cbar_orientation_sweep(6);

    auto it = check_registry().find(check);
    if (it == check_registry().end()) throw InputError("unknown check name: " + check);
    const CheckSpec& spec = it->second;
    if (n < 1 || n > spec.max_n)
        throw BoundError("check '" + check + "' is bounded at n <= " +
                         std::to_string(spec.max_n));

    auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.check = check;
    report.n = n;

    auto run_one = [&](const Digraph& g) {
        ++report.instances;
        if (auto note = spec.fn(g))
            report.counterexamples.push_back(digraph_to_json_text(g) + " -- " + *note);
    };

    if (spec.domain == "labeled") {
        const int pairs = n * (n - 1);
        struct Accum {
            std::uint64_t instances = 0;
            std::vector<std::string> counterexamples;
        };
        Accum acc = parallel_accumulate<Accum>(
            std::uint64_t{1} << pairs,
            [&](Accum& a, std::uint64_t mask) {
                Digraph g(n);
                int bit = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        if (u == v) continue;
                        if ((mask >> bit) & 1u) g.add_edge(u, v);
                        ++bit;
                    }
                ++a.instances;
                if (auto note = spec.fn(g))
                    a.counterexamples.push_back(digraph_to_json_text(g) + " -- " + *note);
            },
            [](Accum& into, Accum& part) {
                into.instances += part.instances;
                into.counterexamples.insert(into.counterexamples.end(),
                                            part.counterexamples.begin(),
                                            part.counterexamples.end());
            });
        report.instances = acc.instances;
        report.counterexamples = std::move(acc.counterexamples);
    } else if (spec.domain == "oriented") {
        for (int k = 1; k <= n; ++k)
            for (const Digraph& g : enumerate_oriented_digraphs(k)) run_one(g);
    } else {
        for (int k = 1; k <= n; ++k)
            for (const Digraph& g : enumerate_tournaments(k)) {
                if (g.n() >= 2 && !predicates(g).is_connected) continue;
                run_one(g);
            }
    }

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

SweepReport cbar_orientation_sweep(int k) {
    if (k < 4 || k > 8) throw BoundError("orientation sweeps cover 4 <= k <= 8");
    auto start = std::chrono::steady_clock::now();

    Digraph shape = complement_cycle(k);
    std::vector<std::pair<int, int>> undirected;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (shape.edge(a, b)) undirected.emplace_back(a, b);
    const int m = static_cast<int>(undirected.size());
    const std::uint64_t total = std::uint64_t{1} << m;

    struct Accum {
        std::uint64_t acceptances = 0;
        std::vector<std::string> accepted_examples;
    };
    Accum acc = parallel_accumulate<Accum>(
        total,
        [&](Accum& a, std::uint64_t mask) {
            Digraph g(k);
            for (int e = 0; e < m; ++e) {
                auto [x, y] = undirected[e];
                if ((mask >> e) & 1u)
                    g.add_edge(x, y);
                else
                    g.add_edge(y, x);
            }
            if (has_any_row_cop_ordering(augmented_adjacency(g))) {
                ++a.acceptances;
                if (a.accepted_examples.size() < 4)
                    a.accepted_examples.push_back(digraph_to_json_text(g));
            }
        },
        [](Accum& into, Accum& part) {
            into.acceptances += part.acceptances;
            for (auto& e : part.accepted_examples)
                if (into.accepted_examples.size() < 4) into.accepted_examples.push_back(e);
        });

    SweepReport report;
    report.check = k == 8 ? "cbar8-exclusion" : ("cbar" + std::to_string(k) + "-control");
    report.n = k;
    report.instances = total;
    report.stats = "acceptances=" + std::to_string(acc.acceptances);
    if (k >= 8) {
        // the lemma predicts zero acceptances; every acceptance is a counterexample
        for (auto& e : acc.accepted_examples)
            report.counterexamples.push_back(e + " -- accepted orientation of C-bar-" +
                                             std::to_string(k));
        if (acc.acceptances > acc.accepted_examples.size() && !acc.accepted_examples.empty())
            report.counterexamples.push_back("(further acceptances elided)");
    } else if (acc.acceptances == 0) {
        report.counterexamples.push_back(
            "control failed: no orientation was accepted, at least one was expected");
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

std::string sweep_report_to_json_text(const SweepReport& report) {
    nlohmann::json doc;
    doc["check"] = report.check;
    doc["n"] = report.n;
    doc["instances"] = report.instances;
    doc["counterexamples"] = report.counterexamples;
    if (!report.stats.empty()) doc["stats"] = report.stats;
    doc["elapsed_ms"] = report.elapsed_ms;
    return doc.dump();
}

namespace {

// Discrete-circle tables for the grid oracle, cached per vertex count.
struct GridTables {
    int slots = 0;
    struct Triple {
        int a, b, p;
    };
    std::vector<Triple> triples;
    std::vector<std::size_t> point_zero;              // triples with p == 0
    std::array<std::vector<std::uint64_t>, 4> compat; // [pattern][i * words + w]
    std::size_t words = 0;
};

int slot_span(int a, int b, int slots) { return ((b - a) % slots + slots) % slots; }

bool slot_arc_contains(int a, int b, int p, int slots) {
    return slot_span(a, p, slots) <= slot_span(a, b, slots);
}

bool slot_arc_proper_subset(int a1, int b1, int a2, int b2, int slots) {
    int off = slot_span(a2, a1, slots);
    bool subset = off + slot_span(a1, b1, slots) <= slot_span(a2, b2, slots);
    bool equal = off == 0 && slot_span(a1, b1, slots) == slot_span(a2, b2, slots);
    return subset && !equal;
}

const GridTables& grid_tables(int n) {
    static std::mutex mu;
    static std::map<int, GridTables> cache;
    std::scoped_lock lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    GridTables t;
    t.slots = 4 * n + 1;
    for (int a = 0; a < t.slots; ++a)
        for (int b = 0; b < t.slots; ++b)
            for (int p = 0; p < t.slots; ++p)
                if (slot_arc_contains(a, b, p, t.slots)) t.triples.push_back({a, b, p});
    for (std::size_t i = 0; i < t.triples.size(); ++i)
        if (t.triples[i].p == 0) t.point_zero.push_back(i);

    const std::size_t count = t.triples.size();
    t.words = (count + 63) / 64;
    for (auto& plane : t.compat) plane.assign(count * t.words, 0);

    for (std::size_t i = 0; i < count; ++i) {
        const auto& u = t.triples[i];
        for (std::size_t j = 0; j < count; ++j) {
            const auto& v = t.triples[j];
            if (u.p == v.p) continue;
            if (slot_arc_proper_subset(u.a, u.b, v.a, v.b, t.slots) ||
                slot_arc_proper_subset(v.a, v.b, u.a, u.b, t.slots))
                continue;
            bool uv = slot_arc_contains(u.a, u.b, v.p, t.slots);
            bool vu = slot_arc_contains(v.a, v.b, u.p, t.slots);
            int pattern = (uv ? 1 : 0) | (vu ? 2 : 0);
            t.compat[pattern][i * t.words + (j >> 6)] |= 1ull << (j & 63);
        }
    }
    return cache[n] = std::move(t);
}

}  // namespace

bool grid_representation_oracle(const Digraph& g) {
    const int n = g.n();
    if (n > 4) throw BoundError("the grid representation oracle is bounded at 4 vertices");
    if (n == 1) return true;

    const GridTables& t = grid_tables(n);
    const std::size_t words = t.words;

    // candidates[k] = bitset of triples still admissible for vertex k
    std::vector<std::vector<std::uint64_t>> candidates(
        static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));

    std::function<bool(int)> place = [&](int k) -> bool {
        if (k == n) return true;
        const std::vector<std::uint64_t> cand = candidates[k];
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                std::size_t j = (w << 6) | static_cast<unsigned>(bit);
                if (k + 1 == n) return true;

                // narrow the remaining vertices' candidate sets by pairwise
                // compatibility with this choice
                std::vector<std::vector<std::uint64_t>> saved(candidates.begin() + k + 1,
                                                              candidates.end());
                bool viable = true;
                for (int later = k + 1; later < n && viable; ++later) {
                    int pattern = (g.edge(k, later) ? 1 : 0) | (g.edge(later, k) ? 2 : 0);
                    const std::uint64_t* row = &t.compat[pattern][j * words];
                    std::uint64_t any = 0;
                    for (std::size_t ww = 0; ww < words; ++ww) {
                        candidates[later][ww] &= row[ww];
                        any |= candidates[later][ww];
                    }
                    viable = any != 0;
                }
                if (viable && place(k + 1)) return true;
                std::copy(saved.begin(), saved.end(), candidates.begin() + k + 1);
            }
        }
        return false;
    };

    // rotational symmetry: vertex 0 takes point slot 0
    std::vector<std::uint64_t> all(words, 0);
    for (std::size_t j = 0; j < t.triples.size(); ++j) all[j >> 6] |= 1ull << (j & 63);
    for (int k = 1; k < n; ++k) candidates[k] = all;
    candidates[0].assign(words, 0);
    for (std::size_t j : t.point_zero) candidates[0][j >> 6] |= 1ull << (j & 63);

    return place(0);
}

bool round_enumeration_oracle(const Digraph& undirected) {
    const int n = undirected.n();
    if (n > 8) throw BoundError("the round enumeration oracle is bounded at 8 vertices");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (undirected.edge(a, b) != undirected.edge(b, a))
                throw PreconditionError("round enumeration needs a symmetric digraph");
    if (n >= 2 && !predicates(undirected).is_connected)
        throw PreconditionError("round enumeration needs a connected graph");
    if (n <= 2) return true;

    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);

    do {
        std::vector<int> sigma{0};
        sigma.insert(sigma.end(), rest.begin(), rest.end());

        // For each vertex, the feasible (l, r) splits of its neighborhood
        // into a contiguous inset before it and outset after it.
        std::vector<std::vector<std::pair<int, int>>> splits(static_cast<std::size_t>(n));
        bool viable = true;
        for (int pos = 0; pos < n && viable; ++pos) {
            int v = sigma[pos];
            int deg = undirected.out_degree(v);
            for (int l = 0; l <= deg; ++l) {
                int r = deg - l;
                bool ok = true;
                for (int q = 1; q <= l && ok; ++q)
                    ok = undirected.edge(v, sigma[((pos - q) % n + n) % n]);
                for (int q = 1; q <= r && ok; ++q)
                    ok = undirected.edge(v, sigma[(pos + q) % n]);
                if (ok) splits[pos].emplace_back(l, r);
            }
            viable = !splits[pos].empty();
        }
        if (!viable) continue;

        std::vector<int> choice(static_cast<std::size_t>(n), -1);
        auto oriented_towards = [&](int pos, int other_pos) {
            // is sigma[other_pos] in the outset of sigma[pos]?
            int r = splits[pos][choice[pos]].second;
            int forward = ((other_pos - pos) % n + n) % n;
            return forward >= 1 && forward <= r;
        };

        std::function<bool(int)> assign = [&](int pos) -> bool {
            if (pos == n) {
                // every directed edge spans a transitive tournament segment
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (a == b || !undirected.edge(sigma[a], sigma[b])) continue;
                        if (!oriented_towards(a, b)) continue;
                        std::vector<int> segment;  // clockwise positions a..b
                        for (int q = a;; q = (q + 1) % n) {
                            segment.push_back(q);
                            if (q == b) break;
                        }
                        const int k = static_cast<int>(segment.size());
                        std::vector<int> score(static_cast<std::size_t>(k), 0);
                        for (int x = 0; x < k; ++x)
                            for (int y = x + 1; y < k; ++y) {
                                if (!undirected.edge(sigma[segment[x]], sigma[segment[y]]))
                                    return false;  // not a tournament
                                if (oriented_towards(segment[x], segment[y]))
                                    ++score[x];
                                else
                                    ++score[y];
                            }
                        // transitive iff the scores are 0..k-1 in some order
                        std::sort(score.begin(), score.end());
                        for (int x = 0; x < k; ++x)
                            if (score[x] != x) return false;
                    }
                return true;
            }
            for (std::size_t c = 0; c < splits[pos].size(); ++c) {
                choice[pos] = static_cast<int>(c);
                bool consistent = true;
                for (int prev = 0; prev < pos && consistent; ++prev) {
                    if (!undirected.edge(sigma[pos], sigma[prev])) continue;
                    // both endpoints must orient the shared edge the same way
                    consistent = oriented_towards(pos, prev) != oriented_towards(prev, pos);
                }
                if (consistent && assign(pos + 1)) return true;
            }
            choice[pos] = -1;
            return false;
        };

        if (assign(0)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));

    return false;
}

bool round_enumeration_each_component(const Digraph& undirected) {
    const int n = undirected.n();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<int> component{v};
        seen[v] = true;
        for (std::size_t head = 0; head < component.size(); ++head)
            for (int w = 0; w < n; ++w)
                if (!seen[w] && undirected.edge(component[head], w)) {
                    seen[w] = true;
                    component.push_back(w);
                }
        if (!round_enumeration_oracle(undirected.induced(component))) return false;
    }
    return true;
}

}  // namespace cacd
