#pragma once

#include <vector>

#include "cacd/binary_matrix.hpp"
#include "cacd/catch_representation.hpp"
#include "cacd/digraph.hpp"
#include "cacd/rational.hpp"

namespace fixtures {

// 7x7 matrix with a monotone circular ordering; rows v2,v4,v3,v1,v5,v7,v6
// against columns v1..v7. Expected endpoint profile:
// (1,4),(3,5),(3,6),(3,9),(3,9),(6,9),(6,10).
inline cacd::BinaryMatrix monotone_example() {
    return cacd::BinaryMatrix::from_rows({
        {1, 1, 1, 1, 0, 0, 0},
        {0, 0, 1, 1, 1, 0, 0},
        {0, 0, 1, 1, 1, 1, 0},
        {1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1, 1},
        {1, 1, 0, 0, 0, 1, 1},
        {1, 1, 1, 0, 0, 1, 1},
    });
}

// Augmented adjacency matrix of the seven-vertex worked example
// (rows and columns v1..v7).
inline cacd::BinaryMatrix worked_astar() {
    return cacd::BinaryMatrix::from_rows({
        {1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 0, 0},
        {0, 0, 1, 1, 1, 1, 0},
        {0, 0, 1, 1, 1, 0, 0},
        {1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 0, 0, 1, 1},
        {1, 1, 0, 0, 0, 1, 1},
    });
}

// The digraph whose A* is worked_astar() (diagonal dropped).
inline cacd::Digraph worked_digraph() {
    cacd::BinaryMatrix m = worked_astar();
    cacd::Digraph g(7);
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v)
            if (u != v && m.get(u, v)) g.add_edge(u, v);
    return g;
}

// Row-permuted form of worked_astar() satisfying circular ones both ways:
// rows v2,v4,v3,v5,v6,v7,v1.
inline cacd::BinaryMatrix worked_b() {
    return cacd::BinaryMatrix::from_rows({
        {1, 1, 1, 1, 1, 0, 0},
        {0, 0, 1, 1, 1, 0, 0},
        {0, 0, 1, 1, 1, 1, 0},
        {1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 0, 0, 1, 1},
        {1, 1, 0, 0, 0, 1, 1},
        {1, 1, 1, 1, 1, 1, 1},
    });
}

// The three matrices without circular ones along columns.
inline cacd::BinaryMatrix f1() {
    return cacd::BinaryMatrix::from_rows({
        {1, 0, 0},
        {0, 1, 0},
        {0, 0, 1},
        {1, 1, 1},
    });
}

inline cacd::BinaryMatrix f2() {
    return cacd::BinaryMatrix::from_rows({
        {1, 1, 0, 0},
        {0, 1, 1, 0},
        {0, 0, 1, 1},
        {1, 0, 0, 1},
        {1, 1, 1, 1},
    });
}

inline cacd::BinaryMatrix f3() {
    return cacd::BinaryMatrix::from_rows({
        {1, 1, 1, 0, 0},
        {0, 1, 1, 1, 0},
        {0, 0, 1, 1, 1},
        {1, 0, 0, 1, 1},
        {1, 1, 0, 0, 1},
        {1, 1, 1, 1, 1},
    });
}

inline cacd::CirclePos pos(const char* value, const cacd::Rat& circ) {
    return cacd::CirclePos(cacd::parse_rational(value), circ);
}

// Six-arc representation whose underlying graph is the complement of a
// 6-cycle, on a circle of circumference 7.
inline cacd::CatchRepresentation example_d() {
    cacd::CatchRepresentation rep;
    rep.circumference = cacd::Rat(7);
    auto arc = [&](const char* a, const char* b) {
        return cacd::CircularArc{pos(a, rep.circumference), pos(b, rep.circumference)};
    };
    rep.arcs = {arc("3", "6"),     arc("1.9", "2.1"), arc("2.9", "3.1"),
                arc("5.9", "2"),   arc("2", "4.1"),   arc("0.9", "3")};
    rep.points = {pos("5", rep.circumference), pos("2", rep.circumference),
                  pos("3", rep.circumference), pos("6", rep.circumference),
                  pos("4", rep.circumference), pos("1", rep.circumference)};
    return rep;
}

// Seven-arc representation whose underlying graph is the complement of a
// 7-cycle, circumference 8.
inline cacd::CatchRepresentation example_d_prime() {
    cacd::CatchRepresentation rep;
    rep.circumference = cacd::Rat(8);
    auto arc = [&](const char* a, const char* b) {
        return cacd::CircularArc{pos(a, rep.circumference), pos(b, rep.circumference)};
    };
    rep.arcs = {arc("4.9", "7.1"), arc("0.9", "3.1"), arc("3.9", "6.1"), arc("6.9", "2.1"),
                arc("2.9", "5.1"), arc("5.9", "1.1"), arc("1.9", "4.1")};
    rep.points = {pos("5", rep.circumference), pos("1", rep.circumference),
                  pos("4", rep.circumference), pos("7", rep.circumference),
                  pos("3", rep.circumference), pos("6", rep.circumference),
                  pos("2", rep.circumference)};
    return rep;
}

// Directed 3-cycle dominated by a fourth vertex; the smallest tournament
// that is not a circular-arc catch digraph.
inline cacd::Digraph d3_tournament() {
    return cacd::Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
}

inline cacd::Digraph directed_cycle(int n) {
    cacd::Digraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline cacd::Digraph transitive_tournament(int n) {
    cacd::Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline cacd::Digraph directed_path(int n) {
    cacd::Digraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace fixtures
