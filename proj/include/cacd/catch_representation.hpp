#pragma once

#include <string>
#include <vector>

#include "cacd/digraph.hpp"
#include "cacd/rational.hpp"

namespace cacd {

/// A point on a circle of circumference `modulus`, value in [0, modulus).
struct CirclePos {
    Rat value{0};
    Rat modulus{1};

    CirclePos() = default;
    CirclePos(Rat v, Rat mod);

    bool operator==(const CirclePos& other) const = default;
};

/// Closed clockwise arc [a, b]. a == b is the single-point arc, never the
/// full circle. Membership is endpoint-inclusive and wraps when a > b.
struct CircularArc {
    CirclePos a;
    CirclePos b;

    /// Clockwise length (b - a) mod L.
    Rat span() const;
};

bool arc_contains(const CircularArc& arc, const CirclePos& p);

/// Point-set containment of closed arcs on the same circle.
bool arc_subset(const CircularArc& inner, const CircularArc& outer);
bool arc_proper_subset(const CircularArc& inner, const CircularArc& outer);

/// Per-vertex (arc, point) family over a shared circle; the YES-certificate
/// of every recognizer. Invariants: p_v inside I_v and all points pairwise
/// distinct.
struct CatchRepresentation {
    Rat circumference{1};
    std::vector<CircularArc> arcs;
    std::vector<CirclePos> points;

    int n() const { return static_cast<int>(arcs.size()); }
};

/// Throws PreconditionError when the representation invariants fail.
void validate(const CatchRepresentation& rep);

/// Digraph with u->v iff u != v and p_v in I_u. Rejects invalid reps.
Digraph realize(const CatchRepresentation& rep);

/// True iff no arc's point set properly contains another's.
bool is_proper(const CatchRepresentation& rep);

/// True iff realize(rep) equals g edge-for-edge.
bool verify(const CatchRepresentation& rep, const Digraph& g);

/// JSON wire format:
/// {"L": "num/den", "arcs": [{"a": ..., "b": ..., "p": ...}, ...]}
/// with rationals as strings; decimal literals accepted on input.
CatchRepresentation representation_from_json_text(const std::string& text);
std::string representation_to_json_text(const CatchRepresentation& rep);

}  // namespace cacd
