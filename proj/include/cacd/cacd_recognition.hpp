#pragma once

#include "cacd/digraph.hpp"
#include "cacd/verdict.hpp"

namespace cacd {

/// Builds the representation induced by a circular catch ordering: vertex at
/// position i gets point i, and its arc spans its ones-stretch in the
/// reordered augmented adjacency matrix (Type1 rows [i1, i2], Type2 rows
/// [i3, i4]), on a circle of circumference n+1. Requires the ordering to give
/// row-COP; violation raises PreconditionError naming the offending row.
CatchRepresentation representation_from_ordering(const Digraph& g, const Ordering& order);

/// Circular-arc catch digraph recognition. Accepts with a verified
/// (ordering, representation) certificate, or rejects with an exhaustion
/// witness. Decision and certificate both come from the circular-ones
/// backend; bounded by its column cap.
Verdict recognize_cacd(const Digraph& g);

/// Tournament specialization via the forbidden-subdigraph catalog derived by
/// the oracle harness. Requires a connected tournament (TypeError otherwise).
/// On rejection the witness embeds the forbidden subdigraph found.
Verdict recognize_tournament_cacd(const Digraph& g);

}  // namespace cacd
