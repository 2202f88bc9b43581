#include "cacd/cacd_recognition.hpp"

#include "cacd/errors.hpp"
#include "cacd/oracle_harness.hpp"

namespace cacd {

CatchRepresentation representation_from_ordering(const Digraph& g, const Ordering& order) {
    const int n = g.n();
    if (static_cast<int>(order.perm.size()) != n)
        throw PreconditionError("ordering length does not match vertex count");

    // B = A*(G) with rows and columns arranged by the ordering.
    BinaryMatrix b = augmented_adjacency(g).with_columns(order.perm).with_rows(order.perm);

    CatchRepresentation rep;
    rep.circumference = Rat(n + 1);
    rep.arcs.resize(n);
    rep.points.resize(n);

    for (int i = 0; i < n; ++i) {
        RowStretch rs = classify_row(b, i);
        int a = 0, bb = 0;
        switch (rs.kind) {
            case StretchKind::Type1:
                a = rs.i1;
                bb = rs.i2;
                break;
            case StretchKind::Type2:
                a = rs.i3;
                bb = rs.i4;
                break;
            case StretchKind::Full:
                a = 1;
                bb = n;
                break;
            default:
                throw PreconditionError("row " + std::to_string(i) +
                                        " is not circular under the given ordering");
        }
        int vertex = order.perm[i];
        rep.arcs[vertex] = CircularArc{CirclePos(Rat(a), rep.circumference),
                                       CirclePos(Rat(bb), rep.circumference)};
        rep.points[vertex] = CirclePos(Rat(i + 1), rep.circumference);
    }
    return rep;
}

Verdict recognize_cacd(const Digraph& g) {
    auto order = find_row_cop_ordering(augmented_adjacency(g));
    if (!order)
        return reject_with(Witness{"exhausted-orderings",
                                   "no column ordering gives row-circular ones",
                                   {}});
    CatchRepresentation rep = representation_from_ordering(g, *order);
    if (!verify(rep, g))
        throw InternalInconsistencyError("constructed certificate failed verification");
    return accept_with(CacdCertificate{*order, std::move(rep)});
}

Verdict recognize_tournament_cacd(const Digraph& g) {
    DigraphPredicates p = predicates(g);
    if (!p.is_tournament) throw TypeError("input is not a tournament");
    if (!p.is_connected) throw TypeError("input tournament is not connected");

    for (const auto& entry : forbidden_catalog().entries) {
        if (entry.representative.n() > g.n()) continue;
        if (auto image = find_induced(g, entry.representative)) {
            return reject_with(Witness{"forbidden-subdigraph",
                                       entry.paper_name.empty() ? entry.canon : entry.paper_name,
                                       *image});
        }
    }
    Verdict v = recognize_cacd(g);
    if (!v.accepted)
        throw InternalInconsistencyError(
            "tournament avoids the forbidden catalog but the ordering search rejects");
    return v;
}

}  // namespace cacd
