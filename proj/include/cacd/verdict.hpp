#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cacd/catch_representation.hpp"
#include "cacd/circular_ones.hpp"

namespace cacd {

/// Concrete evidence for a rejection: either the exhaustion marker of a
/// search, or a named structure (forbidden subdigraph, bad matrix pattern)
/// with the vertices or rows involved.
struct Witness {
    std::string kind;       // "exhausted-orderings", "forbidden-subdigraph", ...
    std::string detail;     // free-form, e.g. the pattern name
    std::vector<int> vertices;
};

/// Certificate for circular-arc recognition queries: the accepting vertex
/// ordering plus the representation it induces.
struct CacdCertificate {
    Ordering ordering;
    CatchRepresentation representation;
};

/// Recognition outcome. accepted implies a certificate is present;
/// rejection implies a witness is present.
struct Verdict {
    bool accepted = false;
    std::optional<CacdCertificate> certificate;      // cacd / proper queries
    std::optional<std::vector<int>> circular_order;  // oriented-proper sigma
    std::optional<std::vector<int>> path;            // hamiltonian path queries
    std::optional<Witness> witness;
};

inline Verdict accept_with(CacdCertificate cert) {
    Verdict v;
    v.accepted = true;
    v.certificate = std::move(cert);
    return v;
}

inline Verdict reject_with(Witness w) {
    Verdict v;
    v.accepted = false;
    v.witness = std::move(w);
    return v;
}

}  // namespace cacd
