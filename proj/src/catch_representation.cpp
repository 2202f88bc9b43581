#include "cacd/catch_representation.hpp"

#include <json.hpp>

#include "cacd/errors.hpp"

namespace cacd {

CirclePos::CirclePos(Rat v, Rat mod) : value(std::move(v)), modulus(std::move(mod)) {
    if (modulus <= Rat(0)) throw PreconditionError("circle circumference must be positive");
    if (value < Rat(0) || value >= modulus)
        throw PreconditionError("circle position must lie in [0, L)");
}

namespace {

void require_same_circle(const CirclePos& a, const CirclePos& b) {
    if (a.modulus != b.modulus)
        throw PreconditionError("positions live on circles of different circumference");
}

}  // namespace

Rat CircularArc::span() const {
    require_same_circle(a, b);
    return mod_positive(b.value - a.value, a.modulus);
}

bool arc_contains(const CircularArc& arc, const CirclePos& p) {
    require_same_circle(arc.a, p);
    Rat offset = mod_positive(p.value - arc.a.value, arc.a.modulus);
    return offset <= arc.span();
}

bool arc_subset(const CircularArc& inner, const CircularArc& outer) {
    require_same_circle(inner.a, outer.a);
    Rat offset = mod_positive(inner.a.value - outer.a.value, outer.a.modulus);
    return offset + inner.span() <= outer.span();
}

bool arc_proper_subset(const CircularArc& inner, const CircularArc& outer) {
    if (!arc_subset(inner, outer)) return false;
    bool same_set = inner.a.value == outer.a.value && inner.span() == outer.span();
    return !same_set;
}

void validate(const CatchRepresentation& rep) {
    if (rep.arcs.empty()) throw PreconditionError("representation needs at least one vertex");
    if (rep.arcs.size() != rep.points.size())
        throw PreconditionError("representation arc/point counts differ");
    for (int v = 0; v < rep.n(); ++v) {
        if (rep.arcs[v].a.modulus != rep.circumference ||
            rep.arcs[v].b.modulus != rep.circumference ||
            rep.points[v].modulus != rep.circumference)
            throw PreconditionError("representation entries disagree on circumference");
        if (!arc_contains(rep.arcs[v], rep.points[v]))
            throw PreconditionError("point of vertex " + std::to_string(v) +
                                    " lies outside its own arc");
    }
    for (int u = 0; u < rep.n(); ++u)
        for (int v = u + 1; v < rep.n(); ++v)
            if (rep.points[u].value == rep.points[v].value)
                throw PreconditionError("vertices " + std::to_string(u) + " and " +
                                        std::to_string(v) + " share a point");
}

Digraph realize(const CatchRepresentation& rep) {
    validate(rep);
    Digraph g(rep.n());
    for (int u = 0; u < rep.n(); ++u)
        for (int v = 0; v < rep.n(); ++v)
            if (u != v && arc_contains(rep.arcs[u], rep.points[v])) g.add_edge(u, v);
    return g;
}

bool is_proper(const CatchRepresentation& rep) {
    for (int u = 0; u < rep.n(); ++u)
        for (int v = 0; v < rep.n(); ++v)
            if (u != v && arc_proper_subset(rep.arcs[u], rep.arcs[v])) return false;
    return true;
}

bool verify(const CatchRepresentation& rep, const Digraph& g) {
    if (rep.n() != g.n()) return false;
    return realize(rep) == g;
}

CatchRepresentation representation_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed representation JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("L") || !doc.contains("arcs"))
        throw InputError("representation JSON needs \"L\" and \"arcs\"");

    auto parse_field = [&](const nlohmann::json& j, const char* name) -> Rat {
        if (!j.contains(name)) throw InputError(std::string("arc entry missing \"") + name + "\"");
        const auto& f = j[name];
        if (f.is_string()) return parse_rational(f.get<std::string>());
        if (f.is_number_integer()) return Rat(f.get<std::int64_t>());
        throw InputError(std::string("arc field \"") + name + "\" must be a rational string");
    };

    CatchRepresentation rep;
    if (doc["L"].is_string())
        rep.circumference = parse_rational(doc["L"].get<std::string>());
    else if (doc["L"].is_number_integer())
        rep.circumference = Rat(doc["L"].get<std::int64_t>());
    else
        throw InputError("\"L\" must be a rational string");
    if (!doc["arcs"].is_array() || doc["arcs"].empty())
        throw InputError("\"arcs\" must be a non-empty array");

    for (const auto& entry : doc["arcs"]) {
        Rat a = parse_field(entry, "a");
        Rat b = parse_field(entry, "b");
        Rat p = parse_field(entry, "p");
        try {
            rep.arcs.push_back(CircularArc{CirclePos(a, rep.circumference),
                                           CirclePos(b, rep.circumference)});
            rep.points.emplace_back(p, rep.circumference);
        } catch (const PreconditionError& e) {
            throw InputError(std::string("representation JSON: ") + e.what());
        }
    }
    try {
        validate(rep);
    } catch (const PreconditionError& e) {
        throw InputError(std::string("representation JSON: ") + e.what());
    }
    return rep;
}

std::string representation_to_json_text(const CatchRepresentation& rep) {
    nlohmann::json doc;
    doc["L"] = rational_string(rep.circumference);
    doc["arcs"] = nlohmann::json::array();
    for (int v = 0; v < rep.n(); ++v) {
        doc["arcs"].push_back({{"a", rational_string(rep.arcs[v].a.value)},
                               {"b", rational_string(rep.arcs[v].b.value)},
                               {"p", rational_string(rep.points[v].value)}});
    }
    return doc.dump();
}

}  // namespace cacd
