#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cacd/cacd_recognition.hpp"
#include "cacd/errors.hpp"
#include "cacd/oracle_harness.hpp"
#include "cacd/oriented_cacd.hpp"
#include "cacd/proper_cacd.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cacd::InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw cacd::InputError("cannot write file: " + path);
    out << content;
}

double round4(const cacd::Rat& r) { return std::round(cacd::rational_double(r) * 1e4) / 1e4; }

json representation_json(const cacd::CatchRepresentation& rep) {
    return json::parse(cacd::representation_to_json_text(rep));
}

json representation_decimal_json(const cacd::CatchRepresentation& rep) {
    json doc;
    doc["L"] = round4(rep.circumference);
    doc["arcs"] = json::array();
    for (int v = 0; v < rep.n(); ++v)
        doc["arcs"].push_back({{"a", round4(rep.arcs[v].a.value)},
                               {"b", round4(rep.arcs[v].b.value)},
                               {"p", round4(rep.points[v].value)}});
    return doc;
}

json verdict_json(const std::string& query, const cacd::Verdict& v) {
    json doc;
    doc["schema"] = "cacd-verdict/1";
    doc["query"] = query;
    doc["accepted"] = v.accepted;
    doc["certificate"] = nullptr;
    doc["witness"] = nullptr;
    if (v.certificate) {
        json cert;
        cert["ordering"] = v.certificate->ordering.perm;
        cert["representation"] = representation_json(v.certificate->representation);
        cert["representation_decimal"] = representation_decimal_json(v.certificate->representation);
        doc["certificate"] = cert;
    }
    if (v.circular_order) {
        doc["certificate"] = json{{"circular_order", *v.circular_order}};
    }
    if (v.path) {
        doc["certificate"] = json{{"path", *v.path}};
    }
    if (v.witness) {
        doc["witness"] = json{{"kind", v.witness->kind},
                              {"detail", v.witness->detail},
                              {"vertices", v.witness->vertices}};
    }
    return doc;
}

json trace_json(const cacd::ProperTrace& trace) {
    json doc;
    doc["column_order"] = trace.column_order.perm;
    doc["d_rows"] = trace.d_rows;
    doc["m_rows"] = trace.m_rows;
    json rows = json::array();
    for (int r = 0; r < trace.m.rows(); ++r) {
        std::string bits;
        for (int c = 0; c < trace.m.cols(); ++c) bits += trace.m.get(r, c) ? '1' : '0';
        rows.push_back(bits);
    }
    doc["m"] = rows;
    doc["l"] = trace.stairs.l;
    doc["r"] = trace.stairs.r;
    json lm = json::array();
    for (const auto& row : trace.lambda_mu.rows)
        lm.push_back({{"lambda", row.lambda},
                      {"mu", row.mu},
                      {"type", row.kind == cacd::StretchKind::Type1 ? 1 : 2},
                      {"full", row.full}});
    doc["lambda_mu"] = lm;
    doc["indices"] = json{{"s", trace.indices.s},
                          {"s_prime", trace.indices.s_prime},
                          {"k", trace.indices.k}};
    json arcs = json::array();
    for (const auto& arc : trace.arcs)
        arcs.push_back({{"a", cacd::rational_string(arc.a.value)},
                        {"b", cacd::rational_string(arc.b.value)}});
    doc["arcs"] = arcs;
    json points = json::array();
    for (const auto& p : trace.points) points.push_back(cacd::rational_string(p.value));
    doc["points"] = points;
    return doc;
}

std::string render_svg(const cacd::CatchRepresentation& rep) {
    const double size = 540.0;
    const double cx = size / 2, cy = size / 2;
    const double base_radius = 150.0;
    const double step = 14.0;
    const double tau = 2.0 * 3.14159265358979323846;
    const double L = cacd::rational_double(rep.circumference);

    auto angle = [&](const cacd::Rat& x) { return tau * cacd::rational_double(x) / L; };
    auto xy = [&](double theta, double radius) {
        return std::pair<double, double>(cx + radius * std::sin(theta),
                                         cy - radius * std::cos(theta));
    };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    // stagger arcs by start position so overlaps stay readable
    std::vector<int> order(rep.arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return rep.arcs[a].a.value < rep.arcs[b].a.value ||
               (rep.arcs[a].a.value == rep.arcs[b].a.value && a < b);
    });

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
        << "\" height=\"" << size << "\">\n";
    svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << base_radius
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        int v = order[rank];
        double radius = base_radius + step * static_cast<double>(rank + 1);
        double ta = angle(rep.arcs[v].a.value);
        double span = tau * cacd::rational_double(rep.arcs[v].span()) / L;
        double tb = ta + span;
        auto [x1, y1] = xy(ta, radius);
        auto [x2, y2] = xy(tb, radius);
        int large = span > tau / 2 ? 1 : 0;
        svg << "<path d=\"M " << fmt(x1) << " " << fmt(y1) << " A " << fmt(radius) << " "
            << fmt(radius) << " 0 " << large << " 1 " << fmt(x2) << " " << fmt(y2)
            << "\" fill=\"none\" stroke=\"#3366cc\" stroke-width=\"2\"/>\n";
        auto [lx, ly] = xy(ta, radius + 6);
        svg << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
            << "\" font-size=\"11\" fill=\"#3366cc\">I" << v << "</text>\n";
    }

    for (int v = 0; v < rep.n(); ++v) {
        double theta = angle(rep.points[v].value);
        auto [px, py] = xy(theta, base_radius);
        svg << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
            << "\" r=\"3\" fill=\"#cc3333\"/>\n";
        auto [tx, ty] = xy(theta, base_radius - 18);
        svg << "<text x=\"" << fmt(tx) << "\" y=\"" << fmt(ty)
            << "\" font-size=\"11\" fill=\"#cc3333\">p" << v << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

int run(int argc, char** argv) {
    CLI::App app{"circular-arc catch digraph toolkit"};
    app.require_subcommand(1);

    // recognize
    auto* recognize = app.add_subcommand("recognize", "recognition with certificates");
    std::string rec_input;
    std::string rec_class = "cacd";
    std::string rec_trace;
    recognize->add_option("digraph", rec_input, "digraph JSON file")->required();
    recognize->add_option("--class", rec_class, "cacd|proper|oriented-proper|tournament")
        ->check(CLI::IsMember({"cacd", "proper", "oriented-proper", "tournament"}));
    recognize->add_option("--trace", rec_trace, "write the construction trace (proper only)");

    // realize
    auto* realize_cmd = app.add_subcommand("realize", "digraph of a representation");
    std::string realize_input;
    realize_cmd->add_option("representation", realize_input, "representation JSON file")
        ->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a digraph");
    std::string verify_rep, verify_graph;
    bool verify_proper = false;
    verify_cmd->add_option("representation", verify_rep)->required();
    verify_cmd->add_option("digraph", verify_graph)->required();
    verify_cmd->add_flag("--proper", verify_proper, "also require a proper arc family");

    // hampath
    auto* hampath_cmd = app.add_subcommand("hampath", "hamiltonian path of a unilateral "
                                                      "oriented circular-arc catch digraph");
    std::string hampath_input;
    hampath_cmd->add_option("digraph", hampath_input)->required();

    // forbidden derive
    auto* forbidden = app.add_subcommand("forbidden", "forbidden-subdigraph catalog");
    auto* derive = forbidden->add_subcommand("derive", "derive the catalog by enumeration");
    int derive_max_n = 7;
    std::string derive_out;
    derive->add_option("--max-n", derive_max_n, "largest tournament order to scan")
        ->check(CLI::Range(3, 7));
    derive->add_option("--out", derive_out, "directory for catalog files");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a named theorem sweep");
    std::string sweep_check;
    int sweep_n = 4;
    std::string sweep_out;
    sweep->add_option("check", sweep_check, "check name")->required();
    sweep->add_option("--n", sweep_n, "instance size bound");
    sweep->add_option("--out", sweep_out, "directory for the report file");

    // render
    auto* render = app.add_subcommand("render", "draw a representation as SVG");
    std::string render_input, render_svg_path;
    render->add_option("representation", render_input)->required();
    render->add_option("--svg", render_svg_path, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    if (recognize->parsed()) {
        cacd::Digraph g = cacd::digraph_from_json_text(read_file(rec_input));
        cacd::Verdict verdict;
        if (rec_class == "cacd") {
            verdict = cacd::recognize_cacd(g);
        } else if (rec_class == "proper") {
            cacd::ProperTrace trace;
            verdict = cacd::recognize_proper_cacd_traced(g, &trace);
            if (!rec_trace.empty() && verdict.accepted)
                write_file(rec_trace, trace_json(trace).dump(2));
        } else if (rec_class == "oriented-proper") {
            verdict = cacd::recognize_oriented_proper_cacd(g);
        } else {
            verdict = cacd::recognize_tournament_cacd(g);
        }
        std::cout << verdict_json(rec_class, verdict).dump(2) << "\n";
        return verdict.accepted ? 0 : 1;
    }

    if (realize_cmd->parsed()) {
        auto rep = cacd::representation_from_json_text(read_file(realize_input));
        std::cout << cacd::digraph_to_json_text(cacd::realize(rep)) << "\n";
        return 0;
    }

    if (verify_cmd->parsed()) {
        auto rep = cacd::representation_from_json_text(read_file(verify_rep));
        auto g = cacd::digraph_from_json_text(read_file(verify_graph));
        json doc;
        doc["schema"] = "cacd-verify/1";
        bool match = false;
        if (rep.n() != g.n()) {
            doc["match"] = false;
            doc["detail"] = "vertex counts differ";
        } else {
            cacd::Digraph realized = cacd::realize(rep);
            json missing = json::array(), extra = json::array();
            for (int u = 0; u < g.n(); ++u)
                for (int v = 0; v < g.n(); ++v) {
                    if (u == v) continue;
                    if (g.edge(u, v) && !realized.edge(u, v)) missing.push_back({u, v});
                    if (!g.edge(u, v) && realized.edge(u, v)) extra.push_back({u, v});
                }
            match = missing.empty() && extra.empty();
            doc["match"] = match;
            doc["missing_edges"] = missing;
            doc["extra_edges"] = extra;
        }
        if (verify_proper) {
            bool proper = cacd::is_proper(rep);
            doc["proper"] = proper;
            match = match && proper;
        }
        std::cout << doc.dump(2) << "\n";
        return match ? 0 : 1;
    }

    if (hampath_cmd->parsed()) {
        cacd::Digraph g = cacd::digraph_from_json_text(read_file(hampath_input));
        cacd::DigraphPredicates p = cacd::predicates(g);
        if (!p.is_oriented || !p.is_unilateral || !cacd::recognize_cacd(g).accepted) {
            cacd::Verdict v = cacd::reject_with(cacd::Witness{
                "precondition",
                "hampath needs a unilateral oriented circular-arc catch digraph",
                {}});
            std::cout << verdict_json("hampath", v).dump(2) << "\n";
            return 1;
        }
        cacd::Verdict v;
        v.accepted = true;
        v.path = cacd::hamiltonian_path(g);
        std::cout << verdict_json("hampath", v).dump(2) << "\n";
        return 0;
    }

    if (derive->parsed()) {
        cacd::ForbiddenCatalog catalog = cacd::derive_forbidden_catalog(derive_max_n);
        json summary;
        summary["report"] = catalog.report;
        summary["matches_expected_profile"] = catalog.matches_expected_profile;
        summary["members"] = json::array();
        for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
            const auto& entry = catalog.entries[i];
            std::string name =
                entry.paper_name.empty() ? "member" + std::to_string(i) : entry.paper_name;
            json member;
            member["name"] = name;
            member["n"] = entry.n;
            member["annotation"] = entry.annotation_note;
            member["digraph"] = json::parse(cacd::digraph_to_json_text(entry.representative));
            summary["members"].push_back(member);
            if (!derive_out.empty()) {
                std::filesystem::create_directories(derive_out);
                write_file(derive_out + "/" + name + ".json",
                           cacd::digraph_to_json_text(entry.representative));
                json sidecar{{"name", name}, {"n", entry.n}, {"annotation", entry.annotation_note},
                             {"canonical", entry.canon}};
                write_file(derive_out + "/" + name + ".annotation.json", sidecar.dump(2));
            }
        }
        std::cout << summary.dump(2) << "\n";
        return 0;
    }

    if (sweep->parsed()) {
        cacd::SweepReport report = cacd::sweep_digraphs(sweep_check, sweep_n);
        std::string text = cacd::sweep_report_to_json_text(report);
        if (!sweep_out.empty()) {
            std::filesystem::create_directories(sweep_out);
            write_file(sweep_out + "/" + report.check + ".json", text);
        }
        std::cout << text << "\n";
        return report.counterexamples.empty() ? 0 : 1;
    }

    if (render->parsed()) {
        auto rep = cacd::representation_from_json_text(read_file(render_input));
        write_file(render_svg_path, render_svg(rep));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cacd::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const cacd::BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
    } catch (const cacd::TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
    } catch (const cacd::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
    } catch (const cacd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
