// accordia: command-line front end for the accordion library.
//
// Exit codes: 0 when every check the verb performs passes, 1 when a check
// fails, 2 on malformed or unsupported input.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "accordion/complex.hpp"
#include "accordion/fan.hpp"
#include "accordion/io.hpp"
#include "accordion/polytope.hpp"
#include "accordion/selftest.hpp"
#include "accordion/vectors.hpp"

using namespace accordion;
using nlohmann::json;

namespace {

struct Options {
    std::string verb;
    std::string dissection;
    std::string sub;
    std::string kind = "g";
    std::string format;
    int max_n = 6;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Dissection require_dissection(const std::string& text, const char* flag) {
    if (text.empty()) throw UsageError(std::string("missing ") + flag);
    return parse_dissection(text);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int enumerate(const Options& o) {
    const Dissection ref = require_dissection(o.dissection, "--dissection");
    const OrientedFlipGraph g = oriented_flip_graph(ref);
    json facets = json::array();
    for (const auto& f : g.nodes) facets.push_back(diagonal_list_json(f.diagonals()));
    print({{"reference", format_dissection(ref)},
           {"accordion_diagonals", diagonal_list_json(accordion_diagonals(ref))},
           {"facets", facets}});
    return 0;
}

int flipgraph(const Options& o) {
    const OrientedFlipGraph g = oriented_flip_graph(require_dissection(o.dissection, "--dissection"));
    if (o.format == "dot") {
        std::cout << emit_dot(g);
    } else if (o.format.empty() || o.format == "json") {
        print(flip_graph_json(g));
    } else {
        throw UsageError("flipgraph supports --format json|dot");
    }
    return 0;
}

int vectors(const Options& o) {
    const Dissection ref = require_dissection(o.dissection, "--dissection");
    json out = {{"reference", format_dissection(ref)}, {"kind", o.kind}};
    if (o.kind == "c") {
        json by_face = json::array();
        for (const auto& f : oriented_flip_graph(ref).nodes) {
            const auto cs = c_vectors(ref, f);
            json entry = json::object();
            for (std::size_t i = 0; i < cs.size(); ++i)
                entry[to_string(f.diagonals()[i])] = vector_json(ref, cs[i]);
            by_face.push_back({{"face", diagonal_list_json(f.diagonals())}, {"c_vectors", entry}});
        }
        json set = json::array();
        for (const auto& v : c_vector_set(ref)) set.push_back(vector_json(ref, v));
        out["faces"] = by_face;
        out["c_vector_set"] = set;
    } else {
        json entry = json::object();
        for (const auto& d : accordion_diagonals(ref))
            entry[to_string(d)] = vector_json(ref, o.kind == "g" ? g_vector(ref, d) : d_vector(ref, d));
        out["vectors"] = entry;
    }
    print(out);
    return 0;
}

int fan(const Options& o) {
    const OrientedFlipGraph g = oriented_flip_graph(require_dissection(o.dissection, "--dissection"));
    if (o.kind == "g") {
        const GFan gf = build_gfan(g);
        json out = fan_json(gf.fan, gf.certificate);
        out["kind"] = "g";
        out["smooth"] = gf.smooth;
        out["coarsening"] = coarsening_check(gf);
        print(out);
        return gf.smooth && out["coarsening"].get<bool>() ? 0 : 1;
    }
    const DFan d = build_dfan(g);
    json out = fan_json(d.fan ? *d.fan : make_fan(g, d_ray_map(g.reference)), d.certificate);
    out["kind"] = "d";
    print(out);
    return d.certificate.ok ? 0 : 1;
}

int polytope(const Options& o) {
    const Dissection ref = require_dissection(o.dissection, "--dissection");
    const OrientedFlipGraph g = oriented_flip_graph(ref);
    const PolytopeRep p = accordiohedron(g);
    const NormalFanResult nf = verify_normal_fan(p, g);
    json out = polytope_json(p);
    out["normal_fan"] = nf.ok;
    if (!nf.ok) out["reason"] = nf.reason;
    print(out);
    return nf.ok ? 0 : 1;
}

int project(const Options& o) {
    const Dissection super = require_dissection(o.dissection, "--dissection");
    const Dissection sub = require_dissection(o.sub, "--sub");
    const SectionResult section = section_check(sub, super);
    const PolytopeRep p = project_accordiohedron(sub, super);
    const NormalFanResult nf = verify_normal_fan(p, oriented_flip_graph(sub));
    json out = polytope_json(p);
    out["ray_coincidence"] = section.ray_coincidence;
    out["subfan_equals_section"] = section.subfan_equals_section;
    out["normal_fan"] = nf.ok;
    if (!nf.ok) out["reason"] = nf.reason;
    print(out);
    return section.ray_coincidence && section.subfan_equals_section && nf.ok ? 0 : 1;
}

int lattice(const Options& o) {
    const OrientedFlipGraph g = oriented_flip_graph(require_dissection(o.dissection, "--dissection"));
    const LatticeResult r = lattice_check(g);
    json out = {{"elements", g.nodes.size()}, {"is_lattice", r.is_lattice}};
    if (r.witness)
        out["witness"] = {diagonal_list_json(g.nodes[r.witness->first].diagonals()),
                          diagonal_list_json(g.nodes[r.witness->second].diagonals())};
    print(out);
    return r.is_lattice ? 0 : 1;
}

int render(const Options& o) {
    if (!o.format.empty() && o.format != "svg") throw UsageError("render supports --format svg");
    const Dissection ref = require_dissection(o.dissection, "--dissection");
    const OrientedFlipGraph g = oriented_flip_graph(ref);
    if (o.kind == "g") {
        std::cout << emit_svg_stereographic(build_gfan(g).fan, 1);
        return 0;
    }
    const DFan d = build_dfan(g);
    if (!d.fan) {
        std::cerr << "d-vectors do not form a fan for this dissection\n";
        return 1;
    }
    std::cout << emit_svg_stereographic(*d.fan, -1);
    return 0;
}

int selftest(const Options& o) {
    if (o.max_n < 3) throw UsageError("--max-n must be at least 3");
    return run_selftest(o.max_n, &std::cout).failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accordion complexes of polygon dissections and their realizations"};
    app.require_subcommand(1, 1);
    Options o;

    const auto diss = [&](CLI::App* cmd) {
        cmd->add_option("--dissection", o.dissection, "n=<int>;parity=hollow;diagonals=a-b,...");
    };
    const auto kind = [&](CLI::App* cmd, std::vector<std::string> allowed) {
        cmd->add_option("--kind", o.kind)->check(CLI::IsMember(allowed));
    };

    auto* c_enum = app.add_subcommand("enumerate", "facets of the accordion complex");
    diss(c_enum);
    auto* c_flip = app.add_subcommand("flipgraph", "oriented flip graph");
    diss(c_flip);
    c_flip->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
    auto* c_vec = app.add_subcommand("vectors", "g-, c- or d-vectors");
    diss(c_vec);
    kind(c_vec, {"g", "c", "d"});
    auto* c_fan = app.add_subcommand("fan", "certify the g- or d-vector fan");
    diss(c_fan);
    kind(c_fan, {"g", "d"});
    auto* c_poly = app.add_subcommand("polytope", "accordiohedron with normal fan check");
    diss(c_poly);
    auto* c_proj = app.add_subcommand("project", "section and projection for a nested pair");
    diss(c_proj);
    c_proj->add_option("--sub", o.sub, "sub-dissection of --dissection");
    auto* c_lat = app.add_subcommand("lattice", "check the flip order is a lattice");
    diss(c_lat);
    auto* c_render = app.add_subcommand("render", "stereographic SVG of a 3-dimensional fan");
    diss(c_render);
    kind(c_render, {"g", "d"});
    c_render->add_option("--format", o.format)->check(CLI::IsMember({"svg"}));
    auto* c_self = app.add_subcommand("selftest", "exhaustive invariant suite");
    c_self->add_option("--max-n", o.max_n, "largest polygon size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    o.verb = app.get_subcommands().front()->get_name();

    try {
        if (o.verb == "enumerate") return enumerate(o);
        if (o.verb == "flipgraph") return flipgraph(o);
        if (o.verb == "vectors") return vectors(o);
        if (o.verb == "fan") return fan(o);
        if (o.verb == "polytope") return polytope(o);
        if (o.verb == "project") return project(o);
        if (o.verb == "lattice") return lattice(o);
        if (o.verb == "render") return render(o);
        return selftest(o);
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "check failure: " << e.what() << '\n';
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
}
