#include "accordion/selftest.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include "accordion/complex.hpp"
#include "accordion/fan.hpp"
#include "accordion/io.hpp"
#include "accordion/polytope.hpp"
#include "accordion/vectors.hpp"

namespace accordion {

namespace {

// Everything one dissection's checks share, built once.
struct Context {
    const Dissection& reference;
    OrientedFlipGraph graph;
    std::optional<GFan> gfan;
    std::optional<PolytopeRep> polytope;
};

using Check = std::function<Outcome(Context&)>;

Outcome verdict(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

bool purity(Context& c) {
    return std::all_of(c.graph.nodes.begin(), c.graph.nodes.end(), [&](const AccordionFace& f) {
        return f.size() == c.reference.size() && is_maximal_accordion_dissection(c.reference, f);
    });
}

// Every ridge lies in exactly two facets, and the flip reaches the other one.
bool thinness(Context& c) {
    if (c.reference.empty()) return c.graph.nodes.size() == 1;
    std::map<std::vector<Diagonal>, int> ridges;
    for (const auto& f : c.graph.nodes) {
        for (const auto& d : f.diagonals()) {
            std::vector<Diagonal> ridge;
            for (const auto& e : f.diagonals())
                if (e != d) ridge.push_back(e);
            ++ridges[ridge];
            const FlipRecord r = flip(c.reference, f, d);
            if (!c.graph.find(r.to) || r.to.contains(d)) return false;
        }
    }
    return std::all_of(ridges.begin(), ridges.end(), [](const auto& kv) { return kv.second == 2; });
}

bool source_sink(Context& c) {
    const auto src = c.graph.sources();
    const auto snk = c.graph.sinks();
    if (src.size() != 1 || snk.size() != 1) return false;
    return c.graph.nodes[src[0]] == rotate_min(c.reference) &&
           c.graph.nodes[snk[0]] == rotate_max(c.reference);
}

bool cell_sequences(Context& c) {
    const auto expected = cell_sequence(c.reference);
    return std::all_of(c.graph.nodes.begin(), c.graph.nodes.end(),
                       [&](const AccordionFace& f) { return cell_sequence(f) == expected; });
}

bool angle_count(Context& c) {
    return static_cast<int>(angles(c.reference).size()) == 2 * c.reference.size() + c.reference.n();
}

bool closing_double_count(Context& c) {
    const Polygon& poly = c.reference.polygon();
    for (const auto& f : c.graph.nodes) {
        std::map<Diagonal, int> hits;
        for (const auto& d : closing_map(c.reference, f)) ++hits[d];
        for (const auto& [d, k] : hits) {
            const int want = poly.is_boundary(d) ? 1 : 2;
            if (k != want || (!poly.is_boundary(d) && !f.contains(d))) return false;
        }
        int boundary = 0;
        for (const auto& [d, k] : hits)
            if (poly.is_boundary(d)) ++boundary;
        if (boundary != c.reference.n() ||
            static_cast<int>(hits.size()) - boundary != f.size())
            return false;
    }
    return true;
}

bool reciprocity(Context& c) {
    return std::all_of(c.graph.nodes.begin(), c.graph.nodes.end(), [&](const AccordionFace& f) {
        const auto r = reciprocity_check(c.reference, f);
        return r.forward && r.backward;
    });
}

bool dual_basis(Context& c) {
    for (const auto& f : c.graph.nodes) {
        const IntMatrix g = g_matrix(c.reference, f);
        const IntMatrix cm = c_matrix(c.reference, f);
        if (linalg::multiply(g, linalg::transpose(cm)) != linalg::identity(g.size())) return false;
    }
    return true;
}

bool matrix_reciprocity(Context& c) {
    for (const auto& f : c.graph.nodes) {
        IntMatrix back = linalg::transpose(c_matrix(f, c.reference));
        for (auto& row : back)
            for (auto& x : row) x = -x;
        if (g_matrix(c.reference, f) != back) return false;
    }
    return true;
}

bool sign_coherence(Context& c) {
    for (const auto& v : c_vector_set(c.reference))
        if (v.is_zero() || !(v.nonnegative() || v.nonpositive())) return false;
    return true;
}

GFan& gfan_of(Context& c) {
    if (!c.gfan) c.gfan = build_gfan(c.graph);
    return *c.gfan;
}

const PolytopeRep& polytope_of(Context& c) {
    if (!c.polytope) c.polytope = accordiohedron(c.graph);
    return *c.polytope;
}

Outcome dfan_check(Context& c) {
    const DFan d = build_dfan(c.graph);
    const bool even = even_interior_cell(c.reference);
    if (d.certificate.ok == even) return Outcome::Fail;
    return even ? Outcome::ExpectedFail : Outcome::Pass;
}

const std::vector<std::pair<std::string, Check>>& checks() {
    static const std::vector<std::pair<std::string, Check>> all = {
        {"purity", [](Context& c) { return verdict(purity(c)); }},
        {"thinness", [](Context& c) { return verdict(thinness(c)); }},
        {"source-sink", [](Context& c) { return verdict(source_sink(c)); }},
        {"cell-sequence", [](Context& c) { return verdict(cell_sequences(c)); }},
        {"angle-count", [](Context& c) { return verdict(angle_count(c)); }},
        {"closing-map", [](Context& c) { return verdict(closing_double_count(c)); }},
        {"reciprocity", [](Context& c) { return verdict(reciprocity(c)); }},
        {"dual-basis", [](Context& c) { return verdict(dual_basis(c)); }},
        {"matrix-reciprocity", [](Context& c) { return verdict(matrix_reciprocity(c)); }},
        {"sign-coherence", [](Context& c) { return verdict(sign_coherence(c)); }},
        {"g-fan", [](Context& c) { return verdict(gfan_of(c).certificate.ok); }},
        {"g-smooth", [](Context& c) { return verdict(gfan_of(c).smooth); }},
        {"coarsening", [](Context& c) { return verdict(coarsening_check(gfan_of(c))); }},
        {"d-fan", dfan_check},
        {"normal-fan",
         [](Context& c) {
             if (c.reference.empty()) return Outcome::Pass;
             return verdict(verify_normal_fan(polytope_of(c), c.graph).ok);
         }},
        {"orientation",
         [](Context& c) {
             if (c.reference.empty()) return Outcome::Pass;
             return verdict(orientation_check(polytope_of(c), c.graph));
         }},
        {"parallel-facets",
         [](Context& c) {
             if (c.reference.empty()) return Outcome::Pass;
             return verdict(parallel_facets(polytope_of(c)) == c.reference.size());
         }},
        {"matriochka",
         [](Context& c) { return verdict(c.reference.empty() || matriochka_check(c.reference)); }},
        {"lattice", [](Context& c) { return verdict(lattice_check(c.graph).is_lattice); }},
        {"round-trip",
         [](Context& c) {
             return verdict(parse_dissection(format_dissection(c.reference)) == c.reference);
         }},
    };
    return all;
}

char glyph(Outcome o) {
    switch (o) {
        case Outcome::Pass: return '.';
        case Outcome::Fail: return 'x';
        case Outcome::ExpectedFail: return 'e';
    }
    return '?';
}

}  // namespace

int SelftestReport::failures() const {
    int k = 0;
    for (const auto& row : outcomes) k += static_cast<int>(std::count(row.begin(), row.end(), Outcome::Fail));
    return k;
}

SelftestReport run_selftest(int max_n, std::ostream* out) {
    SelftestReport report;
    const auto& suite = checks();
    for (const auto& [name, check] : suite) report.properties.push_back(name);
    report.outcomes.resize(suite.size());

    std::size_t width = 0;
    for (const auto& p : report.properties) width = std::max(width, p.size());

    for (int n = 3; n <= max_n; ++n) {
        const auto batch = all_dissections(n, Parity::Hollow);
        const std::size_t first = report.dissections.size();
        for (const auto& reference : batch) {
            report.dissections.push_back(reference);
            std::optional<Context> ctx;
            std::string setup_error;
            try {
                ctx.emplace(Context{reference, oriented_flip_graph(reference), {}, {}});
            } catch (const std::exception& e) {
                setup_error = e.what();
            }
            for (std::size_t p = 0; p < suite.size(); ++p) {
                Outcome o = Outcome::Fail;
                std::string why = setup_error;
                if (ctx) {
                    try {
                        o = suite[p].second(*ctx);
                    } catch (const std::exception& e) {
                        why = e.what();
                    }
                }
                report.outcomes[p].push_back(o);
                if (o == Outcome::Fail) {
                    std::ostringstream msg;
                    msg << suite[p].first << " on " << format_dissection(reference);
                    if (!why.empty()) msg << ": " << why;
                    report.errors.push_back(msg.str());
                }
            }
        }
        if (out) {
            *out << "n=" << n << " (" << batch.size() << " dissections)\n";
            for (std::size_t p = 0; p < suite.size(); ++p) {
                *out << "  " << report.properties[p]
                     << std::string(width - report.properties[p].size() + 1, ' ');
                for (std::size_t i = first; i < report.dissections.size(); ++i)
                    *out << glyph(report.outcomes[p][i]);
                *out << '\n';
            }
        }
    }
    if (out) {
        for (const auto& e : report.errors) *out << "FAIL " << e << '\n';
        *out << report.dissections.size() << " dissections, " << report.failures() << " failures\n";
    }
    return report;
}

}  // namespace accordion
