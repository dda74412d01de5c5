// One line per acceptance criterion. Expected values are either constants
// read off by hand from the running example or outputs of the brute-force
// oracles in oracles.hpp.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "accordion/complex.hpp"
#include "accordion/fan.hpp"
#include "accordion/io.hpp"
#include "accordion/polytope.hpp"
#include "accordion/vectors.hpp"
#include "oracles.hpp"

using namespace accordion;

namespace {

// Collects the first few reasons a criterion failed.
class Verdict {
public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        if (failures_.size() < 5) failures_.push_back(what);
        ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    long checks() const { return checks_; }
    const std::vector<std::string>& failures() const { return failures_; }
    long failed() const { return failed_; }

private:
    long checks_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
};

Dissection example() { return Dissection(7, Parity::Hollow, {{3, 7}, {3, 13}, {9, 13}}); }

IntMatrix negated_transpose(const IntMatrix& m) {
    IntMatrix t = linalg::transpose(m);
    for (auto& row : t)
        for (auto& x : row) x = -x;
    return t;
}

std::string name(const Dissection& d) { return format_dissection(d); }

template <typename F>
void for_each_dissection(int max_n, F&& f) {
    for (int n = 3; n <= max_n; ++n)
        for (const auto& d : all_dissections(n, Parity::Hollow)) f(d);
}

// 1. Golden vectors of the running example.
void running_example(Verdict& v, std::string& note) {
    const Dissection d = example();
    const Dissection f(7, Parity::Solid, {{2, 6}, {2, 10}, {10, 14}});
    const auto t0 = std::chrono::steady_clock::now();
    const std::array<IntVector, 9> got = {
        g_vector(d, {2, 6}),    g_vector(d, {2, 10}),    g_vector(d, {10, 14}),
        c_vector(d, f, {2, 6}), c_vector(d, f, {2, 10}), c_vector(d, f, {10, 14}),
        d_vector(d, {2, 6}),    d_vector(d, {2, 10}),    d_vector(d, {10, 14}),
    };
    const auto t1 = std::chrono::steady_clock::now();
    const std::array<std::vector<std::int64_t>, 9> want = {{
        {1, 0, 0}, {0, 1, -1}, {0, 0, -1},
        {1, 0, 0}, {0, 1, 0}, {0, -1, -1},
        {-1, 0, 0}, {0, 0, 1}, {0, 1, 1},
    }};
    for (std::size_t i = 0; i < 9; ++i) v.require(got[i].coords() == want[i], "vector " + std::to_string(i));
    const double us = std::chrono::duration<double, std::micro>(t1 - t0).count();
    v.require(us < 1000.0, "took " + std::to_string(us) + " us");

    // Derived values frozen from the oracles.
    v.require(oracle::accordion_diagonals(d).size() == 8, "oracle accordion count");
    v.require(accordion_diagonals(d) == oracle::accordion_diagonals(d), "accordion diagonals");
    v.require(height(d, {2, 6}) == oracle::height(d, {2, 6}) && height(d, {2, 6}) == 2, "h(2-6)");
    v.require(height(d, {2, 10}) == oracle::height(d, {2, 10}) && height(d, {2, 10}) == 3, "h(2-10)");
    v.require(vertex_point(d, f, heights(d)).coords() == std::vector<std::int64_t>{2, 1, -2}, "p(D)");
    std::ostringstream s;
    s.precision(1);
    s << std::fixed << us << " us";
    note = s.str();
}

// 2. Structural suite.
void structural(Verdict& v, std::string& note) {
    long faces = 0;
    for_each_dissection(8, [&](const Dissection& d) {
        const std::string id = name(d);
        const auto g = oriented_flip_graph(d);
        const auto accordion = oracle::accordion_diagonals(d);
        std::set<std::vector<Diagonal>> nodes;
        for (const auto& f : g.nodes) nodes.insert(f.diagonals());
        v.require(nodes == oracle::maximal_faces(d), "clique oracle " + id);
        v.require(g.sources().size() == 1 && g.nodes[g.sources()[0]] == rotate_min(d), "source " + id);
        v.require(g.sinks().size() == 1 && g.nodes[g.sinks()[0]] == rotate_max(d), "sink " + id);
        v.require(static_cast<int>(angles(d).size()) == 2 * d.size() + d.n(), "angles " + id);
        const auto seq = cell_sequence(d);
        const Polygon& poly = d.polygon();
        for (const auto& f : g.nodes) {
            ++faces;
            v.require(f.size() == d.size(), "purity " + id);
            v.require(cell_sequence(f) == seq, "cell sequence " + id);
            for (const auto& x : f.diagonals()) {
                const auto partners = oracle::flip_partners(accordion, f.diagonals(), x);
                v.require(partners.size() == 1 && flip(d, f, x).added == partners[0], "thinness " + id);
            }
            std::map<Diagonal, int> hits;
            for (const auto& c : closing_map(d, f)) ++hits[c];
            int boundary = 0;
            for (const auto& [c, k] : hits) {
                if (poly.is_boundary(c)) {
                    ++boundary;
                    v.require(k == 1, "boundary closes once " + id);
                } else {
                    v.require(k == 2 && f.contains(c), "diagonal closes twice " + id);
                }
            }
            v.require(boundary == d.n() && static_cast<int>(hits.size()) == d.n() + f.size(), "closing surjective " + id);
        }
    });
    note = std::to_string(faces) + " maximal faces";
}

// 3. Dual bases and matrix reciprocity.
void duality(Verdict& v, std::string& note) {
    long faces = 0;
    for_each_dissection(8, [&](const Dissection& d) {
        for (const auto& f : oriented_flip_graph(d).nodes) {
            ++faces;
            const IntMatrix g = g_matrix(d, f);
            const IntMatrix c = c_matrix(d, f);
            v.require(linalg::multiply(g, linalg::transpose(c)) == linalg::identity(g.size()), "G C^T " + name(d));
            v.require(g == negated_transpose(c_matrix(f, d)), "G = -C^T " + name(d));
            v.require(c == negated_transpose(g_matrix(f, d)), "C = -G^T " + name(d));
        }
    });
    note = std::to_string(faces) + " maximal faces";
}

// 4. g-vector fans.
void gfans(Verdict& v, std::string& note) {
    long flips = 0;
    for_each_dissection(8, [&](const Dissection& d) {
        try {
            const GFan g = build_gfan(d);
            flips += static_cast<long>(g.certificate.dependences.size());
            v.require(g.certificate.ok, "certificate " + name(d));
            v.require(g.smooth, "smooth " + name(d));
            v.require(coarsening_check(g), "coarsening " + name(d));
        } catch (const std::exception& e) {
            v.require(false, name(d) + ": " + e.what());
        }
    });
    note = std::to_string(flips) + " flips certified";
}

// 5. d-vector fans.
void dfans(Verdict& v, std::string& note) {
    int obstructed = 0;
    for_each_dissection(8, [&](const Dissection& d) {
        const bool even = even_interior_cell(d);
        obstructed += even;
        v.require(build_dfan(d).certificate.ok == !even, "d-fan " + name(d));
    });

    const Dissection square(8, Parity::Hollow, {{1, 5}, {5, 9}, {9, 13}, {1, 13}});
    const DFan f = build_dfan(square);
    bool witnessed = false;
    for (const auto& fail : f.certificate.failures) {
        if (fail.kind != FanFailureKind::RankDeficient) continue;
        std::map<Diagonal, Rational> coef;
        for (std::size_t i = 0; i < fail.support.size(); ++i) coef[fail.support[i]] = fail.coefficients[i];
        if (coef.size() != 4) continue;
        const Rational s = coef[{2, 6}];
        witnessed |= s != Rational(0) && coef[{10, 14}] == s && coef[{6, 10}] == -s && coef[{2, 14}] == -s;
    }
    v.require(witnessed, "octagon witness d(2-6)+d(10-14) = d(6-10)+d(2-14)");
    note = std::to_string(obstructed) + " obstructed, octagon witness found";
}

// 6. Accordiohedra.
void accordiohedra(Verdict& v, std::string& note) {
    long enumerated = 0;
    for_each_dissection(8, [&](const Dissection& d) {
        if (d.empty()) return;
        const auto g = oriented_flip_graph(d);
        const PolytopeRep p = accordiohedron(g);
        const NormalFanResult nf = verify_normal_fan(p, g);
        v.require(nf.ok, "normal fan " + name(d) + " " + nf.reason);
        v.require(orientation_check(p, g), "orientation " + name(d));
        v.require(parallel_facets(p) == d.size(), "parallel facets " + name(d));
        v.require(matriochka_check(d), "matriochka " + name(d));
        if (d.size() <= 4) {
            ++enumerated;
            const auto pts = vertex_enumeration_desk(p.halfspaces, p.dim);
            std::set<RationalPoint> want;
            for (const auto& x : p.vertices) {
                RationalPoint r;
                for (auto c : x.point.coords()) r.emplace_back(c);
                want.insert(r);
            }
            v.require(std::set<RationalPoint>(pts.begin(), pts.end()) == want && pts.size() == want.size(),
                      "V=H " + name(d));
        }
    });
    note = "V=H checked on " + std::to_string(enumerated) + " dissections";
}

// 7. Lattices.
void lattices(Verdict& v, std::string& note) {
    for_each_dissection(7, [&](const Dissection& d) {
        v.require(lattice_check(oriented_flip_graph(d)).is_lattice, "lattice " + name(d));
    });
    const auto tamari = oriented_flip_graph(Dissection(6, Parity::Hollow, {{1, 5}, {1, 7}, {1, 9}}));
    v.require(tamari.nodes.size() == 14, "Tamari size");
    v.require(lattice_check(tamari).is_lattice, "Tamari lattice");
    note = "hexagon fan triangulation has " + std::to_string(tamari.nodes.size()) + " elements";
}

// 8. Sections and projections inside triangulations.
void sections(Verdict& v, std::string& note) {
    long pairs = 0;
    for_each_dissection(7, [&](const Dissection& t) {
        if (t.size() != t.n() - 3) return;
        const auto& ds = t.diagonals();
        for (std::size_t mask = 0; mask < (std::size_t{1} << ds.size()); ++mask) {
            std::vector<Diagonal> sub;
            for (std::size_t i = 0; i < ds.size(); ++i)
                if ((mask >> i) & 1) sub.push_back(ds[i]);
            const Dissection d(t.n(), Parity::Hollow, sub);
            ++pairs;
            const SectionResult s = section_check(d, t);
            v.require(s.ray_coincidence, "ray coincidence " + name(d) + " in " + name(t));
            v.require(s.subfan_equals_section, "section " + name(d) + " in " + name(t));
            v.require(dsection_link_check(d, t), "d-section link " + name(d) + " in " + name(t));
            if (d.empty()) continue;
            const PolytopeRep p = project_accordiohedron(d, t);
            const NormalFanResult nf = verify_normal_fan(p, oriented_flip_graph(d));
            v.require(nf.ok, "projection " + name(d) + " in " + name(t) + " " + nf.reason);
        }
    });
    note = std::to_string(pairs) + " nested pairs";
}

std::string run_command(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

// 9. Rendering.
void rendering(Verdict& v, std::string& note) {
    const std::string cmd = std::string(ACCORDIA_PATH) +
                            " render --dissection 'n=7;parity=hollow;diagonals=3-7,3-13,9-13' --kind g";
    const std::string first = run_command(cmd);
    const std::string second = run_command(cmd);
    v.require(!first.empty() && first == second, "byte-identical CLI output");
    const GFan g = build_gfan(example());
    v.require(first == emit_svg_stereographic(g.fan, 1), "CLI matches library");

    const StereoLayout layout = stereographic_layout(g.fan, 1);
    std::vector<Diagonal> outer;
    for (int r : layout.outer) outer.push_back(layout.labels[r]);
    std::sort(outer.begin(), outer.end());
    v.require(outer == rotate_min(example()).diagonals(), "outer face is the rotate_min cone");

    // The pole (1,1,1) is interior to that cone and to no other.
    const IntVector pole(std::vector<std::int64_t>{1, 1, 1});
    int containing = 0;
    for (int c = 0; c < static_cast<int>(g.fan.cones.size()); ++c) {
        const auto x = cone_coordinates(g.fan, c, pole);
        if (x && std::all_of(x->begin(), x->end(), [](const Rational& r) { return r >= Rational(0); })) ++containing;
    }
    v.require(containing == 1, "pole lies in exactly one cone");
    note = std::to_string(first.size()) + " bytes";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Verdict&, std::string&)>>> criteria = {
        {"running example golden vectors", running_example},
        {"structural suite n<=8", structural},
        {"dual bases and matrix reciprocity n<=8", duality},
        {"g-fan certificate, smoothness, coarsening n<=8", gfans},
        {"d-fan iff no even interior cell n<=8", dfans},
        {"accordiohedron certification n<=8", accordiohedra},
        {"lattice property n<=7", lattices},
        {"sections and projections in triangulations n<=7", sections},
        {"deterministic stereographic rendering", rendering},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        std::string note;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(v, note);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %zu: %s (%ld checks, %s, %.2fs)\n", v.ok() ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), v.checks(), note.c_str(), secs);
        for (const auto& f : v.failures()) std::printf("    %s\n", f.c_str());
        if (!v.ok()) {
            std::printf("    %ld failed checks\n", v.failed());
            ++failed;
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
