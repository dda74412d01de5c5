#include <doctest.h>

#include <set>

#include "accordion/fan.hpp"
#include "accordion/polytope.hpp"
#include "oracles.hpp"

using namespace accordion;

namespace {

Dissection example() { return Dissection(7, Parity::Hollow, {{3, 7}, {3, 13}, {9, 13}}); }
Dissection refining_triangulation() { return Dissection(7, Parity::Hollow, {{3, 7}, {3, 9}, {3, 13}, {9, 13}}); }

std::pair<Diagonal, Diagonal> ordered(Diagonal x, Diagonal y) { return x < y ? std::pair{x, y} : std::pair{y, x}; }

std::set<RationalPoint> as_rational(const PolytopeRep& p) {
    std::set<RationalPoint> out;
    for (const auto& v : p.vertices) {
        RationalPoint r;
        for (auto x : v.point.coords()) r.emplace_back(x);
        out.insert(r);
    }
    return out;
}

}  // namespace

TEST_CASE("vertices of the running example") {
    const PolytopeRep p = accordiohedron(example());
    REQUIRE(p.vertices.size() == 12);
    CHECK(p.halfspaces.size() == 8);
    CHECK(p.dim == 3);
    const std::vector<std::pair<std::vector<Diagonal>, std::vector<std::int64_t>>> want = {
        {{{2, 6}, {2, 10}, {2, 12}}, {2, 3, 0}},   {{{2, 6}, {2, 10}, {10, 14}}, {2, 1, -2}},
        {{{2, 6}, {2, 12}, {8, 12}}, {2, 3, 2}},   {{{2, 6}, {6, 14}, {8, 12}}, {2, -1, 2}},
        {{{2, 6}, {6, 14}, {10, 14}}, {2, -1, -2}}, {{{2, 10}, {2, 12}, {4, 8}}, {-2, 3, 0}},
        {{{2, 10}, {4, 8}, {10, 14}}, {-2, 1, -2}}, {{{2, 12}, {4, 8}, {8, 12}}, {-2, 3, 2}},
        {{{4, 8}, {4, 14}, {8, 12}}, {-2, -3, 2}},  {{{4, 8}, {4, 14}, {10, 14}}, {-2, -3, -2}},
        {{{4, 14}, {6, 14}, {8, 12}}, {0, -3, 2}},  {{{4, 14}, {6, 14}, {10, 14}}, {0, -3, -2}},
    };
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(p.vertices[i].face == want[i].first);
        CHECK(p.vertices[i].point.coords() == want[i].second);
    }
}

TEST_CASE("each vertex is tight exactly on its own facets") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& d : all_dissections(n, Parity::Hollow)) {
            if (d.empty()) continue;
            const PolytopeRep p = accordiohedron(d);
            for (const auto& v : p.vertices) {
                for (const auto& hs : p.halfspaces) {
                    const bool own = std::find(v.face.begin(), v.face.end(), hs.label) != v.face.end();
                    CHECK(hs.rhs == oracle::height(d, hs.label));
                    if (own) CHECK(hs.normal.dot(v.point) == hs.rhs);
                    else CHECK(hs.normal.dot(v.point) < hs.rhs);
                }
            }
        }
}

TEST_CASE("normal fan certificate and its mutation") {
    const auto g = oriented_flip_graph(example());
    PolytopeRep p = accordiohedron(g);
    CHECK(verify_normal_fan(p, g).ok);
    CHECK(orientation_check(p, g));

    // Vertex points built from a perturbed height no longer sit on the facets.
    const auto h = heights(example());
    for (const auto& [diag, value] : h) {
        auto bumped = h;
        bumped[diag] = value + 1;
        PolytopeRep q = p;
        for (auto& v : q.vertices) v.point = vertex_point(example(), Dissection(7, Parity::Solid, v.face), bumped);
        CHECK_FALSE(verify_normal_fan(q, g).ok);
    }
}

TEST_CASE("empty reference is rejected") {
    try {
        accordiohedron(Dissection(5, Parity::Hollow, {}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyReference);
    }
}

TEST_CASE("zonotope support function") {
    const Dissection d = example();
    for (const auto& x : accordion_diagonals(d)) CHECK(zonotope_support(d, g_vector(d, x)) == height(d, x));
    std::vector<std::int64_t> y = {1, -2, 3};
    CHECK(zonotope_support(d, IntVector(y)) == zonotope_support(d, -IntVector(y)));

    // A fan triangulation is an accordion dissection; its diagonals 1-5, 1-7, ...
    // come in path order.
    for (int m = 1; m <= 5; ++m) {
        std::vector<Diagonal> path;
        for (int k = 1; k <= m; ++k) path.emplace_back(1, 2 * k + 3);
        const Dissection a(m + 3, Parity::Hollow, path);
        for (int k = 1; k <= m; ++k)
            CHECK(zonotope_support(a, IntVector::unit(m, a.index_of(path[k - 1]))) == k * (m + 1 - k));
    }
}

TEST_CASE("matriochka and parallel facets") {
    CHECK(matriochka_check(example()));
    CHECK(parallel_facets(accordiohedron(example())) == 3);
    const Dissection fan(6, Parity::Hollow, {{1, 5}, {1, 7}, {1, 9}});
    CHECK(parallel_facets(accordiohedron(fan)) == 3);

    const PolytopeRep p = accordiohedron(example());
    std::set<std::pair<Diagonal, Diagonal>> pairs;
    for (std::size_t i = 0; i < p.halfspaces.size(); ++i)
        for (std::size_t j = i + 1; j < p.halfspaces.size(); ++j)
            if (p.halfspaces[i].normal == -p.halfspaces[j].normal)
                pairs.insert(ordered(p.halfspaces[i].label, p.halfspaces[j].label));
    std::set<std::pair<Diagonal, Diagonal>> rotated;
    const Dissection ex = example();
    const Polygon& poly = ex.polygon();
    for (const auto& x : ex.diagonals())
        rotated.insert(ordered(poly.shifted(x, -1), poly.shifted(x, 1)));
    CHECK(pairs == rotated);

    const Dissection single(4, Parity::Hollow, {{1, 5}});
    const PolytopeRep seg = accordiohedron(single);
    const PolytopeRep box = parallelepiped(single);
    CHECK(as_rational(seg) == as_rational(box));
    CHECK(matriochka_check(single));
}

TEST_CASE("brute-force vertex enumeration matches") {
    const PolytopeRep p = accordiohedron(example());
    const auto pts = vertex_enumeration_desk(p.halfspaces, p.dim);
    CHECK(std::set<RationalPoint>(pts.begin(), pts.end()) == as_rational(p));

    const PolytopeRep box = parallelepiped(example());
    CHECK(box.vertices.size() == 8);
    CHECK(vertex_enumeration_desk(box.halfspaces, 3).size() == 8);

    auto tight = p.halfspaces;
    for (auto& hs : tight) hs.rhs = -5;
    CHECK(vertex_enumeration_desk(tight, 3).empty());

    std::vector<HalfSpace> open = {HalfSpace{{2, 6}, IntVector({1, 0, 0}), 1}};
    CHECK_THROWS_AS(vertex_enumeration_desk(open, 3), Error);
    CHECK_THROWS_AS(vertex_enumeration_desk(p.halfspaces, 5), Error);
}

TEST_CASE("projections of accordiohedra") {
    const PolytopeRep same = project_accordiohedron(example(), example());
    CHECK(as_rational(same) == as_rational(accordiohedron(example())));

    const PolytopeRep proj = project_accordiohedron(example(), refining_triangulation());
    CHECK(verify_normal_fan(proj, oriented_flip_graph(example())).ok);
    CHECK(as_rational(proj) != as_rational(accordiohedron(example())));
    CHECK_THROWS_AS(project_accordiohedron(refining_triangulation(), example()), Error);
}

TEST_CASE("isometries act by signed coordinate permutations") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& d : all_dissections(n, Parity::Hollow)) {
            if (d.empty()) continue;
            const PolytopeRep p = accordiohedron(d);
            for (bool reflect : {false, true})
                for (int shift = 0; shift < 2 * n; shift += 2) {
                    const Symmetry s{reflect, shift};
                    const Dissection image = s.apply(d);
                    const PolytopeRep q = accordiohedron(image);
                    std::set<std::vector<std::int64_t>> moved, target;
                    for (const auto& v : p.vertices) moved.insert(transport(s, d, v.point).coords());
                    for (const auto& v : q.vertices) target.insert(v.point.coords());
                    CHECK(moved == target);
                }
        }
}

TEST_CASE("invariant complexes") {
    const Dissection sq(8, Parity::Hollow, {{1, 5}, {5, 9}, {9, 13}, {1, 13}});
    const Symmetry quarter{false, 4};
    const InvariantComplex c = invariant_complex(sq, quarter);
    CHECK(is_pseudomanifold(c));
    const PolytopeRep inv = invariant_polytope(sq, quarter);
    const auto orbits = coordinate_orbits(sq, quarter);
    CHECK(inv.dim == orbits.size());
    for (const auto& v : inv.vertices) CHECK(transport(quarter, sq, v.point) == v.point);

    const InvariantComplex id = invariant_complex(example(), Symmetry{});
    CHECK(id.facets.size() == 12);
    CHECK(invariant_polytope(example(), Symmetry{}).vertices.size() == 12);

    const Dissection hexagon_tri(6, Parity::Hollow, {{1, 5}, {5, 9}, {1, 9}});
    const Symmetry third{false, 4};
    CHECK(is_pseudomanifold(invariant_complex(hexagon_tri, third)));

    try {
        invariant_complex(example(), Symmetry{false, 2});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInvariant);
    }
    try {
        invariant_complex(sq, Symmetry{true, 0});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRotation);
    }
}
