#include <doctest.h>

#include <set>

#include "accordion/complex.hpp"
#include "oracles.hpp"

using namespace accordion;

namespace {

Dissection example() { return Dissection(7, Parity::Hollow, {{3, 7}, {3, 13}, {9, 13}}); }
Dissection hexagon_fan() { return Dissection(6, Parity::Hollow, {{1, 5}, {1, 7}, {1, 9}}); }

std::set<std::vector<Diagonal>> node_set(const OrientedFlipGraph& g) {
    std::set<std::vector<Diagonal>> out;
    for (const auto& f : g.nodes) out.insert(f.diagonals());
    return out;
}

}  // namespace

TEST_CASE("accordion diagonals of the running example") {
    const std::vector<Diagonal> want = {{2, 6}, {2, 10}, {2, 12}, {4, 8}, {4, 14}, {6, 14}, {8, 12}, {10, 14}};
    CHECK(oracle::accordion_diagonals(example()) == want);
    CHECK(accordion_diagonals(example()) == want);
    CHECK_FALSE(is_accordion_diagonal(example(), Diagonal(8, 14)));
    CHECK_FALSE(is_accordion_diagonal(example(), Diagonal(4, 12)));
}

TEST_CASE("accordion diagonals agree with the cell criterion") {
    for (int n = 3; n <= 8; ++n)
        for (const auto& d : all_dissections(n, Parity::Hollow))
            CHECK(accordion_diagonals(d) == oracle::accordion_diagonals(d));
}

TEST_CASE("a triangulation admits every solid diagonal") {
    const Dissection t = hexagon_fan();
    CHECK(accordion_diagonals(t).size() == 9);
    CHECK(accordion_diagonals(Dissection(6, Parity::Hollow, {})).empty());
}

TEST_CASE("dissection counts are little Schroeder numbers") {
    const std::vector<int> want = {1, 3, 11, 45, 197, 903};
    for (int n = 3; n <= 8; ++n) {
        CHECK(static_cast<int>(all_dissections(n, Parity::Hollow).size()) == want[n - 3]);
        CHECK(oracle::count_dissections(n) == want[n - 3]);
    }
}

TEST_CASE("flip graph of the running example") {
    const OrientedFlipGraph g = oriented_flip_graph(example());
    CHECK(g.nodes.size() == 12);
    CHECK(g.arcs.size() == 18);
    CHECK(node_set(g) == oracle::maximal_faces(example()));
    REQUIRE(g.sources().size() == 1);
    REQUIRE(g.sinks().size() == 1);
    CHECK(g.nodes[g.sources()[0]] == rotate_min(example()));
    CHECK(g.nodes[g.sinks()[0]] == rotate_max(example()));
}

TEST_CASE("flip graphs match clique enumeration") {
    for (int n = 3; n <= 7; ++n)
        for (const auto& d : all_dissections(n, Parity::Hollow)) {
            const auto g = oriented_flip_graph(d);
            CHECK(node_set(g) == oracle::maximal_faces(d));
        }
}

TEST_CASE("small flip graphs") {
    const auto one = oriented_flip_graph(Dissection(4, Parity::Hollow, {{1, 5}}));
    CHECK(one.nodes.size() == 2);
    CHECK(one.arcs.size() == 1);
    const auto none = oriented_flip_graph(Dissection(5, Parity::Hollow, {}));
    CHECK(none.nodes.size() == 1);
    CHECK(none.arcs.empty());
    CHECK(oriented_flip_graph(hexagon_fan()).nodes.size() == 14);
}

TEST_CASE("flip is the unique replacement and an involution") {
    const Dissection d = example();
    const Dissection face(7, Parity::Solid, {{2, 6}, {2, 10}, {10, 14}});
    const FlipRecord r = flip(d, face, Diagonal(2, 10));
    CHECK(r.to.size() == 3);
    CHECK(is_maximal_accordion_dissection(d, r.to));
    CHECK(oracle::flip_partners(d, face.diagonals(), Diagonal(2, 10)) == std::vector<Diagonal>{r.added});
    const FlipRecord back = flip(d, r.to, r.added);
    CHECK(back.added == Diagonal(2, 10));
    CHECK(back.to == face);
    CHECK(flip_direction(d, r) != flip_direction(d, reversed(r)));

    CHECK_THROWS_AS(flip(d, face, Diagonal(2, 12)), Error);
    CHECK_THROWS_AS(flip(d, Dissection(7, Parity::Solid, {{2, 6}}), Diagonal(2, 6)), Error);
}

TEST_CASE("brute-force thinness up to octagons") {
    for (int n = 3; n <= 7; ++n)
        for (const auto& d : all_dissections(n, Parity::Hollow)) {
            const auto g = oriented_flip_graph(d);
            std::vector<int> degree(g.nodes.size(), 0);
            for (const auto& a : g.arcs) {
                ++degree[a.from];
                ++degree[a.to];
            }
            for (std::size_t i = 0; i < g.nodes.size(); ++i) {
                CHECK(degree[i] == d.size());
                for (const auto& x : g.nodes[i].diagonals()) {
                    const auto partners = oracle::flip_partners(d, g.nodes[i].diagonals(), x);
                    REQUIRE(partners.size() == 1);
                    CHECK(flip(d, g.nodes[i], x).added == partners[0]);
                }
            }
        }
}

TEST_CASE("flips out of the source and into the sink increase") {
    for (const auto& d : all_dissections(6, Parity::Hollow)) {
        const auto g = oriented_flip_graph(d);
        const auto src = rotate_min(d);
        const auto snk = rotate_max(d);
        for (const auto& x : src.diagonals())
            CHECK(flip_direction(d, flip(d, src, x)) == FlipDirection::Increasing);
        for (const auto& x : snk.diagonals())
            CHECK(flip_direction(d, flip(d, snk, x)) == FlipDirection::Decreasing);
    }
}

TEST_CASE("lattice check") {
    CHECK(lattice_check(oriented_flip_graph(example())).is_lattice);
    const auto tamari = oriented_flip_graph(hexagon_fan());
    CHECK(tamari.nodes.size() == 14);
    CHECK(lattice_check(tamari).is_lattice);
    CHECK(lattice_check(oriented_flip_graph(Dissection(4, Parity::Hollow, {{1, 5}}))).is_lattice);

    // Two incomparable maxima: not a lattice.
    OrientedFlipGraph g = oriented_flip_graph(Dissection(4, Parity::Hollow, {{1, 5}}));
    const int bottom = g.arcs.front().from;
    g.nodes.push_back(g.nodes[g.arcs.front().to]);
    g.arcs.push_back({bottom, 2, {}, {}, {}, {}});
    CHECK_FALSE(lattice_check(g).is_lattice);

    OrientedFlipGraph cyc = oriented_flip_graph(Dissection(4, Parity::Hollow, {{1, 5}}));
    cyc.arcs.push_back({cyc.arcs.front().to, cyc.arcs.front().from, {}, {}, {}, {}});
    CHECK_THROWS_AS(lattice_check(cyc), Error);
}

TEST_CASE("join decomposition") {
    const Dissection d(7, Parity::Hollow, {{3, 7}, {3, 11}, {7, 11}, {1, 11}});
    const auto factors = decompose(d);
    REQUIRE(factors.size() >= 2);
    std::size_t product = 1;
    int dims = 0;
    for (const auto& f : factors) {
        product *= oriented_flip_graph(f.dissection).nodes.size();
        dims += f.dissection.size();
    }
    CHECK(dims == d.size());
    CHECK(product == oriented_flip_graph(d).nodes.size());
}

TEST_CASE("links") {
    const Dissection d = example();
    const auto whole = link(d, Dissection(7, Parity::Solid, {}));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].dissection == d);

    const auto g = oriented_flip_graph(d);
    for (const auto& f : g.nodes)
        for (const auto& factor : link(d, f)) CHECK(factor.dissection.empty());

    // The link of one diagonal has as many facets as maximal faces through it.
    const Dissection edge(7, Parity::Solid, {{2, 10}});
    std::size_t through = 0;
    for (const auto& f : g.nodes) through += f.contains(Diagonal(2, 10));
    std::size_t product = 1;
    for (const auto& factor : link(d, edge)) product *= oriented_flip_graph(factor.dissection).nodes.size();
    CHECK(product == through);
}

TEST_CASE("reduction contracts consecutive boundary edges") {
    const Dissection d(6, Parity::Hollow, {{1, 7}});
    const auto r = normalize_reduction(d);
    CHECK(r.dissection.n() < d.n());
    CHECK(oriented_flip_graph(r.dissection).nodes.size() == oriented_flip_graph(d).nodes.size());
}

TEST_CASE("reciprocity") {
    const Dissection d = example();
    const auto r = reciprocity_check(d, Dissection(7, Parity::Solid, {{2, 6}, {2, 10}, {10, 14}}));
    CHECK(r.forward);
    CHECK(r.backward);
    for (int n = 3; n <= 6; ++n)
        for (const auto& x : all_dissections(n, Parity::Hollow)) {
            const auto rr = reciprocity_check(x, rotate_min(x));
            CHECK(rr.forward);
            CHECK(rr.backward);
        }
    const auto no = reciprocity_check(d, Dissection(7, Parity::Solid, {{4, 12}, {4, 8}}));
    CHECK_FALSE(no.forward);
    CHECK_FALSE(no.backward);
    CHECK(no.holds());
}

TEST_CASE("cell sequences") {
    CHECK(cell_sequence(example()) == std::vector<int>{3, 1});
    CHECK(cell_sequence(Dissection(6, Parity::Hollow, {})) == std::vector<int>{0, 0, 0, 1});
    // Quadrangulations of the octagon: three quadrilateral cells.
    CHECK(cell_sequence(Dissection(8, Parity::Hollow, {{1, 7}, {7, 13}})) == std::vector<int>{0, 3});
    for (const auto& f : oriented_flip_graph(example()).nodes) CHECK(cell_sequence(f) == std::vector<int>{3, 1});
}

TEST_CASE("all faces are subsets of facets") {
    const auto g = oriented_flip_graph(example());
    const auto faces = all_faces(g);
    // f-vector of a simplicial 2-sphere on 8 vertices: 1, 8, 18, 12.
    CHECK(faces.size() == 1 + 8 + 18 + 12);
}
