#include "accordion/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "accordion/fan.hpp"

namespace accordion {

IntVector vertex_point(const Dissection& reference, const AccordionFace& face,
                       const std::map<Diagonal, std::int64_t>& heights) {
    std::vector<IntVector> cs = detail::c_vectors_unchecked(reference, face);
    IntVector p(reference.diagonals().size());
    for (std::size_t i = 0; i < cs.size(); ++i) p = p + cs[i] * heights.at(face.diagonals()[i]);
    return p;
}

namespace {

void require_nonempty(const Dissection& reference) {
    if (reference.empty()) throw Error(ErrorKind::EmptyReference, "the reference dissection has no diagonals");
}

std::vector<HalfSpace> facet_halfspaces(const Dissection& reference, const std::map<Diagonal, std::int64_t>& heights) {
    std::vector<HalfSpace> out;
    for (const auto& [d, h] : heights) out.push_back(HalfSpace{d, detail::g_vector_unchecked(reference, d), h});
    return out;
}

}  // namespace

PolytopeRep accordiohedron(const Dissection& reference) { return accordiohedron(oriented_flip_graph(reference)); }

PolytopeRep accordiohedron(const OrientedFlipGraph& graph) {
    const Dissection& reference = graph.reference;
    require_nonempty(reference);
    std::map<Diagonal, std::int64_t> h = heights(reference);
    PolytopeRep out{reference, {}, facet_halfspaces(reference, h), reference.diagonals().size()};
    for (const AccordionFace& face : graph.nodes)
        out.vertices.push_back(VertexPoint{face.diagonals(), vertex_point(reference, face, h)});
    return out;
}

NormalFanResult verify_normal_fan(const PolytopeRep& polytope, const OrientedFlipGraph& graph) {
    const Dissection& reference = graph.reference;
    const Polygon& poly = reference.polygon();
    auto fail = [](int arc, int vertex, std::string why) { return NormalFanResult{false, arc, vertex, std::move(why)}; };

    if (polytope.vertices.size() != graph.nodes.size()) return fail(-1, -1, "vertex count differs from the face count");
    std::map<Diagonal, std::int64_t> h;
    for (const HalfSpace& hs : polytope.halfspaces) h[hs.label] = hs.rhs;
    auto height_of = [&](const Diagonal& d) -> std::optional<std::int64_t> {
        if (poly.is_boundary(d)) return 0;
        auto it = h.find(d);
        if (it == h.end()) return std::nullopt;
        return it->second;
    };

    std::vector<std::vector<IntVector>> cs;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const VertexPoint& v = polytope.vertices[i];
        if (v.face != graph.nodes[i].diagonals()) return fail(-1, static_cast<int>(i), "vertices are not aligned with faces");
        // Tight exactly on the facets of its own face.
        for (const HalfSpace& hs : polytope.halfspaces) {
            std::int64_t value = hs.normal.dot(v.point);
            bool own = std::binary_search(v.face.begin(), v.face.end(), hs.label);
            if (value > hs.rhs) return fail(-1, static_cast<int>(i), "vertex violates " + to_string(hs.label));
            if ((value == hs.rhs) != own) return fail(-1, static_cast<int>(i), "wrong tight set at " + to_string(hs.label));
        }
        cs.push_back(detail::c_vectors_unchecked(reference, graph.nodes[i]));
    }

    for (std::size_t a = 0; a < graph.arcs.size(); ++a) {
        const FlipArc& arc = graph.arcs[a];
        const IntVector& c = cs[arc.from][graph.nodes[arc.from].index_of(arc.removed)];
        const IntVector& c2 = cs[arc.to][graph.nodes[arc.to].index_of(arc.added)];
        if (c != -c2) return fail(static_cast<int>(a), -1, "c-vectors across the flip are not opposite");
        auto hm = height_of(arc.mu), hn = height_of(arc.nu), hd = height_of(arc.removed), ha = height_of(arc.added);
        if (!hm || !hn || !hd || !ha) return fail(static_cast<int>(a), -1, "missing height");
        const std::int64_t lambda = *hm + *hn - *hd - *ha;
        IntVector diff = polytope.vertices[arc.to].point - polytope.vertices[arc.from].point;
        // Independent recovery of lambda by exact division.
        std::optional<std::int64_t> divided;
        for (std::size_t i = 0; i < c.size() && !divided; ++i)
            if (c[i] != 0) {
                if (diff[i] % c[i] != 0) return fail(static_cast<int>(a), -1, "edge is not an integer multiple of the c-vector");
                divided = diff[i] / c[i];
            }
        if (!divided || c * *divided != diff) return fail(static_cast<int>(a), -1, "edge is not parallel to the c-vector");
        if (*divided != lambda) return fail(static_cast<int>(a), -1, "edge length disagrees with the height formula");
        if (lambda > -2) return fail(static_cast<int>(a), -1, "edge length is not at most -2");
    }
    return {};
}

std::int64_t zonotope_support(const std::vector<IntVector>& c_vectors, const IntVector& y) {
    std::int64_t s = 0;
    for (const IntVector& c : c_vectors) s = linalg::add(s, std::max<std::int64_t>(c.dot(y), 0));
    return s;
}

std::int64_t zonotope_support(const Dissection& reference, const IntVector& y) {
    return zonotope_support(c_vector_set(reference), y);
}

PolytopeRep parallelepiped(const Dissection& reference) {
    require_nonempty(reference);
    const std::size_t k = reference.diagonals().size();
    const Polygon& poly = reference.polygon();
    std::map<Diagonal, std::int64_t> h = heights(reference);
    PolytopeRep out{reference, {}, {}, k};
    // For each coordinate, the two opposite facets and the coordinate value on each.
    std::vector<std::pair<Diagonal, std::int64_t>> low(k), high(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (int by : {-1, 1}) {
            Diagonal d = poly.shifted(reference.diagonals()[i], by);
            IntVector g = detail::g_vector_unchecked(reference, d);
            out.halfspaces.push_back(HalfSpace{d, g, h.at(d)});
            (g[i] > 0 ? high : low)[i] = {d, g[i] * h.at(d)};
        }
    }
    std::sort(out.halfspaces.begin(), out.halfspaces.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        VertexPoint v{{}, IntVector(k)};
        for (std::size_t i = 0; i < k; ++i) {
            const auto& side = (mask >> i) & 1 ? high[i] : low[i];
            v.face.push_back(side.first);
            v.point[i] = side.second;
        }
        std::sort(v.face.begin(), v.face.end());
        out.vertices.push_back(std::move(v));
    }
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const VertexPoint& x, const VertexPoint& y) { return x.face < y.face; });
    return out;
}

bool matriochka_check(const Dissection& reference) {
    PolytopeRep acco = accordiohedron(reference);
    std::vector<IntVector> cs = c_vector_set(reference);
    for (const HalfSpace& hs : acco.halfspaces)
        if (zonotope_support(cs, hs.normal) > hs.rhs) return false;
    PolytopeRep para = parallelepiped(reference);
    for (const HalfSpace& hs : para.halfspaces)
        if (!std::binary_search(acco.halfspaces.begin(), acco.halfspaces.end(), hs)) return false;
    return true;
}

int parallel_facets(const PolytopeRep& polytope) {
    int pairs = 0;
    for (std::size_t i = 0; i < polytope.halfspaces.size(); ++i)
        for (std::size_t j = i + 1; j < polytope.halfspaces.size(); ++j)
            if (polytope.halfspaces[i].normal == -polytope.halfspaces[j].normal) ++pairs;
    return pairs;
}

bool orientation_check(const PolytopeRep& polytope, const OrientedFlipGraph& graph) {
    auto total = [](const IntVector& v) {
        std::int64_t s = 0;
        for (auto x : v.coords()) s = linalg::add(s, x);
        return s;
    };
    for (const FlipArc& arc : graph.arcs)
        if (total(polytope.vertices[arc.from].point) <= total(polytope.vertices[arc.to].point)) return false;
    return true;
}

PolytopeRep project_accordiohedron(const Dissection& sub, const Dissection& super) {
    require_nested(sub, super);
    require_nonempty(sub);
    const std::vector<int> outside = complement_coordinates(sub, super);
    std::map<Diagonal, std::int64_t> h = heights(super);
    OrientedFlipGraph graph = oriented_flip_graph(sub);
    PolytopeRep out{sub, {}, {}, sub.diagonals().size()};
    for (const AccordionFace& face : graph.nodes)
        out.vertices.push_back(VertexPoint{face.diagonals(), vertex_point(sub, face, h)});
    for (const auto& [d, rhs] : h) {
        IntVector g = detail::g_vector_unchecked(super, d);
        if (std::any_of(outside.begin(), outside.end(), [&](int i) { return g[i] != 0; })) continue;
        IntVector r(sub.diagonals().size());
        for (std::size_t i = 0; i < sub.diagonals().size(); ++i) r[i] = g[super.index_of(sub.diagonals()[i])];
        out.halfspaces.push_back(HalfSpace{d, std::move(r), rhs});
    }
    return out;
}

std::vector<RationalPoint> vertex_enumeration_desk(const std::vector<HalfSpace>& halfspaces, std::size_t dim) {
    if (dim > 4) throw Error(ErrorKind::WrongDimension, "brute-force vertex enumeration is limited to dimension 4");
    for (const HalfSpace& hs : halfspaces)
        if (hs.normal.size() != dim) throw Error(ErrorKind::WrongDimension, "halfspace of the wrong dimension");

    // Bounded iff the recession cone {A x <= 0} contains no x with x_i = +-1.
    std::set<std::vector<std::int64_t>> normals;
    for (const HalfSpace& hs : halfspaces) normals.insert(hs.normal.coords());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::int64_t s : {1, -1}) {
            std::vector<linalg::Constraint> system;
            for (const auto& n : normals) {
                std::vector<std::int64_t> row(n);
                for (auto& x : row) x = -x;
                system.push_back({std::move(row), 0, false});
            }
            std::vector<std::int64_t> row(dim, 0);
            row[i] = s;
            system.push_back({std::move(row), 1, false});
            if (linalg::feasible(system, dim)) throw Error(ErrorKind::Unbounded, "the halfspaces do not bound a polytope");
        }

    auto satisfies = [&](const RationalPoint& x) {
        for (const HalfSpace& hs : halfspaces) {
            Rational v(0);
            for (std::size_t j = 0; j < dim; ++j) v += Rational(hs.normal[j]) * x[j];
            if (v > Rational(hs.rhs)) return false;
        }
        return true;
    };

    std::set<RationalPoint> found;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (pick.size() == dim) {
            IntMatrix a;
            std::vector<std::int64_t> b;
            for (std::size_t i : pick) {
                a.push_back(halfspaces[i].normal.coords());
                b.push_back(halfspaces[i].rhs);
            }
            if (dim == 0) {
                if (satisfies({})) found.insert({});
                return;
            }
            auto x = linalg::solve(a, b);
            if (x && satisfies(*x)) found.insert(*x);
            return;
        }
        for (std::size_t i = from; i < halfspaces.size(); ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return {found.begin(), found.end()};
}

int Symmetry::apply(const Polygon& polygon, int label) const {
    return polygon.wrap((reflect ? -label : label) + shift);
}

Diagonal Symmetry::apply(const Polygon& polygon, const Diagonal& d) const {
    return Diagonal(apply(polygon, d.a), apply(polygon, d.b));
}

Dissection Symmetry::apply(const Dissection& d) const {
    if (shift % 2 != 0) throw Error(ErrorKind::NotInvariant, "an odd shift exchanges the two polygons");
    std::vector<Diagonal> out;
    for (const Diagonal& x : d.diagonals()) out.push_back(apply(d.polygon(), x));
    return Dissection(d.n(), d.parity(), std::move(out));
}

IntVector transport(const Symmetry& sigma, const Dissection& reference, const IntVector& x) {
    Dissection image = sigma.apply(reference);
    IntVector y(x.size());
    for (std::size_t i = 0; i < reference.diagonals().size(); ++i)
        y[image.index_of(sigma.apply(reference.polygon(), reference.diagonals()[i]))] = sigma.signature() * x[i];
    return y;
}

namespace {

void require_invariant_rotation(const Dissection& reference, const Symmetry& sigma) {
    if (sigma.reflect) throw Error(ErrorKind::NotRotation, "invariant complexes are only built for rotations");
    if (!(sigma.apply(reference) == reference)) throw Error(ErrorKind::NotInvariant, "the reference is not invariant");
}

std::vector<Diagonal> orbit_of(const Polygon& poly, const Symmetry& sigma, const Diagonal& d) {
    std::vector<Diagonal> orbit{d};
    for (Diagonal x = sigma.apply(poly, d); x != d; x = sigma.apply(poly, x)) orbit.push_back(x);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

bool crossing_free(const std::vector<Diagonal>& ds) {
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (crosses(ds[i], ds[j])) return false;
    return true;
}

}  // namespace

std::vector<Diagonal> InvariantComplex::diagonals_of(const std::vector<int>& orbit_set) const {
    std::vector<Diagonal> out;
    for (int o : orbit_set) out.insert(out.end(), orbits[o].begin(), orbits[o].end());
    std::sort(out.begin(), out.end());
    return out;
}

InvariantComplex invariant_complex(const Dissection& reference, const Symmetry& sigma) {
    require_invariant_rotation(reference, sigma);
    InvariantComplex out{reference, sigma, {}, {}};
    std::set<std::vector<Diagonal>> orbits;
    for (const Diagonal& d : accordion_diagonals(reference)) {
        auto orbit = orbit_of(reference.polygon(), sigma, d);
        if (crossing_free(orbit)) orbits.insert(std::move(orbit));
    }
    out.orbits.assign(orbits.begin(), orbits.end());

    const std::size_t m = out.orbits.size();
    std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, true));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (const Diagonal& x : out.orbits[i])
                for (const Diagonal& y : out.orbits[j])
                    if (crosses(x, y)) compatible[i][j] = false;

    std::vector<int> current;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        for (std::size_t i = from; i < m; ++i) {
            if (!std::all_of(current.begin(), current.end(), [&](int c) { return compatible[c][i]; })) continue;
            current.push_back(static_cast<int>(i));
            extend(i + 1);
            current.pop_back();
        }
        // Maximal when no orbit at all can be added.
        for (std::size_t i = 0; i < m; ++i) {
            if (std::find(current.begin(), current.end(), static_cast<int>(i)) != current.end()) continue;
            if (std::all_of(current.begin(), current.end(), [&](int c) { return compatible[c][i]; })) return;
        }
        out.facets.push_back(current);
    };
    extend(0);
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

bool is_pseudomanifold(const InvariantComplex& complex) {
    if (complex.facets.empty()) return false;
    const std::size_t size = complex.facets.front().size();
    for (const auto& f : complex.facets)
        if (f.size() != size) return false;
    for (const auto& f : complex.facets)
        for (int o : f) {
            std::vector<int> ridge;
            std::copy_if(f.begin(), f.end(), std::back_inserter(ridge), [&](int x) { return x != o; });
            int others = 0;
            for (const auto& g : complex.facets)
                if (g != f && std::includes(g.begin(), g.end(), ridge.begin(), ridge.end())) ++others;
            if (others != 1) return false;
        }
    return true;
}

std::vector<std::vector<int>> coordinate_orbits(const Dissection& reference, const Symmetry& sigma) {
    require_invariant_rotation(reference, sigma);
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(reference.diagonals().size(), false);
    for (std::size_t i = 0; i < reference.diagonals().size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        for (const Diagonal& d : orbit_of(reference.polygon(), sigma, reference.diagonals()[i])) {
            int j = reference.index_of(d);
            seen[j] = true;
            orbit.push_back(j);
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

PolytopeRep invariant_polytope(const Dissection& reference, const Symmetry& sigma) {
    const std::size_t dim = coordinate_orbits(reference, sigma).size();
    PolytopeRep acco = accordiohedron(reference);
    PolytopeRep out{reference, {}, acco.halfspaces, dim};
    for (VertexPoint& v : acco.vertices) {
        Dissection face(reference.n(), opposite(reference.parity()), v.face);
        const bool invariant = sigma.apply(face) == face;
        const bool fixed = transport(sigma, reference, v.point) == v.point;
        if (invariant != fixed) throw std::logic_error("invariant faces and fixed vertices disagree");
        if (invariant) out.vertices.push_back(std::move(v));
    }
    return out;
}

}  // namespace accordion
