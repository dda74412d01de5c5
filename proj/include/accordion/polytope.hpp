#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "accordion/complex.hpp"
#include "accordion/vectors.hpp"

namespace accordion {

// <normal, x> <= rhs. `label` names the diagonal the facet comes from.
struct HalfSpace {
    Diagonal label;
    IntVector normal;
    std::int64_t rhs = 0;

    auto operator<=>(const HalfSpace&) const = default;
};

struct VertexPoint {
    std::vector<Diagonal> face;
    IntVector point;
};

struct PolytopeRep {
    Dissection reference;
    std::vector<VertexPoint> vertices;  // by canonical face order
    std::vector<HalfSpace> halfspaces;  // by label
    std::size_t dim = 0;
};

PolytopeRep accordiohedron(const Dissection& reference);
PolytopeRep accordiohedron(const OrientedFlipGraph& graph);

IntVector vertex_point(const Dissection& reference, const AccordionFace& face,
                       const std::map<Diagonal, std::int64_t>& heights);

struct NormalFanResult {
    bool ok = true;
    int failing_arc = -1;
    int failing_vertex = -1;
    std::string reason;
};

// Checks that the graph of `polytope` is the flip graph with edges along
// c-vectors, which certifies the g-vector fan as its normal fan.
NormalFanResult verify_normal_fan(const PolytopeRep& polytope, const OrientedFlipGraph& graph);

// Support function of the Minkowski sum of the segments [0, c].
std::int64_t zonotope_support(const Dissection& reference, const IntVector& y);
std::int64_t zonotope_support(const std::vector<IntVector>& c_vectors, const IntVector& y);

PolytopeRep parallelepiped(const Dissection& reference);
bool matriochka_check(const Dissection& reference);

int parallel_facets(const PolytopeRep& polytope);
bool orientation_check(const PolytopeRep& polytope, const OrientedFlipGraph& graph);

// Orthogonal projection of the accordiohedron of `super` onto the
// coordinates of `sub`.
PolytopeRep project_accordiohedron(const Dissection& sub, const Dissection& super);

using RationalPoint = std::vector<Rational>;

// Brute force over all dim-subsets of facets. Intended for dim <= 4.
std::vector<RationalPoint> vertex_enumeration_desk(const std::vector<HalfSpace>& halfspaces, std::size_t dim);

// x -> (reflect ? -x : x) + shift on labels. An even shift keeps both
// polygons in place.
struct Symmetry {
    bool reflect = false;
    int shift = 0;

    int apply(const Polygon& polygon, int label) const;
    Diagonal apply(const Polygon& polygon, const Diagonal& d) const;
    Dissection apply(const Dissection& d) const;
    int signature() const { return reflect ? -1 : 1; }
};

// The isometry induced on coordinates: the result lives over sigma(reference).
IntVector transport(const Symmetry& sigma, const Dissection& reference, const IntVector& x);

struct InvariantComplex {
    Dissection reference;
    Symmetry sigma;
    std::vector<std::vector<Diagonal>> orbits;  // crossing-free orbits, sorted
    std::vector<std::vector<int>> facets;       // maximal orbit sets with crossing-free union

    std::vector<Diagonal> diagonals_of(const std::vector<int>& orbit_set) const;
};

InvariantComplex invariant_complex(const Dissection& reference, const Symmetry& sigma);
// Pure, and every orbit of every facet can be exchanged for exactly one other.
bool is_pseudomanifold(const InvariantComplex& complex);

// Orbits of the reference diagonals, as coordinate index lists.
std::vector<std::vector<int>> coordinate_orbits(const Dissection& reference, const Symmetry& sigma);
// Invariant vertices of the accordiohedron; dim is that of the fixed space.
PolytopeRep invariant_polytope(const Dissection& reference, const Symmetry& sigma);

}  // namespace accordion
