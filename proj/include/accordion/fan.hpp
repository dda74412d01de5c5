#pragma once

#include <map>
#include <optional>
#include <vector>

#include "accordion/complex.hpp"
#include "accordion/vectors.hpp"

namespace accordion {

using RayMap = std::map<Diagonal, IntVector>;

RayMap g_ray_map(const Dissection& reference);
RayMap d_ray_map(const Dissection& reference);

// Simplicial fan over the accordion complex. cones[i] lists ray indices of
// graph.nodes[i].
struct Fan {
    OrientedFlipGraph graph;
    std::vector<Diagonal> labels;
    std::vector<IntVector> rays;
    std::vector<std::vector<int>> cones;

    std::size_t dim() const { return graph.reference.diagonals().size(); }
    int ray_index(const Diagonal& d) const;
    IntMatrix cone_matrix(int cone) const;  // rays as columns
};

Fan make_fan(const OrientedFlipGraph& graph, const RayMap& rays);

// Linear dependence among the rays of two adjacent facets. The support starts
// with the removed diagonal, then the added one, then the shared diagonals in
// canonical order. Coefficients are scaled so the first one is 1.
struct FlipDependence {
    int arc = -1;  // index into graph.arcs when produced by a certificate
    std::vector<Diagonal> support;
    std::vector<Rational> coefficients;

    Rational alpha_prime() const { return coefficients.at(1); }
};

FlipDependence flip_dependence(const RayMap& rays, const FlipRecord& record);

enum class FanFailureKind { RankDeficient, ConeOverlap, SignMismatch };

struct FanFailure {
    FanFailureKind kind = FanFailureKind::RankDeficient;
    int face = -1;   // node index
    int other = -1;  // the overlapping node, for ConeOverlap
    int arc = -1;    // for SignMismatch
    // Dependence witness: a kernel vector on the face (RankDeficient) or on
    // the union of two adjacent faces (SignMismatch).
    std::vector<Diagonal> support;
    std::vector<Rational> coefficients;
};

struct FanCertificate {
    bool ok = false;
    int base_face = -1;
    bool base_is_basis = false;
    std::vector<FlipDependence> dependences;  // aligned with graph.arcs when computable
    std::vector<FanFailure> failures;
};

FanCertificate verify_complete_simplicial_fan(const OrientedFlipGraph& graph, const RayMap& rays,
                                              const AccordionFace& base_face);

struct GFan {
    Fan fan;
    FanCertificate certificate;
    bool smooth = false;
};

// Throws std::logic_error if the certificate fails, which would contradict
// the fan theorem.
GFan build_gfan(const Dissection& reference);
GFan build_gfan(const OrientedFlipGraph& graph);

struct DFan {
    std::optional<Fan> fan;  // present only when the certificate holds
    FanCertificate certificate;
};

DFan build_dfan(const Dissection& reference);
DFan build_dfan(const OrientedFlipGraph& graph);

// A cell with an even number of edges, none of them on the boundary.
bool even_interior_cell(const Dissection& reference);

// Every wall of the g-fan lies in the hyperplane orthogonal to a c-vector.
bool coarsening_check(const GFan& gfan);

// Coordinates of x in the ray basis of one maximal cone, nullopt if the cone
// is not full dimensional.
std::optional<std::vector<Rational>> cone_coordinates(const Fan& fan, int cone, const IntVector& x);

struct SectionResult {
    bool ray_coincidence = false;
    bool subfan_equals_section = false;
};

// Throws NotNested unless `sub` is a subset of `super` on the same polygon.
void require_nested(const Dissection& sub, const Dissection& super);

SectionResult section_check(const Dissection& sub, const Dissection& super);
bool dsection_link_check(const Dissection& sub, const Dissection& super);

// Coordinates of `super` that are not diagonals of `sub`.
std::vector<int> complement_coordinates(const Dissection& sub, const Dissection& super);

}  // namespace accordion
