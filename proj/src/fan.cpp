#include "accordion/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace accordion {

RayMap g_ray_map(const Dissection& reference) {
    RayMap out;
    for (const Diagonal& d : accordion_diagonals(reference)) out.emplace(d, detail::g_vector_unchecked(reference, d));
    return out;
}

RayMap d_ray_map(const Dissection& reference) {
    RayMap out;
    for (const Diagonal& d : accordion_diagonals(reference)) out.emplace(d, d_vector(reference, d));
    return out;
}

int Fan::ray_index(const Diagonal& d) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), d);
    if (it == labels.end() || *it != d) throw Error(ErrorKind::NotMember, to_string(d) + " is not a ray of the fan");
    return static_cast<int>(it - labels.begin());
}

namespace {

IntMatrix columns(const std::vector<const IntVector*>& cols, std::size_t dim) {
    IntMatrix m(dim, std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = (*cols[j])[i];
    return m;
}

const IntVector& ray_of(const RayMap& rays, const Diagonal& d) {
    auto it = rays.find(d);
    if (it == rays.end()) throw Error(ErrorKind::NotMember, "no ray for " + to_string(d));
    return it->second;
}

IntMatrix face_matrix(const RayMap& rays, const std::vector<Diagonal>& face, std::size_t dim) {
    std::vector<const IntVector*> cols;
    for (const Diagonal& d : face) cols.push_back(&ray_of(rays, d));
    return columns(cols, dim);
}

std::vector<Diagonal> dependence_support(const FlipRecord& record) {
    std::vector<Diagonal> support{record.removed, record.added};
    for (const Diagonal& d : record.from.diagonals())
        if (d != record.removed) support.push_back(d);
    return support;
}

}  // namespace

IntMatrix Fan::cone_matrix(int cone) const {
    std::vector<const IntVector*> cols;
    for (int r : cones[cone]) cols.push_back(&rays[r]);
    return columns(cols, dim());
}

Fan make_fan(const OrientedFlipGraph& graph, const RayMap& rays) {
    Fan fan{graph, {}, {}, {}};
    for (const auto& [d, v] : rays) {
        if (v.size() != graph.reference.diagonals().size())
            throw Error(ErrorKind::WrongDimension, "ray of " + to_string(d) + " has the wrong dimension");
        fan.labels.push_back(d);
        fan.rays.push_back(v);
    }
    for (const AccordionFace& face : graph.nodes) {
        std::vector<int> cone;
        for (const Diagonal& d : face.diagonals()) cone.push_back(fan.ray_index(d));
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

FlipDependence flip_dependence(const RayMap& rays, const FlipRecord& record) {
    const std::size_t k = record.from.diagonals().size();
    const std::size_t dim = rays.empty() ? k : rays.begin()->second.size();
    for (const AccordionFace* face : {&record.from, &record.to})
        if (linalg::rank(face_matrix(rays, face->diagonals(), dim)) < static_cast<int>(k))
            throw Error(ErrorKind::RankDeficient, "the rays of a facet are linearly dependent");
    FlipDependence dep;
    dep.support = dependence_support(record);
    std::vector<std::int64_t> z = linalg::cofactor_kernel(face_matrix(rays, dep.support, dim));
    // Both facets are bases, so deleting either exchanged column leaves a
    // nonzero minor and z[0], z[1] cannot vanish.
    for (std::int64_t x : z) dep.coefficients.emplace_back(x, z[0]);
    return dep;
}

FanCertificate verify_complete_simplicial_fan(const OrientedFlipGraph& graph, const RayMap& rays,
                                              const AccordionFace& base_face) {
    FanCertificate cert;
    const std::size_t k = graph.reference.diagonals().size();
    auto base = graph.find(base_face);
    if (!base) throw Error(ErrorKind::NotMember, "the base face is not a node of the flip graph");
    cert.base_face = *base;

    std::vector<bool> independent(graph.nodes.size());
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        IntMatrix m = face_matrix(rays, graph.nodes[i].diagonals(), k);
        independent[i] = linalg::rank(m) == static_cast<int>(k);
        if (independent[i]) continue;
        FanFailure f;
        f.kind = FanFailureKind::RankDeficient;
        f.face = static_cast<int>(i);
        f.support = graph.nodes[i].diagonals();
        const auto kernel = linalg::nullspace(m);
        for (std::int64_t x : kernel.front()) f.coefficients.emplace_back(x);
        cert.failures.push_back(std::move(f));
    }
    cert.base_is_basis = independent[*base];

    // Condition (1). With B the base matrix, B x = R y for x, y > 0 means
    // adj(B) R y has the sign of det B in every coordinate.
    if (cert.base_is_basis && k > 0) {
        IntMatrix b = face_matrix(rays, base_face.diagonals(), k);
        const std::int64_t sign = linalg::determinant(b) > 0 ? 1 : -1;
        IntMatrix adj = linalg::adjugate(b);
        for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
            if (static_cast<int>(i) == *base) continue;
            IntMatrix m = linalg::multiply(adj, face_matrix(rays, graph.nodes[i].diagonals(), k));
            std::vector<linalg::Constraint> system;
            for (std::size_t r = 0; r < k; ++r) {
                std::vector<std::int64_t> row(k);
                for (std::size_t c = 0; c < k; ++c) row[c] = sign * m[r][c];
                system.push_back({std::move(row), 0, true});
            }
            for (std::size_t c = 0; c < k; ++c) {
                std::vector<std::int64_t> row(k, 0);
                row[c] = 1;
                system.push_back({std::move(row), 0, true});
            }
            if (linalg::feasible(system, k)) {
                FanFailure f;
                f.kind = FanFailureKind::ConeOverlap;
                f.face = *base;
                f.other = static_cast<int>(i);
                cert.failures.push_back(std::move(f));
            }
        }
    }

    // Condition (2).
    for (std::size_t a = 0; a < graph.arcs.size(); ++a) {
        const FlipArc& arc = graph.arcs[a];
        if (!independent[arc.from] || !independent[arc.to]) continue;
        FlipDependence dep = flip_dependence(rays, graph.record(arc));
        dep.arc = static_cast<int>(a);
        if (dep.alpha_prime() <= Rational(0)) {
            FanFailure f;
            f.kind = FanFailureKind::SignMismatch;
            f.face = arc.from;
            f.arc = static_cast<int>(a);
            f.support = dep.support;
            f.coefficients = dep.coefficients;
            cert.failures.push_back(std::move(f));
        }
        cert.dependences.push_back(std::move(dep));
    }
    cert.ok = cert.base_is_basis && cert.failures.empty();
    return cert;
}

GFan build_gfan(const Dissection& reference) { return build_gfan(oriented_flip_graph(reference)); }

GFan build_gfan(const OrientedFlipGraph& graph) {
    RayMap rays = g_ray_map(graph.reference);
    GFan out{make_fan(graph, rays), verify_complete_simplicial_fan(graph, rays, rotate_min(graph.reference)), true};
    if (!out.certificate.ok) throw std::logic_error("g-vector fan certificate failed");
    for (std::size_t i = 0; i < out.fan.cones.size(); ++i) {
        std::int64_t det = linalg::determinant(out.fan.cone_matrix(static_cast<int>(i)));
        if (det != 1 && det != -1) out.smooth = false;
    }
    return out;
}

DFan build_dfan(const Dissection& reference) { return build_dfan(oriented_flip_graph(reference)); }

DFan build_dfan(const OrientedFlipGraph& graph) {
    RayMap rays = d_ray_map(graph.reference);
    DFan out{std::nullopt, verify_complete_simplicial_fan(graph, rays, rotate_min(graph.reference))};
    if (out.certificate.ok) out.fan = make_fan(graph, rays);
    return out;
}

bool even_interior_cell(const Dissection& reference) {
    const Polygon& poly = reference.polygon();
    for (const Cell& c : reference.cells()) {
        if (c.size() % 2 != 0) continue;
        if (std::none_of(c.edges.begin(), c.edges.end(), [&](const Diagonal& e) { return poly.is_boundary(e); }))
            return true;
    }
    return false;
}

bool coarsening_check(const GFan& gfan) {
    const Fan& fan = gfan.fan;
    const Dissection& reference = fan.graph.reference;
    for (const FlipArc& arc : fan.graph.arcs) {
        const AccordionFace& face = fan.graph.nodes[arc.from];
        IntVector c = detail::c_vectors_unchecked(reference, face)[face.index_of(arc.removed)];
        if (c.is_zero()) return false;
        for (const Diagonal& y : face.diagonals())
            if (y != arc.removed && c.dot(fan.rays[fan.ray_index(y)]) != 0) return false;
    }
    return true;
}

std::optional<std::vector<Rational>> cone_coordinates(const Fan& fan, int cone, const IntVector& x) {
    return linalg::solve(fan.cone_matrix(cone), x.coords());
}

void require_nested(const Dissection& sub, const Dissection& super) {
    if (sub.n() != super.n() || sub.parity() != super.parity())
        throw Error(ErrorKind::NotNested, "the dissections live on different polygons");
    for (const Diagonal& d : sub.diagonals())
        if (!super.contains(d)) throw Error(ErrorKind::NotNested, to_string(d) + " is missing from the larger dissection");
}

namespace {

bool in_subspace(const IntVector& v, const std::vector<int>& outside) {
    return std::all_of(outside.begin(), outside.end(), [&](int i) { return v[i] == 0; });
}

IntVector restrict_to(const IntVector& v, const Dissection& sub, const Dissection& super) {
    IntVector out(sub.diagonals().size());
    for (std::size_t i = 0; i < sub.diagonals().size(); ++i) out[i] = v[super.index_of(sub.diagonals()[i])];
    return out;
}

}  // namespace

std::vector<int> complement_coordinates(const Dissection& sub, const Dissection& super) {
    std::vector<int> out;
    for (std::size_t i = 0; i < super.diagonals().size(); ++i)
        if (!sub.contains(super.diagonals()[i])) out.push_back(static_cast<int>(i));
    return out;
}

SectionResult section_check(const Dissection& sub, const Dissection& super) {
    require_nested(sub, super);
    const std::vector<int> outside = complement_coordinates(sub, super);
    SectionResult result{true, true};

    RayMap super_rays = g_ray_map(super);
    for (const Diagonal& d : accordion_diagonals(sub))
        if (!super_rays.count(d)) result.ray_coincidence = false;
    std::set<Diagonal> in_section;
    for (const auto& [d, g] : super_rays) {
        const bool inside = in_subspace(g, outside);
        if (inside) in_section.insert(d);
        if (inside != is_accordion_diagonal(sub, d)) result.ray_coincidence = false;
        else if (inside && restrict_to(g, sub, super) != detail::g_vector_unchecked(sub, d))
            result.ray_coincidence = false;
    }

    std::set<std::vector<Diagonal>> section_faces;
    for (const auto& f : all_faces(oriented_flip_graph(super)))
        if (std::all_of(f.begin(), f.end(), [&](const Diagonal& d) { return in_section.count(d) > 0; }))
            section_faces.insert(f);
    auto sub_faces = all_faces(oriented_flip_graph(sub));
    result.subfan_equals_section = section_faces == std::set<std::vector<Diagonal>>(sub_faces.begin(), sub_faces.end());
    return result;
}

bool dsection_link_check(const Dissection& sub, const Dissection& super) {
    require_nested(sub, super);
    if (even_interior_cell(super))
        throw Error(ErrorKind::DfanUnavailable, "the larger dissection has an even interior cell");
    const std::vector<int> outside = complement_coordinates(sub, super);
    std::vector<Diagonal> removed;
    for (int i : outside) removed.push_back(super.polygon().shifted(super.diagonals()[i], -1));
    std::sort(removed.begin(), removed.end());

    std::set<Diagonal> in_section;
    for (const auto& [d, v] : d_ray_map(super)) {
        const bool inside = in_subspace(v, outside);
        const bool free = std::none_of(removed.begin(), removed.end(), [&](const Diagonal& r) { return crosses(r, d); }) &&
                          !std::binary_search(removed.begin(), removed.end(), d);
        if (inside != free) return false;
        if (inside) in_section.insert(d);
    }

    std::set<std::vector<Diagonal>> section_faces, link_faces;
    for (const auto& f : all_faces(oriented_flip_graph(super))) {
        if (std::all_of(f.begin(), f.end(), [&](const Diagonal& d) { return in_section.count(d) > 0; }))
            section_faces.insert(f);
        // Link of `removed`: faces disjoint from it whose union with it is a face.
        if (std::includes(f.begin(), f.end(), removed.begin(), removed.end())) {
            std::vector<Diagonal> rest;
            std::set_difference(f.begin(), f.end(), removed.begin(), removed.end(), std::back_inserter(rest));
            link_faces.insert(std::move(rest));
        }
    }
    return section_faces == link_faces;
}

}  // namespace accordion
