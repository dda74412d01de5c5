#include "accordion/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace accordion {

namespace {

void require_opposite(const Dissection& reference, const Dissection& face) {
    if (face.n() != reference.n() || face.parity() == reference.parity())
        throw Error(ErrorKind::BadLabel, "face must live on the same polygon with the opposite parity");
}

bool compatible_with_all(const Diagonal& d, const std::vector<Diagonal>& face) {
    for (const Diagonal& e : face)
        if (e == d || crosses(e, d)) return false;
    return true;
}

bool maximal_among(const std::vector<Diagonal>& accordion, const std::vector<Diagonal>& face) {
    for (const Diagonal& d : accordion)
        if (compatible_with_all(d, face)) return false;
    return true;
}

}  // namespace

std::vector<Diagonal> accordion_diagonals(const Dissection& reference) {
    std::vector<Diagonal> out;
    for (const Diagonal& d : reference.polygon().internal_diagonals(opposite(reference.parity())))
        if (crossed_accordion(reference, d).is_accordion) out.push_back(d);
    return out;
}

bool is_accordion_diagonal(const Dissection& reference, const Diagonal& d) {
    if (reference.polygon().is_boundary(d)) return false;
    return crossed_accordion(reference, d).is_accordion;
}

bool is_accordion_dissection(const Dissection& reference, const Dissection& face) {
    require_opposite(reference, face);
    for (const Diagonal& d : face.diagonals())
        if (!is_accordion_diagonal(reference, d)) return false;
    return true;
}

bool is_maximal_accordion_dissection(const Dissection& reference, const Dissection& face) {
    if (!is_accordion_dissection(reference, face)) return false;
    return maximal_among(accordion_diagonals(reference), face.diagonals());
}

std::vector<Dissection> all_dissections(int n, Parity parity) {
    Polygon poly(n);
    std::vector<Diagonal> candidates = poly.internal_diagonals(parity);
    std::vector<std::vector<Diagonal>> sets;
    std::vector<Diagonal> current;
    auto grow = [&](auto&& self, std::size_t from) -> void {
        sets.push_back(current);
        for (std::size_t i = from; i < candidates.size(); ++i) {
            if (!compatible_with_all(candidates[i], current)) continue;
            current.push_back(candidates[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    grow(grow, 0);
    std::sort(sets.begin(), sets.end());
    std::vector<Dissection> out;
    for (auto& s : sets) out.emplace_back(n, parity, std::move(s));
    return out;
}

namespace {

// The side-of-d test for a cell of the face: the cell lying in the clockwise
// arc from d.a to d.b has every vertex in [d.a, d.b].
const Cell& cell_on_side(const Dissection& face, const Diagonal& d, bool inside) {
    for (int c : face.cells_containing(d)) {
        const Cell& cell = face.cells()[c];
        bool within = std::all_of(cell.vertices.begin(), cell.vertices.end(),
                                  [&](int v) { return v >= d.a && v <= d.b; });
        if (within == inside) return cell;
    }
    throw std::logic_error("no cell on the requested side of " + to_string(d));
}

// The edge of `cell` whose outer arc holds `apex`.
Diagonal separating_edge(const Polygon& poly, const Cell& cell, int apex) {
    for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
        int x = cell.vertices[i], y = cell.vertices[(i + 1) % cell.vertices.size()];
        if (poly.strictly_between(apex, x, y)) return Diagonal(x, y);
    }
    throw std::logic_error("apex " + std::to_string(apex) + " is not cut off by any cell edge");
}

FlipRecord flip_unchecked(const Dissection& reference, const AccordionFace& face, const Diagonal& d) {
    const Polygon& poly = reference.polygon();
    std::vector<Angle> as = angles(reference);
    std::vector<Diagonal> closers = detail::closing_map_unchecked(reference, face);
    std::vector<int> apices;
    for (std::size_t i = 0; i < as.size(); ++i)
        if (closers[i] == d) apices.push_back(as[i].apex);
    if (apices.size() != 2)
        throw std::logic_error(to_string(d) + " closes " + std::to_string(apices.size()) + " angles");

    std::vector<Diagonal> witnesses;
    for (int u : apices) {
        bool inside = poly.strictly_between(u, d.a, d.b);
        witnesses.push_back(separating_edge(poly, cell_on_side(face, d, inside), u));
    }
    Diagonal mu = witnesses[0], nu = witnesses[1];
    if (path_shape(poly, mu, d, nu) == PathShape::Broken || path_shape(poly, mu, d, nu) == PathShape::V)
        throw std::logic_error("witness edges of " + to_string(d) + " do not span a quadrilateral");
    int s = mu.has_endpoint(d.a) ? d.a : d.b;
    Diagonal added(mu.other(s), nu.other(d.other(s)));

    std::vector<Diagonal> next;
    for (const Diagonal& e : face.diagonals())
        if (e != d) next.push_back(e);
    next.push_back(added);
    return FlipRecord{face, Dissection(face.n(), face.parity(), std::move(next)), d, added, mu, nu};
}

}  // namespace

FlipRecord flip(const Dissection& reference, const AccordionFace& face, const Diagonal& d) {
    require_opposite(reference, face);
    if (!face.contains(d)) throw Error(ErrorKind::NotMember, to_string(d) + " is not in the face");
    if (!is_maximal_accordion_dissection(reference, face))
        throw Error(ErrorKind::NotMaximal, "flips need a maximal accordion dissection");
    FlipRecord r = flip_unchecked(reference, face, d);
    if (!is_maximal_accordion_dissection(reference, r.to))
        throw std::logic_error("flip of " + to_string(d) + " left the accordion complex");
    return r;
}

FlipRecord reversed(const FlipRecord& record) {
    return FlipRecord{record.to, record.from, record.added, record.removed, record.mu, record.nu};
}

FlipDirection flip_direction(const Dissection& reference, const FlipRecord& record) {
    switch (path_shape(reference.polygon(), record.mu, record.removed, record.nu)) {
        case PathShape::S: return FlipDirection::Increasing;
        case PathShape::Z: return FlipDirection::Decreasing;
        default: throw std::logic_error("flip record does not form an S or a Z");
    }
}

std::optional<int> OrientedFlipGraph::find(const AccordionFace& face) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), face);
    if (it == nodes.end() || !(*it == face)) return std::nullopt;
    return static_cast<int>(it - nodes.begin());
}

FlipRecord OrientedFlipGraph::record(const FlipArc& arc) const {
    return FlipRecord{nodes[arc.from], nodes[arc.to], arc.removed, arc.added, arc.mu, arc.nu};
}

std::vector<int> OrientedFlipGraph::sources() const {
    std::vector<int> indeg(nodes.size(), 0);
    for (const FlipArc& a : arcs) ++indeg[a.to];
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (indeg[i] == 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> OrientedFlipGraph::sinks() const {
    std::vector<int> outdeg(nodes.size(), 0);
    for (const FlipArc& a : arcs) ++outdeg[a.from];
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (outdeg[i] == 0) out.push_back(static_cast<int>(i));
    return out;
}

OrientedFlipGraph oriented_flip_graph(const Dissection& reference) {
    AccordionFace start = rotate_min(reference);
    std::map<std::vector<Diagonal>, AccordionFace> seen;
    std::map<std::pair<std::vector<Diagonal>, std::vector<Diagonal>>, FlipRecord> flips;
    std::deque<AccordionFace> queue{start};
    seen.emplace(start.diagonals(), start);
    while (!queue.empty()) {
        AccordionFace face = queue.front();
        queue.pop_front();
        for (const Diagonal& d : face.diagonals()) {
            FlipRecord r = flip_unchecked(reference, face, d);
            if (flip_direction(reference, r) == FlipDirection::Decreasing) r = reversed(r);
            flips.emplace(std::make_pair(r.from.diagonals(), r.to.diagonals()), r);
            const AccordionFace& other = (r.from == face) ? r.to : r.from;
            if (seen.emplace(other.diagonals(), other).second) queue.push_back(other);
        }
    }
    OrientedFlipGraph g{reference, {}, {}};
    for (auto& [key, face] : seen) g.nodes.push_back(face);
    for (auto& [key, r] : flips)
        g.arcs.push_back(FlipArc{*g.find(r.from), *g.find(r.to), r.removed, r.added, r.mu, r.nu});
    std::sort(g.arcs.begin(), g.arcs.end(), [](const FlipArc& x, const FlipArc& y) {
        return std::tie(x.from, x.to) < std::tie(y.from, y.to);
    });
    return g;
}

std::vector<std::vector<Diagonal>> all_faces(const OrientedFlipGraph& graph) {
    std::set<std::vector<Diagonal>> faces;
    for (const AccordionFace& f : graph.nodes) {
        const auto& ds = f.diagonals();
        for (unsigned mask = 0; mask < (1u << ds.size()); ++mask) {
            std::vector<Diagonal> sub;
            for (std::size_t i = 0; i < ds.size(); ++i)
                if (mask & (1u << i)) sub.push_back(ds[i]);
            faces.insert(std::move(sub));
        }
    }
    return {faces.begin(), faces.end()};
}

LatticeResult lattice_check(const OrientedFlipGraph& graph) {
    const std::size_t v = graph.nodes.size();
    std::vector<std::vector<int>> succ(v), pred(v);
    std::vector<int> indeg(v, 0);
    for (const FlipArc& a : graph.arcs) {
        succ[a.from].push_back(a.to);
        pred[a.to].push_back(a.from);
        ++indeg[a.to];
    }
    std::vector<int> order;
    std::deque<int> ready;
    for (std::size_t i = 0; i < v; ++i)
        if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
    while (!ready.empty()) {
        int x = ready.front();
        ready.pop_front();
        order.push_back(x);
        for (int y : succ[x])
            if (--indeg[y] == 0) ready.push_back(y);
    }
    if (order.size() != v) throw Error(ErrorKind::CyclicGraph, "the flip graph has a directed cycle");

    using Bits = boost::dynamic_bitset<>;
    std::vector<Bits> up(v, Bits(v)), down(v, Bits(v));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        up[*it].set(*it);
        for (int y : succ[*it]) up[*it] |= up[y];
    }
    for (int x : order) {
        down[x].set(x);
        for (int y : pred[x]) down[x] |= down[y];
    }
    // A bound set has a least element iff some member sees all of it.
    auto has_extreme = [&](const Bits& bound, const std::vector<Bits>& cone) {
        for (auto m = bound.find_first(); m != Bits::npos; m = bound.find_next(m))
            if (bound.is_subset_of(cone[m])) return true;
        return false;
    };
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j) {
            if (!has_extreme(up[i] & up[j], up) || !has_extreme(down[i] & down[j], down))
                return LatticeResult{false, std::make_pair(static_cast<int>(i), static_cast<int>(j))};
        }
    return LatticeResult{true, std::nullopt};
}

namespace {

JoinFactor restrict_to(const Dissection& reference, std::vector<int> kept, const std::vector<Diagonal>& keep) {
    Relabeling rl(reference.polygon(), reference.parity(), std::move(kept));
    std::vector<Diagonal> mapped;
    for (const Diagonal& d : keep) {
        auto m = rl.map(d);
        if (m && !rl.target().is_boundary(*m)) mapped.push_back(*m);
    }
    Dissection sub(rl.target().n(), reference.parity(), std::move(mapped));
    return JoinFactor{std::move(sub), std::move(rl)};
}

}  // namespace

std::vector<JoinFactor> decompose(const Dissection& reference) {
    const Polygon& poly = reference.polygon();
    const Cell* split = nullptr;
    for (const Cell& c : reference.cells()) {
        int boundary = static_cast<int>(std::count_if(c.edges.begin(), c.edges.end(),
                                                      [&](const Diagonal& e) { return poly.is_boundary(e); }));
        if (boundary >= 2) {
            split = &c;
            break;
        }
    }
    if (!split) throw Error(ErrorKind::NoDecomposition, "every cell has at most one boundary edge");

    const int m = split->size();
    int start = 0;
    while (!poly.is_boundary(split->edges[start])) ++start;
    // Walk the cell once from just after a boundary edge; each maximal run of
    // internal edges between two boundary edges yields one factor.
    std::vector<JoinFactor> out;
    std::vector<int> run;  // indices of internal edges
    for (int step = 1; step <= m; ++step) {
        int e = (start + step) % m;
        if (!poly.is_boundary(split->edges[e])) {
            run.push_back(e);
            continue;
        }
        std::vector<int> kept = split->vertices;
        std::vector<Diagonal> keep;
        if (!run.empty()) {
            int from = split->vertices[run.front()];
            int to = split->vertices[(run.back() + 1) % m];
            auto in_arc = [&](int x) { return x == from || x == to || poly.strictly_between(x, from, to); };
            for (int x : poly.labels(reference.parity()))
                if (in_arc(x)) kept.push_back(x);
            for (const Diagonal& d : reference.diagonals())
                if (in_arc(d.a) && in_arc(d.b)) keep.push_back(d);
        }
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        out.push_back(restrict_to(reference, std::move(kept), keep));
        run.clear();
    }
    return out;
}

std::vector<JoinFactor> link(const Dissection& reference, const AccordionFace& face) {
    require_opposite(reference, face);
    std::vector<JoinFactor> out;
    for (const Cell& cell : face.cells()) {
        Relabeling rl(reference.polygon(), face.parity(), cell.vertices);
        std::vector<Diagonal> mapped;
        for (const Diagonal& d : reference.diagonals()) {
            auto m = rl.map(d);
            if (m && !rl.target().is_boundary(*m)) mapped.push_back(*m);
        }
        Dissection sub(rl.target().n(), reference.parity(), std::move(mapped));
        out.push_back(JoinFactor{std::move(sub), std::move(rl)});
    }
    return out;
}

JoinFactor normalize_reduction(const Dissection& reference) {
    const Polygon& poly = reference.polygon();
    std::set<int> kept;
    for (int v : poly.labels(reference.parity())) kept.insert(v);
    // Consecutive kept labels bound a contracted boundary edge.
    auto adjacent = [&](int x, int y) {
        auto it = kept.find(x);
        auto next = std::next(it) == kept.end() ? kept.begin() : std::next(it);
        auto prev = it == kept.begin() ? std::prev(kept.end()) : std::prev(it);
        return *next == y || *prev == y;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Cell& cell : reference.cells()) {
            std::vector<int> vs;
            for (int v : cell.vertices)
                if (kept.count(v)) vs.push_back(v);
            if (vs.size() < 4) continue;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                int prev = vs[(i + vs.size() - 1) % vs.size()], here = vs[i], next = vs[(i + 1) % vs.size()];
                if (adjacent(prev, here) && adjacent(here, next)) {
                    kept.erase(here);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return restrict_to(reference, std::vector<int>(kept.begin(), kept.end()), reference.diagonals());
}

ReciprocityResult reciprocity_check(const Dissection& hollow, const Dissection& solid) {
    require_opposite(hollow, solid);
    return ReciprocityResult{is_maximal_accordion_dissection(hollow, solid),
                             is_maximal_accordion_dissection(solid, hollow)};
}

std::vector<int> cell_sequence(const Dissection& d) {
    std::vector<int> out;
    for (const Cell& c : d.cells()) {
        std::size_t slot = static_cast<std::size_t>(c.size() - 3);
        if (out.size() <= slot) out.resize(slot + 1, 0);
        ++out[slot];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace accordion
