#include "accordion/polygon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "accordion/complex.hpp"

namespace accordion {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::BadLabel: return "BadLabel";
        case ErrorKind::CrossingPair: return "CrossingPair";
        case ErrorKind::BoundaryInput: return "BoundaryInput";
        case ErrorKind::NotAccordion: return "NotAccordion";
        case ErrorKind::NotMaximal: return "NotMaximal";
        case ErrorKind::NotMember: return "NotMember";
        case ErrorKind::CyclicGraph: return "CyclicGraph";
        case ErrorKind::NoDecomposition: return "NoDecomposition";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::EmptyReference: return "EmptyReference";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::DfanUnavailable: return "DfanUnavailable";
        case ErrorKind::Unbounded: return "Unbounded";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::NotRotation: return "NotRotation";
        case ErrorKind::WrongDimension: return "WrongDimension";
    }
    return "Error";
}

Parity opposite(Parity p) { return p == Parity::Hollow ? Parity::Solid : Parity::Hollow; }

Parity parity_of(int label) { return (label % 2 != 0) ? Parity::Hollow : Parity::Solid; }

const char* parity_name(Parity p) { return p == Parity::Hollow ? "hollow" : "solid"; }

std::string to_string(const Diagonal& d) { return std::to_string(d.a) + "-" + std::to_string(d.b); }

bool crosses(const Diagonal& d1, const Diagonal& d2) {
    if (d1.shares_endpoint(d2)) return false;
    return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) ||
           (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

Polygon::Polygon(int n) : n_(n) {
    if (n < 3) throw Error(ErrorKind::BadLabel, "polygon needs at least 3 vertices, got " + std::to_string(n));
}

int Polygon::wrap(int label) const {
    int m = size();
    int r = (label - 1) % m;
    if (r < 0) r += m;
    return r + 1;
}

int Polygon::distance(int from, int to) const {
    int m = size();
    int r = (to - from) % m;
    return r < 0 ? r + m : r;
}

bool Polygon::strictly_between(int x, int from, int to) const {
    int dx = distance(from, x);
    return dx > 0 && dx < distance(from, to);
}

bool Polygon::is_boundary(const Diagonal& d) const {
    return distance(d.a, d.b) == 2 || distance(d.b, d.a) == 2;
}

Diagonal Polygon::shifted(const Diagonal& d, int by) const {
    return Diagonal(wrap(d.a + by), wrap(d.b + by));
}

std::vector<int> Polygon::labels(Parity p) const {
    std::vector<int> out;
    for (int v = (p == Parity::Hollow ? 1 : 2); v <= size(); v += 2) out.push_back(v);
    return out;
}

std::vector<Diagonal> Polygon::boundary_edges(Parity p) const {
    std::vector<int> vs = labels(p);
    std::vector<Diagonal> out;
    for (std::size_t i = 0; i < vs.size(); ++i) out.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Diagonal> Polygon::internal_diagonals(Parity p) const {
    std::vector<int> vs = labels(p);
    std::vector<Diagonal> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            Diagonal d(vs[i], vs[j]);
            if (!is_boundary(d)) out.push_back(d);
        }
    return out;
}

PathShape path_shape(const Polygon& polygon, const Diagonal& mu, const Diagonal& delta,
                     const Diagonal& nu) {
    int p = delta.a, q = delta.b;
    bool mu_p = mu.has_endpoint(p), mu_q = mu.has_endpoint(q);
    bool nu_p = nu.has_endpoint(p), nu_q = nu.has_endpoint(q);
    if (mu == delta || nu == delta || mu_p == mu_q || nu_p == nu_q) return PathShape::Broken;
    if (mu_p == nu_p) return PathShape::V;
    // Orient the path as x - s - t - y with mu = {x, s} and nu = {t, y}.
    int s = mu_p ? p : q;
    int t = delta.other(s);
    int x = mu.other(s);
    // A convex quadrilateral is crossed at most twice by a line, so the first
    // turn alone tells Z from S, whichever end we start from.
    bool clockwise_first = polygon.distance(x, s) < polygon.distance(x, t);
    return clockwise_first ? PathShape::Z : PathShape::S;
}

namespace {

std::vector<Diagonal> cell_edges(const std::vector<int>& vertices) {
    std::vector<Diagonal> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    return out;
}

}  // namespace

Dissection::Dissection(int n, Parity parity, std::vector<Diagonal> diagonals)
    : polygon_(n), parity_(parity) {
    for (const Diagonal& d : diagonals) {
        if (!polygon_.in_range(d.a) || !polygon_.in_range(d.b))
            throw Error(ErrorKind::BadLabel, "label out of range in " + to_string(d));
        if (d.a == d.b) throw Error(ErrorKind::BadLabel, "degenerate diagonal " + to_string(d));
        if (parity_of(d.a) != parity || parity_of(d.b) != parity)
            throw Error(ErrorKind::BadLabel, to_string(d) + " is not " + parity_name(parity));
        if (polygon_.is_boundary(d))
            throw Error(ErrorKind::BadLabel, to_string(d) + " is a boundary edge, not an internal diagonal");
    }
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
    for (std::size_t i = 0; i < diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals.size(); ++j)
            if (crosses(diagonals[i], diagonals[j]))
                throw Error(ErrorKind::CrossingPair,
                            to_string(diagonals[i]) + " crosses " + to_string(diagonals[j]));
    diagonals_ = std::move(diagonals);

    barred_ = diagonals_;
    for (const Diagonal& e : polygon_.boundary_edges(parity)) barred_.push_back(e);
    std::sort(barred_.begin(), barred_.end());

    // Cells of points on a circle are convex, so their clockwise vertex order is
    // simply the sorted label order. Splitting along each diagonal in turn
    // keeps every list sorted.
    std::vector<std::vector<int>> pieces{polygon_.labels(parity)};
    for (const Diagonal& d : diagonals_) {
        for (std::size_t c = 0; c < pieces.size(); ++c) {
            const auto& vs = pieces[c];
            if (!std::binary_search(vs.begin(), vs.end(), d.a) ||
                !std::binary_search(vs.begin(), vs.end(), d.b))
                continue;
            std::vector<int> inner, outer;
            for (int v : vs) {
                if (v >= d.a && v <= d.b) inner.push_back(v);
                if (v <= d.a || v >= d.b) outer.push_back(v);
            }
            pieces[c] = std::move(inner);
            pieces.push_back(std::move(outer));
            break;
        }
    }
    std::sort(pieces.begin(), pieces.end());
    for (auto& vs : pieces) {
        Cell cell;
        cell.edges = cell_edges(vs);
        cell.vertices = std::move(vs);
        cells_.push_back(std::move(cell));
    }
    for (std::size_t c = 0; c < cells_.size(); ++c)
        for (const Diagonal& e : cells_[c].edges) incidence_[e].push_back(static_cast<int>(c));
}

bool Dissection::contains(const Diagonal& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

int Dissection::index_of(const Diagonal& d) const {
    auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), d);
    if (it == diagonals_.end() || *it != d) return -1;
    return static_cast<int>(it - diagonals_.begin());
}

const std::vector<int>& Dissection::cells_containing(const Diagonal& d) const {
    static const std::vector<int> none;
    auto it = incidence_.find(d);
    return it == incidence_.end() ? none : it->second;
}

bool Dissection::operator<(const Dissection& o) const {
    if (n() != o.n()) return n() < o.n();
    if (parity_ != o.parity_) return parity_ < o.parity_;
    return diagonals_ < o.diagonals_;
}

Dissection build_dissection(int n, Parity parity, std::vector<Diagonal> diagonals) {
    return Dissection(n, parity, std::move(diagonals));
}

bool Accordion::is_tree() const {
    if (diagonals.empty()) return false;
    std::vector<int> vs;
    for (const Diagonal& d : diagonals) {
        vs.push_back(d.a);
        vs.push_back(d.b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != diagonals.size() + 1) return false;
    std::vector<int> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto idx = [&](int v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    for (const Diagonal& d : diagonals) {
        int x = find(idx(d.a)), y = find(idx(d.b));
        if (x == y) return false;
        parent[x] = y;
    }
    return true;
}

namespace {

void check_crosser(const Dissection& reference, const Diagonal& d) {
    const Polygon& poly = reference.polygon();
    if (!poly.in_range(d.a) || !poly.in_range(d.b) || d.a == d.b ||
        parity_of(d.a) != parity_of(d.b) || d.parity() == reference.parity())
        throw Error(ErrorKind::BadLabel, to_string(d) + " is not a diagonal of the opposite parity");
}

bool connected_by_endpoints(const std::vector<Diagonal>& edges) {
    if (edges.empty()) return false;
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        int r = find(it->second);
        parent[x] = r;
        return r;
    };
    for (const Diagonal& e : edges) parent[find(e.a)] = find(e.b);
    int root = find(edges.front().a);
    for (const Diagonal& e : edges)
        if (find(e.a) != root) return false;
    return true;
}

}  // namespace

CrossedSet crossed_accordion(const Dissection& reference, const Diagonal& d) {
    check_crosser(reference, d);
    const Polygon& poly = reference.polygon();
    if (poly.is_boundary(d)) throw Error(ErrorKind::BoundaryInput, to_string(d) + " is a boundary edge");

    CrossedSet out;
    for (const Diagonal& e : reference.barred())
        if (crosses(e, d)) out.crossed.push_back(e);
    out.is_accordion = connected_by_endpoints(out.crossed);
    if (out.is_accordion) {
        // Sort by the size of the region each crossed diagonal cuts off around
        // d.a; these regions are nested, so this is the order along d.
        auto region = [&](const Diagonal& e) {
            int inside = poly.strictly_between(e.a, d.a, d.b) ? e.a : e.b;
            int outside = e.other(inside);
            return poly.distance(outside, d.a) + poly.distance(d.a, inside);
        };
        Accordion acc{out.crossed};
        std::sort(acc.diagonals.begin(), acc.diagonals.end(),
                  [&](const Diagonal& x, const Diagonal& y) { return region(x) < region(y); });
        out.accordion = std::move(acc);
    }
    return out;
}

std::vector<Diagonal> zigzag(const Accordion& a) {
    std::map<int, int> degree;
    for (const Diagonal& d : a.diagonals) {
        ++degree[d.a];
        ++degree[d.b];
    }
    std::vector<Diagonal> out;
    for (const Diagonal& d : a.diagonals)
        if (degree[d.a] >= 2 && degree[d.b] >= 2) out.push_back(d);
    return out;
}

std::vector<Angle> angles(const Dissection& d) {
    const Polygon& poly = d.polygon();
    std::vector<Angle> out;
    for (int v : poly.labels(d.parity())) {
        std::vector<int> nbrs;
        for (const Diagonal& e : d.barred())
            if (e.has_endpoint(v)) nbrs.push_back(e.other(v));
        std::sort(nbrs.begin(), nbrs.end(),
                  [&](int x, int y) { return poly.distance(v, x) < poly.distance(v, y); });
        for (std::size_t i = 0; i + 1 < nbrs.size(); ++i)
            out.push_back(Angle{v, Diagonal(v, nbrs[i]), Diagonal(v, nbrs[i + 1])});
    }
    return out;
}

namespace {

Diagonal closing_unchecked(const Dissection& facet, const Angle& angle) {
    const Polygon& poly = facet.polygon();
    int v = angle.apex;
    std::optional<Diagonal> best;
    int best_size = -1;
    for (const Diagonal& x : facet.barred()) {
        if (!crosses(x, angle.first) || !crosses(x, angle.second)) continue;
        // Size of the side of x that contains the apex.
        int side = poly.strictly_between(v, x.a, x.b) ? poly.distance(x.a, x.b) : poly.distance(x.b, x.a);
        if (side > best_size) {
            best_size = side;
            best = x;
        }
    }
    if (!best) throw std::logic_error("no diagonal crosses both arms of the angle at " + std::to_string(v));
    return *best;
}

void require_maximal(const Dissection& reference, const Dissection& facet) {
    if (facet.parity() == reference.parity() || facet.n() != reference.n())
        throw Error(ErrorKind::BadLabel, "facet must live on the same polygon with the opposite parity");
    if (!is_maximal_accordion_dissection(reference, facet))
        throw Error(ErrorKind::NotMaximal, "not a maximal accordion dissection of the reference");
}

}  // namespace

Diagonal closing_diagonal(const Dissection& reference, const Dissection& facet, const Angle& angle) {
    require_maximal(reference, facet);
    return closing_unchecked(facet, angle);
}

std::vector<Diagonal> closing_map(const Dissection& reference, const Dissection& facet) {
    require_maximal(reference, facet);
    return detail::closing_map_unchecked(reference, facet);
}

std::vector<Diagonal> detail::closing_map_unchecked(const Dissection& reference, const Dissection& facet) {
    std::vector<Diagonal> out;
    for (const Angle& a : angles(reference)) out.push_back(closing_unchecked(facet, a));
    return out;
}

namespace {

Dissection rotated(const Dissection& reference, int by) {
    std::vector<Diagonal> ds;
    for (const Diagonal& d : reference.diagonals()) ds.push_back(reference.polygon().shifted(d, by));
    return Dissection(reference.n(), opposite(reference.parity()), std::move(ds));
}

}  // namespace

Dissection rotate_min(const Dissection& reference) { return rotated(reference, -1); }

Dissection rotate_max(const Dissection& reference) { return rotated(reference, +1); }

std::vector<Accordion> subaccordions(const Dissection& reference) {
    const Polygon& poly = reference.polygon();
    std::set<std::vector<Diagonal>> seen;
    std::vector<Accordion> out;
    for (const Diagonal& d : poly.internal_diagonals(opposite(reference.parity()))) {
        CrossedSet cs = crossed_accordion(reference, d);
        if (!cs.is_accordion) continue;
        // Only the two ends of the crossing sequence are boundary edges, so
        // every contiguous run of internal diagonals is a subaccordion.
        std::vector<Diagonal> run;
        for (const Diagonal& e : cs.accordion->diagonals)
            if (!poly.is_boundary(e)) run.push_back(e);
        for (std::size_t i = 0; i < run.size(); ++i)
            for (std::size_t j = i + 1; j <= run.size(); ++j) {
                std::vector<Diagonal> piece(run.begin() + i, run.begin() + j);
                std::vector<Diagonal> key = piece;
                std::sort(key.begin(), key.end());
                if (seen.insert(key).second) out.push_back(Accordion{piece});
            }
    }
    std::sort(out.begin(), out.end(), [](const Accordion& x, const Accordion& y) {
        std::vector<Diagonal> kx = x.diagonals, ky = y.diagonals;
        std::sort(kx.begin(), kx.end());
        std::sort(ky.begin(), ky.end());
        return kx < ky;
    });
    return out;
}

Relabeling::Relabeling(const Polygon& source, Parity kept_parity, std::vector<int> kept)
    : source_(source), target_(static_cast<int>(kept.size())), kept_parity_(kept_parity), kept_(std::move(kept)) {
    std::sort(kept_.begin(), kept_.end());
    if (std::adjacent_find(kept_.begin(), kept_.end()) != kept_.end())
        throw Error(ErrorKind::BadLabel, "kept labels must be distinct");
    for (int v : kept_)
        if (!source_.in_range(v) || parity_of(v) != kept_parity_)
            throw Error(ErrorKind::BadLabel, "cannot keep label " + std::to_string(v));
}

int Relabeling::map_kept(int label) const {
    auto it = std::lower_bound(kept_.begin(), kept_.end(), label);
    if (it == kept_.end() || *it != label)
        throw Error(ErrorKind::BadLabel, "label " + std::to_string(label) + " was contracted away");
    int k = static_cast<int>(it - kept_.begin());
    return (kept_parity_ == Parity::Hollow ? 1 : 2) + 2 * k;
}

int Relabeling::map_gap(int label) const {
    // Nearest kept label counterclockwise, wrapping past the start.
    auto it = std::lower_bound(kept_.begin(), kept_.end(), label);
    int before = (it == kept_.begin()) ? kept_.back() : *(it - 1);
    return target_.wrap(map_kept(before) + 1);
}

int Relabeling::map_label(int label) const {
    return parity_of(label) == kept_parity_ ? map_kept(label) : map_gap(label);
}

std::optional<Diagonal> Relabeling::map(const Diagonal& d) const {
    if (d.parity() == kept_parity_) {
        if (!std::binary_search(kept_.begin(), kept_.end(), d.a) ||
            !std::binary_search(kept_.begin(), kept_.end(), d.b))
            return std::nullopt;
        return Diagonal(map_kept(d.a), map_kept(d.b));
    }
    int x = map_gap(d.a), y = map_gap(d.b);
    if (x == y) return std::nullopt;
    return Diagonal(x, y);
}

}  // namespace accordion
