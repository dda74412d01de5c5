#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "accordion/errors.hpp"

namespace accordion {

// Odd labels are hollow, even labels are solid.
enum class Parity { Hollow, Solid };

Parity opposite(Parity p);
Parity parity_of(int label);
const char* parity_name(Parity p);

// Unordered pair of labels, stored sorted so that value comparison is set
// comparison.
struct Diagonal {
    int a = 0;
    int b = 0;

    Diagonal() = default;
    Diagonal(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

    Parity parity() const { return parity_of(a); }
    bool has_endpoint(int v) const { return a == v || b == v; }
    bool shares_endpoint(const Diagonal& o) const {
        return has_endpoint(o.a) || has_endpoint(o.b);
    }
    int other(int v) const { return v == a ? b : a; }

    auto operator<=>(const Diagonal&) const = default;
};

std::string to_string(const Diagonal& d);

// Open segments intersect. Only the linear order of labels matters, so no
// polygon size is needed.
bool crosses(const Diagonal& d1, const Diagonal& d2);

// The 2n labelled points on the circle, labels increasing clockwise.
class Polygon {
public:
    explicit Polygon(int n);

    int n() const { return n_; }
    int size() const { return 2 * n_; }

    int wrap(int label) const;
    // Number of clockwise steps from `from` to `to`.
    int distance(int from, int to) const;
    bool strictly_between(int x, int from, int to) const;

    bool in_range(int label) const { return label >= 1 && label <= 2 * n_; }
    bool is_boundary(const Diagonal& d) const;
    Diagonal shifted(const Diagonal& d, int by) const;

    std::vector<int> labels(Parity p) const;
    std::vector<Diagonal> boundary_edges(Parity p) const;
    std::vector<Diagonal> internal_diagonals(Parity p) const;

    bool operator==(const Polygon&) const = default;

private:
    int n_;
};

// Geometric type of the path mu - delta - nu where mu and nu hang off the two
// endpoints of delta. Broken means mu or nu misses delta.
enum class PathShape { Z, S, V, Broken };

PathShape path_shape(const Polygon& polygon, const Diagonal& mu, const Diagonal& delta,
                     const Diagonal& nu);

struct Cell {
    std::vector<int> vertices;     // clockwise, smallest label first
    std::vector<Diagonal> edges;   // edges[i] joins vertices[i] and vertices[i+1]

    int size() const { return static_cast<int>(vertices.size()); }
};

class Dissection {
public:
    Dissection(int n, Parity parity, std::vector<Diagonal> diagonals);

    const Polygon& polygon() const { return polygon_; }
    int n() const { return polygon_.n(); }
    Parity parity() const { return parity_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    int size() const { return static_cast<int>(diagonals_.size()); }
    bool empty() const { return diagonals_.empty(); }

    bool contains(const Diagonal& d) const;
    int index_of(const Diagonal& d) const;

    const std::vector<Cell>& cells() const { return cells_; }
    // Internal diagonals together with the boundary edges, sorted.
    const std::vector<Diagonal>& barred() const { return barred_; }
    const std::vector<int>& cells_containing(const Diagonal& d) const;

    bool operator==(const Dissection& o) const {
        return polygon_ == o.polygon_ && parity_ == o.parity_ && diagonals_ == o.diagonals_;
    }
    bool operator<(const Dissection& o) const;

private:
    Polygon polygon_;
    Parity parity_;
    std::vector<Diagonal> diagonals_;
    std::vector<Diagonal> barred_;
    std::vector<Cell> cells_;
    std::map<Diagonal, std::vector<int>> incidence_;
};

Dissection build_dissection(int n, Parity parity, std::vector<Diagonal> diagonals);

// Diagonals of a barred dissection stored in the order a crossing line meets
// them, starting from its first endpoint.
struct Accordion {
    std::vector<Diagonal> diagonals;

    bool is_tree() const;
};

struct CrossedSet {
    std::vector<Diagonal> crossed;  // sorted
    bool is_accordion = false;
    std::optional<Accordion> accordion;
};

CrossedSet crossed_accordion(const Dissection& reference, const Diagonal& d);

std::vector<Diagonal> zigzag(const Accordion& a);

struct Angle {
    int apex = 0;
    Diagonal first;   // arms in clockwise order seen from the apex
    Diagonal second;

    auto operator<=>(const Angle&) const = default;
};

std::vector<Angle> angles(const Dissection& d);

// For a maximal accordion dissection `facet` of `reference`: the diagonal of the
// barred facet crossing both arms that lies farthest from the apex.
Diagonal closing_diagonal(const Dissection& reference, const Dissection& facet,
                          const Angle& angle);
// Same for every angle of the reference at once, aligned with angles(reference).
std::vector<Diagonal> closing_map(const Dissection& reference, const Dissection& facet);

namespace detail {
// Skips the maximality check; callers that already know the facet is maximal
// use this inside enumeration loops.
std::vector<Diagonal> closing_map_unchecked(const Dissection& reference, const Dissection& facet);
}  // namespace detail

Dissection rotate_min(const Dissection& reference);
Dissection rotate_max(const Dissection& reference);

std::vector<Accordion> subaccordions(const Dissection& reference);

// Collapses the circle onto a subset of one parity class. Each point of the
// other class lands in the gap after the nearest kept label counterclockwise.
class Relabeling {
public:
    Relabeling(const Polygon& source, Parity kept_parity, std::vector<int> kept);

    const Polygon& source() const { return source_; }
    const Polygon& target() const { return target_; }
    Parity kept_parity() const { return kept_parity_; }
    const std::vector<int>& kept() const { return kept_; }

    int map_kept(int label) const;
    int map_gap(int label) const;
    int map_label(int label) const;
    // nullopt when the endpoints become equal or a kept-parity endpoint was dropped.
    std::optional<Diagonal> map(const Diagonal& d) const;

private:
    Polygon source_;
    Polygon target_;
    Parity kept_parity_;
    std::vector<int> kept_;
};

}  // namespace accordion
