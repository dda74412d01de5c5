#include "accordion/vectors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "accordion/complex.hpp"

namespace accordion {

IntVector IntVector::unit(std::size_t dim, std::size_t i, std::int64_t value) {
    IntVector v(dim);
    v[i] = value;
    return v;
}

bool IntVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

bool IntVector::nonnegative() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x >= 0; });
}

bool IntVector::nonpositive() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x <= 0; });
}

IntVector IntVector::operator+(const IntVector& o) const {
    IntVector r(*this);
    for (std::size_t i = 0; i < size(); ++i) r[i] = linalg::add(r[i], o[i]);
    return r;
}

IntVector IntVector::operator-(const IntVector& o) const { return *this + (-o); }

IntVector IntVector::operator-() const {
    IntVector r(*this);
    for (auto& x : r.coords_) x = -x;
    return r;
}

IntVector IntVector::operator*(std::int64_t s) const {
    IntVector r(*this);
    for (auto& x : r.coords_) x = linalg::mul(x, s);
    return r;
}

std::int64_t IntVector::dot(const IntVector& o) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < size(); ++i) s = linalg::add(s, linalg::mul(coords_[i], o[i]));
    return s;
}

namespace {

// Shape of mu - member - nu, where mu and nu are the edges through which the
// crosser leaves the two cells of `holder` adjacent to `member`.
std::optional<PathShape> shape_in_cells(const Dissection& holder, const Diagonal& member, const Diagonal& crosser) {
    if (!crosses(member, crosser)) return std::nullopt;
    std::vector<Diagonal> exits;
    for (int c : holder.cells_containing(member)) {
        std::vector<Diagonal> hit;
        for (const Diagonal& e : holder.cells()[c].edges)
            if (e != member && crosses(e, crosser)) hit.push_back(e);
        if (hit.size() != 1) return PathShape::Broken;
        exits.push_back(hit.front());
    }
    if (exits.size() != 2) return PathShape::Broken;
    return path_shape(holder.polygon(), exits[0], member, exits[1]);
}

SignValue hollow_sign(const Dissection& reference, const Diagonal& member, const Diagonal& crosser) {
    auto shape = shape_in_cells(reference, member, crosser);
    if (!shape) return SignValue::Zero;
    switch (*shape) {
        case PathShape::Z: return SignValue::Plus;
        case PathShape::S: return SignValue::Minus;
        case PathShape::V: return SignValue::Zero;
        case PathShape::Broken: break;
    }
    throw Error(ErrorKind::NotAccordion, to_string(crosser) + " enters and leaves a cell through non-incident edges");
}

SignValue solid_sign(const Dissection& face, const Diagonal& crosser, const Diagonal& member) {
    auto shape = shape_in_cells(face, member, crosser);
    if (!shape) return SignValue::Zero;
    switch (*shape) {
        case PathShape::S: return SignValue::Plus;
        case PathShape::Z: return SignValue::Minus;
        case PathShape::V: return SignValue::Zero;
        case PathShape::Broken: break;
    }
    throw Error(ErrorKind::NotMaximal, to_string(crosser) + " is not an accordion diagonal of the face");
}

void require_member(const Dissection& d, const Diagonal& x) {
    if (!d.contains(x)) throw Error(ErrorKind::NotMember, to_string(x) + " is not a diagonal of the dissection");
}

void require_accordion(const Dissection& reference, const Diagonal& d) {
    if (!crossed_accordion(reference, d).is_accordion)
        throw Error(ErrorKind::NotAccordion, to_string(d) + " is not an accordion diagonal");
}

void require_maximal_face(const Dissection& reference, const Dissection& face) {
    if (!is_maximal_accordion_dissection(reference, face))
        throw Error(ErrorKind::NotMaximal, "not a maximal accordion dissection of the reference");
}

}  // namespace

SignValue slalom_sign_hollow(const Diagonal& member, const Dissection& reference, const Diagonal& crosser) {
    require_member(reference, member);
    require_accordion(reference, crosser);
    return hollow_sign(reference, member, crosser);
}

SignValue slalom_sign_solid(const Diagonal& crosser, const Dissection& face, const Diagonal& member) {
    require_member(face, member);
    return solid_sign(face, crosser, member);
}

IntVector detail::g_vector_unchecked(const Dissection& reference, const Diagonal& d) {
    IntVector g(reference.diagonals().size());
    if (reference.polygon().is_boundary(d)) return g;
    for (std::size_t i = 0; i < reference.diagonals().size(); ++i)
        g[i] = value(hollow_sign(reference, reference.diagonals()[i], d));
    return g;
}

IntVector g_vector(const Dissection& reference, const Diagonal& d) {
    if (!reference.polygon().is_boundary(d)) require_accordion(reference, d);
    else if (d.parity() == reference.parity()) throw Error(ErrorKind::BadLabel, to_string(d) + " has the wrong parity");
    return detail::g_vector_unchecked(reference, d);
}

std::vector<IntVector> detail::c_vectors_unchecked(const Dissection& reference, const Dissection& face) {
    std::vector<IntVector> out;
    for (const Diagonal& member : face.diagonals()) {
        IntVector c(reference.diagonals().size());
        for (std::size_t i = 0; i < reference.diagonals().size(); ++i)
            c[i] = value(solid_sign(face, reference.diagonals()[i], member));
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<IntVector> c_vectors(const Dissection& reference, const Dissection& face) {
    require_maximal_face(reference, face);
    return detail::c_vectors_unchecked(reference, face);
}

IntVector c_vector(const Dissection& reference, const Dissection& face, const Diagonal& d) {
    require_member(face, d);
    return c_vectors(reference, face)[face.index_of(d)];
}

std::vector<IntVector> c_vector_set(const Dissection& reference) {
    std::set<IntVector> all;
    for (const Dissection& face : oriented_flip_graph(reference).nodes)
        for (IntVector& c : detail::c_vectors_unchecked(reference, face)) all.insert(std::move(c));
    return {all.begin(), all.end()};
}

IntVector d_vector(const Dissection& reference, const Diagonal& d) {
    const Polygon& poly = reference.polygon();
    if (d.parity() == reference.parity() || poly.is_boundary(d))
        throw Error(ErrorKind::BadLabel, to_string(d) + " is not an internal diagonal of the opposite parity");
    IntVector v(reference.diagonals().size());
    for (std::size_t i = 0; i < reference.diagonals().size(); ++i) {
        const Diagonal& ij = reference.diagonals()[i];
        const Diagonal shifted = poly.shifted(ij, -1);
        if (shifted == d) v[i] = -1;
        else if (crosses(shifted, d)) v[i] = 1;
    }
    return v;
}

std::int64_t height(const Dissection& reference, const Diagonal& d) {
    if (d.parity() == reference.parity())
        throw Error(ErrorKind::BadLabel, to_string(d) + " has the parity of the reference");
    if (reference.polygon().is_boundary(d)) return 0;
    require_accordion(reference, d);
    std::int64_t h = 0;
    for (const Diagonal& x : accordion_diagonals(reference))
        if (crosses(x, d)) ++h;
    return h;
}

std::map<Diagonal, std::int64_t> heights(const Dissection& reference) {
    std::vector<Diagonal> acc = accordion_diagonals(reference);
    std::map<Diagonal, std::int64_t> out;
    for (const Diagonal& d : acc) {
        std::int64_t h = 0;
        for (const Diagonal& x : acc)
            if (crosses(x, d)) ++h;
        out[d] = h;
    }
    return out;
}

namespace {

IntMatrix columns_to_matrix(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, std::vector<std::int64_t>(columns.size(), 0));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = columns[j][i];
    return m;
}

}  // namespace

IntMatrix g_matrix(const Dissection& reference, const Dissection& face) {
    std::vector<IntVector> cols;
    for (const Diagonal& d : face.diagonals()) cols.push_back(g_vector(reference, d));
    return columns_to_matrix(cols, reference.diagonals().size());
}

IntMatrix c_matrix(const Dissection& reference, const Dissection& face) {
    return columns_to_matrix(c_vectors(reference, face), reference.diagonals().size());
}

}  // namespace accordion
