#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "accordion/linalg.hpp"
#include "accordion/polygon.hpp"

namespace accordion {

// Dense integer vector over the diagonals of a reference dissection, in the
// reference's canonical diagonal order.
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t dim) : coords_(dim, 0) {}
    explicit IntVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

    static IntVector unit(std::size_t dim, std::size_t i, std::int64_t value = 1);

    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    bool is_zero() const;
    bool nonnegative() const;
    bool nonpositive() const;

    IntVector operator+(const IntVector& o) const;
    IntVector operator-(const IntVector& o) const;
    IntVector operator-() const;
    IntVector operator*(std::int64_t s) const;
    std::int64_t dot(const IntVector& o) const;

    auto operator<=>(const IntVector&) const = default;

private:
    std::vector<std::int64_t> coords_;
};

enum class SignValue : int { Minus = -1, Zero = 0, Plus = 1 };

inline int value(SignValue s) { return static_cast<int>(s); }

// epsilon of a member of the reference against a crossing accordion diagonal.
SignValue slalom_sign_hollow(const Diagonal& member, const Dissection& reference, const Diagonal& crosser);
// epsilon of a reference diagonal against a member of the face, measured in
// the cells of the face. The S/Z convention is opposite to the one above.
SignValue slalom_sign_solid(const Diagonal& crosser, const Dissection& face, const Diagonal& member);

IntVector g_vector(const Dissection& reference, const Diagonal& d);
IntVector c_vector(const Dissection& reference, const Dissection& face, const Diagonal& d);
// c-vectors of every diagonal of the face, in the face's canonical order.
std::vector<IntVector> c_vectors(const Dissection& reference, const Dissection& face);
std::vector<IntVector> c_vector_set(const Dissection& reference);
IntVector d_vector(const Dissection& reference, const Diagonal& d);

std::int64_t height(const Dissection& reference, const Diagonal& d);
std::map<Diagonal, std::int64_t> heights(const Dissection& reference);

// Rows indexed by the reference, columns by the face.
IntMatrix g_matrix(const Dissection& reference, const Dissection& face);
IntMatrix c_matrix(const Dissection& reference, const Dissection& face);

namespace detail {
IntVector g_vector_unchecked(const Dissection& reference, const Diagonal& d);
std::vector<IntVector> c_vectors_unchecked(const Dissection& reference, const Dissection& face);
}  // namespace detail

}  // namespace accordion
