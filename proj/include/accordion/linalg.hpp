#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace accordion {

using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace linalg {

// Overflow-checked int64 arithmetic; throws std::overflow_error.
std::int64_t add(std::int64_t x, std::int64_t y);
std::int64_t mul(std::int64_t x, std::int64_t y);

IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
IntMatrix identity(std::size_t k);

// Bareiss fraction-free elimination.
std::int64_t determinant(IntMatrix m);
int rank(IntMatrix m);

// Primitive integer basis of {x : m x = 0}, first nonzero entry positive.
std::vector<std::vector<std::int64_t>> nullspace(const IntMatrix& m);

// For a k x (k+1) matrix: the signed maximal minors, which span the kernel
// whenever the rank is k and vanish otherwise.
std::vector<std::int64_t> cofactor_kernel(const IntMatrix& m);

IntMatrix adjugate(const IntMatrix& m);

// Exact solution of a square system, nullopt when singular.
std::optional<std::vector<Rational>> solve(const IntMatrix& a, const std::vector<std::int64_t>& b);

// coeffs . x >= rhs, or > rhs when strict.
struct Constraint {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs = 0;
    bool strict = false;

    auto operator<=>(const Constraint&) const = default;
};

// Fourier-Motzkin elimination over the rationals, with the Chernikov history
// bound to keep the intermediate systems small.
bool feasible(const std::vector<Constraint>& system, std::size_t dim);

}  // namespace linalg
}  // namespace accordion
