#ifndef AFFPOW_LINALG_HPP
#define AFFPOW_LINALG_HPP

#include <optional>
#include <vector>

#include "affpow/cyclo.hpp"

namespace affpow {

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Row-major dense matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix transpose() const;
    bool all_rational() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

using Vector = std::vector<Scalar>;

// Exact rank. Fraction-free (Bareiss) elimination on the pure-rational fast
// path, ordinary field elimination otherwise.
std::size_t rank(const Matrix& m);

// Basis of the right kernel; each vector normalized so its first nonzero
// entry is 1. Empty list iff the matrix is injective.
std::vector<Vector> nullspace(const Matrix& m);

// One solution of M x = b when consistent, nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// M v, for tests and verification.
Vector apply(const Matrix& m, const Vector& v);

}  // namespace affpow

#endif
