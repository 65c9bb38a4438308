#include "affpow/linalg.hpp"

#include <algorithm>

namespace affpow {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatchError("entry count does not match shape");
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool Matrix::all_rational() const {
    for (const auto& e : entries_)
        if (!e.is_rational()) return false;
    return true;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns. Pivot rows
// are chosen by the smallest-bit-size nonzero entry in the column to slow
// coefficient growth.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        std::size_t best_bits = 0;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            std::size_t bits = m.at(r, col).bit_size();
            if (best == m.rows() || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(best, c));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = inv * m.at(row, c);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Bareiss fraction-free rank for integer matrices (rational rows are scaled
// to integers by the caller). Works on mpz, no rational normalization cost.
std::size_t bareiss_rank(std::vector<std::vector<Int>> m, std::size_t cols) {
    std::size_t rows = m.size();
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = row; r < rows; ++r) {
            if (m[r][col] != 0 &&
                (piv == rows ||
                 mpz_sizeinbase(m[r][col].get_mpz_t(), 2) <
                     mpz_sizeinbase(m[piv][col].get_mpz_t(), 2))) {
                piv = r;
            }
        }
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                Int num = m[row][col] * m[r][c] - m[r][col] * m[row][c];
                m[r][c] = num / prev;  // divides exactly (Bareiss)
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return row;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.all_rational()) {
        std::vector<std::vector<Int>> im(m.rows(), std::vector<Int>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Int lcm = 1;
            for (std::size_t c = 0; c < m.cols(); ++c)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).rat().get_den().get_mpz_t());
            for (std::size_t c = 0; c < m.cols(); ++c) {
                Rational v = m.at(r, c).rat() * Rational(lcm);
                im[r][c] = v.get_num();
            }
        }
        return bareiss_rank(std::move(im), m.cols());
    }
    Matrix work = m;
    return rref(work).size();
}

std::vector<Vector> nullspace(const Matrix& m) {
    if (m.cols() == 0) return {};
    if (m.rows() == 0) {
        // whole space: standard basis vectors (already normalized)
        std::vector<Vector> basis;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Vector v(m.cols(), Scalar(0));
            v[c] = Scalar(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Matrix work = m;
    auto pivots = rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v(m.cols(), Scalar(0));
        v[free_col] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -work.at(i, free_col);
        // normalize first nonzero entry to 1
        for (auto& x : v) {
            if (!x.is_zero()) {
                Scalar inv = x.inverse();
                for (auto& y : v) y = inv * y;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionMismatchError("rhs length != row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    Vector x(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

Vector apply(const Matrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw DimensionMismatchError("vector length != column count");
    Vector out(m.rows(), Scalar(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

}  // namespace affpow
