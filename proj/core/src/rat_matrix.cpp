#include "eqg/rat_matrix.hpp"

#include <algorithm>
#include <utility>

namespace eqg {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product: shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum: shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix difference: shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat RatMatrix::trace() const {
    if (rows_ != cols_) throw DomainError("trace of a non-square matrix");
    Rat t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Rat RatMatrix::determinant() const {
    if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
    RatMatrix m = *this;
    Rat det = 1;
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot == -1) return 0;
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        const Rat inv = Rat(1) / m.at(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::vector<int> RatMatrix::pivotRows() const {
    RatMatrix m = *this;
    std::vector<int> original(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) original[static_cast<size_t>(i)] = i;
    std::vector<int> pivots;
    int top = 0;
    for (int col = 0; col < cols_ && top < rows_; ++col) {
        int pivot = -1;
        for (int r = top; r < rows_; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot == -1) continue;
        if (pivot != top) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(top, j));
            std::swap(original[static_cast<size_t>(pivot)], original[static_cast<size_t>(top)]);
        }
        pivots.push_back(original[static_cast<size_t>(top)]);
        const Rat inv = Rat(1) / m.at(top, col);
        for (int r = top + 1; r < rows_; ++r) {
            if (m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(top, j);
        }
        ++top;
    }
    std::sort(pivots.begin(), pivots.end());
    return pivots;
}

int RatMatrix::rank() const { return static_cast<int>(pivotRows().size()); }

RatMatrix RatMatrix::selectRows(const std::vector<int>& idx) const {
    RatMatrix r(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(idx[static_cast<size_t>(i)], j);
    return r;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
    RatMatrix m = *this;
    RatMatrix inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot == -1) throw DomainError("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < cols_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Rat p = Rat(1) / m.at(col, col);
        for (int j = 0; j < cols_; ++j) {
            m.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col || m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col);
            for (int j = 0; j < cols_; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMatrix RatMatrix::generalizedInverse() const {
    if (rows_ != cols_) throw DomainError("generalized inverse: non-square input");
    const std::vector<int> basis = pivotRows();
    if (static_cast<int>(basis.size()) == rows_) return inverse();
    RatMatrix F = selectRows(basis);
    RatMatrix core = F * *this * F.transpose();
    return F.transpose() * core.inverse() * F;
}

} // namespace eqg
