#pragma once

#include <vector>

#include "eqg/errors.hpp"
#include "eqg/rational.hpp"

namespace eqg {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix transpose() const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Rat trace() const;
    Rat determinant() const;
    int rank() const;
    std::vector<int> pivotRows() const;
    RatMatrix selectRows(const std::vector<int>& idx) const;
    RatMatrix inverse() const; // throws DomainError when singular
    // Symmetric reflexive generalized inverse of a symmetric PSD matrix:
    // W = F^T (F G F^T)^-1 F with F the pivot rows of G. Satisfies
    // GWG = G, WGW = W, W = W^T; coincides with G^-1 when G is invertible.
    RatMatrix generalizedInverse() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

} // namespace eqg
