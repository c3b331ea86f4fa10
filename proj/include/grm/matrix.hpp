#pragma once

#include <vector>

#include "grm/gf.hpp"

namespace grm {

/// Dense row-major matrix over a Field. Just enough linear algebra for the
/// codec: storage, row ops and reduced row echelon form.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    const int* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }
    int* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<int> a_;
};

/// In-place Gauss-Jordan to reduced row echelon form. Pivots are the first
/// nonzero entry in column order; exact field arithmetic needs no pivot
/// selection beyond that. Returns the pivot column indices in row order.
std::vector<int> reducedRowEchelon(const Field& f, FqMatrix& a);

/// c = a * b.
FqMatrix matMul(const Field& f, const FqMatrix& a, const FqMatrix& b);

} // namespace grm
