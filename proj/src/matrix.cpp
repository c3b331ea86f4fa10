#include "grm/matrix.hpp"

#include <stdexcept>

namespace grm {

std::vector<int> reducedRowEchelon(const Field& f, FqMatrix& a) {
    std::vector<int> pivots;
    int pivotRow = 0;
    for (int c = 0; c < a.cols() && pivotRow < a.rows(); ++c) {
        int r = pivotRow;
        while (r < a.rows() && a.at(r, c) == 0) ++r;
        if (r == a.rows()) continue;
        if (r != pivotRow)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivotRow, j));
        int scale = f.inv(a.at(pivotRow, c));
        for (int j = c; j < a.cols(); ++j) a.at(pivotRow, j) = f.mul(a.at(pivotRow, j), scale);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == pivotRow || a.at(i, c) == 0) continue;
            int factor = a.at(i, c);
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(pivotRow, j)));
        }
        pivots.push_back(c);
        ++pivotRow;
    }
    return pivots;
}

FqMatrix matMul(const Field& f, const FqMatrix& a, const FqMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matMul: shape mismatch");
    FqMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            int v = a.at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(l, j)));
        }
    return c;
}

} // namespace grm
