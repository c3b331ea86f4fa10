#pragma once

#include <vector>

#include "grm/geometry.hpp"
#include "grm/gf.hpp"
#include "grm/matrix.hpp"

namespace grm {

/// Parameters of the code built from degree-r m-variate polynomials over F_q:
///   n = q^m          evaluation points
///   k = C(m+r, r)    monomials of total degree <= r
///   d = (q-r)q^(m-1) minimum distance
///   locality = r+1   symbols needed to rebuild one more along a line
/// Requires 1 <= r <= q-2 so every line keeps enough evaluations to interpolate.
struct CodeParams {
    int r = 0;
    int m = 0;
    int q = 0;
    int n = 0;
    int k = 0;
    int d = 0;
    int locality = 0;
};

CodeParams makeCodeParams(int r, int m, int q);

/// Exponent vectors (a_0..a_{m-1}) with sum <= r, graded lexicographic:
/// ascending total degree, plain lex on the tuple within a degree.
std::vector<std::vector<int>> monomialBasis(int r, int m);

/// A fully materialized code instance. The raw generator G has one row per
/// basis monomial (its evaluations at all n points, in point-index order).
/// Row reduction of G yields generatorRref() whose columns at infoSet() form
/// the identity, so encode() is systematic: codeword[infoSet()[i]] equals
/// message[i]. permutation() lists infoSet positions first, then the rest,
/// both ascending; in that column order generatorRref() reads [I_k | P] and
/// parityCheckPermuted() reads [-P^T | I_{n-k}]. parityCheck() is the same
/// matrix with columns moved back to natural positions, which is the form
/// the decoders consume.
//
/// Construction also caches the point list, the canonical line list, and a
/// per-point index of incident lines. Instances are immutable afterwards and
/// safe to share across threads.
class GrmCode {
  public:
    GrmCode(int r, int m, int q);

    const CodeParams& params() const { return params_; }
    const Field& field() const { return field_; }
    const std::vector<std::vector<int>>& basis() const { return basis_; }

    const FqMatrix& generator() const { return gen_; }
    const FqMatrix& generatorRref() const { return genRref_; }
    const std::vector<int>& infoSet() const { return infoSet_; }
    const std::vector<bool>& infoMask() const { return infoMask_; }
    const std::vector<int>& permutation() const { return perm_; }

    const FqMatrix& parityCheck() const { return parity_; }
    FqMatrix systematicGenerator() const;
    FqMatrix parityCheckPermuted() const;

    const std::vector<Point>& points() const { return points_; }
    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<int>& linesAt(int pointIndex) const { return linesAt_[pointIndex]; }

    /// Systematic encoding: message has k symbols, lands verbatim at infoSet
    /// positions of the returned length-n codeword.
    std::vector<int> encode(const std::vector<int>& message) const;

    /// Direct evaluation encoding: coeffs indexed by basis() order.
    std::vector<int> encodeCoefficients(const std::vector<int>& coeffs) const;

    /// Evaluate the polynomial with the given coefficients at one point.
    int evalPoly(const std::vector<int>& coeffs, const std::vector<int>& coords) const;

    /// Inverse of encode() on intact codewords: read off infoSet positions.
    std::vector<int> extractMessage(const std::vector<int>& codeword) const;

  private:
    CodeParams params_;
    Field field_;
    std::vector<std::vector<int>> basis_;
    FqMatrix gen_;
    FqMatrix genRref_;
    std::vector<int> infoSet_;
    std::vector<bool> infoMask_;
    std::vector<int> perm_;
    FqMatrix parity_;
    std::vector<Point> points_;
    std::vector<Line> lines_;
    std::vector<std::vector<int>> linesAt_;
};

} // namespace grm
