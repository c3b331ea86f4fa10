#include "grm/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace grm {

namespace {

long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    long long v = 1;
    for (int i = 1; i <= b; ++i) v = v * (a - b + i) / i;
    return v;
}

int evalMonomial(const Field& f, const std::vector<int>& exps, const std::vector<int>& coords) {
    int v = 1;
    for (size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] == 0) continue;
        v = f.mul(v, f.pow(coords[j], exps[j]));
        if (v == 0) return 0;
    }
    return v;
}

} // namespace

CodeParams makeCodeParams(int r, int m, int q) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (!isPrimePower(q) || q < 2 || q > 256) throw std::invalid_argument("q must be a prime power in [2, 256]");
    if (r > q - 2) throw std::invalid_argument("r must be <= q-2 (a line holds only q evaluations)");
    long long n = 1;
    for (int i = 0; i < m; ++i) {
        n *= q;
        if (n > (1 << 24)) throw std::invalid_argument("q^m too large");
    }
    long long k = binomial(m + r, r);
    CodeParams p;
    p.r = r;
    p.m = m;
    p.q = q;
    p.n = static_cast<int>(n);
    p.k = static_cast<int>(k);
    p.d = static_cast<int>((q - r) * (n / q));
    p.locality = r + 1;
    return p;
}

std::vector<std::vector<int>> monomialBasis(int r, int m) {
    std::vector<std::vector<int>> basis;
    std::vector<int> exps(m, 0);
    while (true) {
        int deg = 0;
        for (int e : exps) deg += e;
        if (deg <= r) basis.push_back(exps);
        size_t i = 0;
        while (i < exps.size() && exps[i] == r) exps[i++] = 0;
        if (i == exps.size()) break;
        ++exps[i];
    }
    std::sort(basis.begin(), basis.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    });
    return basis;
}

GrmCode::GrmCode(int r, int m, int q)
    : params_(makeCodeParams(r, m, q)), field_(q), basis_(monomialBasis(r, m)) {
    const int n = params_.n;
    const int k = params_.k;

    points_ = enumeratePoints(field_, m);
    gen_ = FqMatrix(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) gen_.at(i, j) = evalMonomial(field_, basis_[i], points_[j].coords);

    genRref_ = gen_;
    infoSet_ = reducedRowEchelon(field_, genRref_);
    if (static_cast<int>(infoSet_.size()) != k)
        throw std::logic_error("generator rank below k");

    infoMask_.assign(n, false);
    for (int c : infoSet_) infoMask_[c] = true;
    perm_ = infoSet_;
    perm_.reserve(n);
    for (int j = 0; j < n; ++j)
        if (!infoMask_[j]) perm_.push_back(j);

    parity_ = FqMatrix(n - k, n);
    for (int row = 0; row < n - k; ++row) {
        int col = perm_[k + row];
        parity_.at(row, col) = 1;
        for (int i = 0; i < k; ++i) parity_.at(row, infoSet_[i]) = field_.neg(genRref_.at(i, col));
    }

    lines_ = enumerateLines(field_, m);
    linesAt_.resize(n);
    for (size_t li = 0; li < lines_.size(); ++li)
        for (int p : lines_[li].points) linesAt_[p].push_back(static_cast<int>(li));
}

FqMatrix GrmCode::systematicGenerator() const {
    FqMatrix out(params_.k, params_.n);
    for (int i = 0; i < params_.k; ++i)
        for (int j = 0; j < params_.n; ++j) out.at(i, j) = genRref_.at(i, perm_[j]);
    return out;
}

FqMatrix GrmCode::parityCheckPermuted() const {
    FqMatrix out(params_.n - params_.k, params_.n);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < params_.n; ++j) out.at(i, j) = parity_.at(i, perm_[j]);
    return out;
}

std::vector<int> GrmCode::encode(const std::vector<int>& message) const {
    if (static_cast<int>(message.size()) != params_.k)
        throw std::invalid_argument("message length must be k");
    std::vector<int> cw(params_.n, 0);
    for (int i = 0; i < params_.k; ++i) {
        if (message[i] == 0) continue;
        const int* row = genRref_.row(i);
        for (int j = 0; j < params_.n; ++j)
            if (row[j] != 0) cw[j] = field_.add(cw[j], field_.mul(message[i], row[j]));
    }
    return cw;
}

std::vector<int> GrmCode::encodeCoefficients(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != params_.k)
        throw std::invalid_argument("coefficient count must be k");
    std::vector<int> cw(params_.n);
    for (int j = 0; j < params_.n; ++j) cw[j] = evalPoly(coeffs, points_[j].coords);
    return cw;
}

int GrmCode::evalPoly(const std::vector<int>& coeffs, const std::vector<int>& coords) const {
    if (static_cast<int>(coeffs.size()) != params_.k)
        throw std::invalid_argument("coefficient count must be k");
    if (static_cast<int>(coords.size()) != params_.m)
        throw std::invalid_argument("point must have m coordinates");
    int acc = 0;
    for (int i = 0; i < params_.k; ++i) {
        if (coeffs[i] == 0) continue;
        acc = field_.add(acc, field_.mul(coeffs[i], evalMonomial(field_, basis_[i], coords)));
    }
    return acc;
}

std::vector<int> GrmCode::extractMessage(const std::vector<int>& codeword) const {
    if (static_cast<int>(codeword.size()) != params_.n)
        throw std::invalid_argument("codeword length must be n");
    std::vector<int> msg(params_.k);
    for (int i = 0; i < params_.k; ++i) msg[i] = codeword[infoSet_[i]];
    return msg;
}

} // namespace grm
