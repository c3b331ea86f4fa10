#include "grm/rsline.hpp"

#include <stdexcept>

#include "grm/errors.hpp"

namespace grm {

int knownCount(const LineView& view) {
    int c = 0;
    for (int v : view.values)
        if (v != kErased) ++c;
    return c;
}

std::vector<int> interpolateLine(const Field& f, const LineView& view, int r) {
    const int q = static_cast<int>(view.gamma.size());
    if (static_cast<int>(view.values.size()) != q)
        throw std::invalid_argument("line view size mismatch");
    if (r < 0 || r + 1 > q) throw std::invalid_argument("degree bound out of range");

    std::vector<int> support;
    support.reserve(r + 1);
    for (int i = 0; i < q && static_cast<int>(support.size()) < r + 1; ++i)
        if (view.values[i] != kErased) support.push_back(i);
    if (static_cast<int>(support.size()) < r + 1)
        throw std::invalid_argument("need at least r+1 known symbols on the line");

    // Lagrange through the support slots: precompute per-slot inverse
    // denominators, then evaluate each non-support abscissa.
    std::vector<int> denomInv(r + 1);
    for (int a = 0; a <= r; ++a) {
        int d = 1;
        for (int b = 0; b <= r; ++b)
            if (b != a) d = f.mul(d, f.sub(view.gamma[support[a]], view.gamma[support[b]]));
        denomInv[a] = f.inv(d);
    }

    std::vector<int> out(q);
    std::vector<bool> inSupport(q, false);
    for (int s : support) {
        out[s] = view.values[s];
        inSupport[s] = true;
    }
    for (int j = 0; j < q; ++j) {
        if (inSupport[j]) continue;
        int x = view.gamma[j];
        int numerAll = 1;
        for (int s : support) numerAll = f.mul(numerAll, f.sub(x, view.gamma[s]));
        int acc = 0;
        for (int a = 0; a <= r; ++a) {
            int y = view.values[support[a]];
            if (y == 0) continue;
            int term = f.mul(numerAll, f.inv(f.sub(x, view.gamma[support[a]])));
            acc = f.add(acc, f.mul(y, f.mul(term, denomInv[a])));
        }
        if (view.values[j] != kErased && view.values[j] != acc)
            throw IntegrityError("line values inconsistent with the degree bound");
        out[j] = acc;
    }
    return out;
}

std::vector<int> paritySumDecode(const Field& f, const LineView& view, int r) {
    const int q = static_cast<int>(view.gamma.size());
    if (static_cast<int>(view.values.size()) != q)
        throw std::invalid_argument("line view size mismatch");
    if (r != q - 2) throw std::invalid_argument("parity shortcut needs r = q-2");
    if (knownCount(view) != q - 1)
        throw std::invalid_argument("parity shortcut needs exactly one erasure");

    int sum = 0;
    int hole = -1;
    for (int i = 0; i < q; ++i) {
        if (view.values[i] == kErased)
            hole = i;
        else
            sum = f.add(sum, view.values[i]);
    }
    std::vector<int> out = view.values;
    out[hole] = f.neg(sum);
    return out;
}

} // namespace grm
