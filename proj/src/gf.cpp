#include "grm/gf.hpp"

#include <stdexcept>

namespace grm {

namespace {

int smallestPrimeFactor(int n) {
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

// Packed base-p coefficient vectors of length e.
std::vector<int> unpack(int v, int p, int e) {
    std::vector<int> c(e);
    for (int i = 0; i < e; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

int pack(const std::vector<int>& c, int p) {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
    return v;
}

// res = a*b mod (modulus), coefficients mod p. modulus is monic of degree e.
std::vector<int> polyMulMod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& modulus, int p) {
    int e = static_cast<int>(modulus.size()) - 1;
    std::vector<int> prod(2 * e - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int d = static_cast<int>(prod.size()) - 1; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i)
            prod[d - e + i] = ((prod[d - e + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(e);
    return prod;
}

// Walk the powers of x mod the candidate. If they visit q-1 distinct nonzero
// values and return to 1 exactly at step q-1, the candidate is irreducible
// and x is primitive; the walk doubles as the exp table.
bool buildExpTable(const std::vector<int>& modulus, int p, int e, std::vector<int>& expOut) {
    int q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    std::vector<int> x(e, 0);
    if (e >= 2) x[1] = 1;
    std::vector<int> acc(e, 0);
    acc[0] = 1;
    std::vector<char> seen(q, 0);
    expOut.assign(q - 1, 0);
    for (int i = 0; i < q - 1; ++i) {
        int v = pack(acc, p);
        if (v == 0 || seen[v]) return false;
        if (v == 1 && i != 0) return false; // alpha^i = 1 before q-1
        seen[v] = 1;
        expOut[i] = v;
        acc = polyMulMod(acc, x, modulus, p);
    }
    return pack(acc, p) == 1; // alpha^(q-1) = 1
}

} // namespace

bool isPrimePower(int q) {
    if (q < 2) return false;
    int p = smallestPrimeFactor(q);
    while (q % p == 0) q /= p;
    return q == 1;
}

Field::Field(int q) : q_(q) {
    if (q < 2 || q > 256 || !isPrimePower(q))
        throw std::invalid_argument("field order must be a prime power in [2, 256], got " +
                                    std::to_string(q));
    p_ = smallestPrimeFactor(q);
    e_ = 0;
    for (int t = q; t > 1; t /= p_) ++e_;

    if (e_ == 1) {
        // Prime field: residues mod p, alpha = smallest primitive root.
        for (int a = 1; a < q_; ++a) {
            std::vector<int> tab(q_ - 1, 0);
            int acc = 1;
            bool ok = true;
            for (int i = 0; i < q_ - 1; ++i) {
                if (acc == 1 && i != 0) { ok = false; break; }
                tab[i] = acc;
                acc = acc * a % q_;
            }
            if (ok && acc == 1) {
                exp_ = std::move(tab);
                break;
            }
        }
    } else {
        // Canonical modulus: smallest packed value that makes x primitive.
        for (int packed = 0; packed < q_; ++packed) {
            std::vector<int> candidate = unpack(packed, p_, e_);
            candidate.push_back(1);
            std::vector<int> tab;
            if (buildExpTable(candidate, p_, e_, tab)) {
                modulus_ = std::move(candidate);
                exp_ = std::move(tab);
                break;
            }
        }
    }
    if (exp_.empty())
        throw std::logic_error("no primitive element found for q=" + std::to_string(q_));

    log_.assign(q_, 0);
    for (int i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;

    addTable_.assign(q_ * q_, 0);
    negTable_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        std::vector<int> da = unpack(a, p_, e_);
        for (int b = 0; b < q_; ++b) {
            std::vector<int> db = unpack(b, p_, e_);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
            addTable_[a * q_ + b] = pack(s, p_);
        }
        std::vector<int> n(e_);
        for (int i = 0; i < e_; ++i) n[i] = (p_ - da[i]) % p_;
        negTable_[a] = pack(n, p_);
    }

    order_.assign(q_, 0);
    orderIndex_.assign(q_, 0);
    for (int i = 1; i < q_; ++i) order_[i] = exp_[i - 1];
    for (int i = 0; i < q_; ++i) orderIndex_[order_[i]] = i;
}

int Field::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Field::pow(int a, long long n) const {
    if (n < 0) throw std::domain_error("negative exponent");
    if (n == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<int>((log_[a] * (n % (q_ - 1))) % (q_ - 1))];
}

int Field::exp(long long i) const {
    long long r = i % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[static_cast<int>(r)];
}

int Field::log(int a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

int Field::element(int i) const { return order_[i]; }

int Field::elementIndex(int v) const { return orderIndex_[v]; }

int polyEvalUni(const Field& f, const std::vector<int>& coeffs, int x) {
    int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = f.add(f.mul(acc, x), *it);
    return acc;
}

} // namespace grm
