#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grm {

/// Arithmetic in the finite field F_q, q = p^e a prime power, 2 <= q <= 256.
///
/// Elements are integers in [0, q):
///   - e == 1: the residue itself; add/mul are modular arithmetic mod p.
///   - e  > 1: the base-p packed coefficient vector of the residue polynomial,
///     value = c_0 + c_1*p + ... + c_{e-1}*p^{e-1}; addition is digit-wise
///     mod p (XOR when p == 2), multiplication and inversion go through
///     exp/log tables in alpha.
///
/// The modulus for e > 1 is canonical: the monic degree-e polynomial over F_p
/// with the smallest packed low-coefficient value that is irreducible and has
/// x as a generator of the multiplicative group. This fixes
///   F_4: x^2+x+1,  F_8: x^3+x+1,  F_9: x^2+x+2,  F_16: x^4+x+1,
/// and so on up to F_256 (x^8+x^4+x^3+x^2+1). For e == 1, alpha is the
/// smallest primitive root mod p. Construction verifies that alpha^(q-1) = 1
/// and alpha^d != 1 for every 0 < d < q-1.
///
/// Element enumeration: gamma_0 = 0 and gamma_i = alpha^(i-1) for i >= 1.
/// element(i) maps an enumeration index to the element value and
/// elementIndex() inverts it. The enumeration fixes the order of abscissae
/// along a line, so codewords are bit-exact across runs.
///
/// A Field is immutable after construction; every operation is const and
/// safe to call from concurrent readers.
class Field {
public:
    /// Throws std::invalid_argument unless q is a prime power in [2, 256].
    explicit Field(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int extensionDegree() const { return e_; }

    /// Modulus coefficients, constant term first, length e+1 with leading 1.
    /// Empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    /// The multiplicative generator used by the enumeration and the tables.
    int alpha() const { return exp_[1 % (q_ - 1)]; }

    int add(int a, int b) const { return addTable_[a * q_ + b]; }
    int neg(int a) const { return negTable_[a]; }
    int sub(int a, int b) const { return addTable_[a * q_ + negTable_[b]]; }

    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    /// Multiplicative inverse; throws std::domain_error on 0.
    int inv(int a) const;

    int div(int a, int b) const { return mul(a, inv(b)); }

    /// a^n with 0^0 = 1. n may be any non-negative integer.
    int pow(int a, long long n) const;

    /// alpha^i; i is reduced mod q-1 and may be negative.
    int exp(long long i) const;

    /// Discrete log base alpha; throws std::domain_error on 0.
    int log(int a) const;

    /// gamma_i under the canonical enumeration.
    int element(int i) const;

    /// Index i with element(i) == v.
    int elementIndex(int v) const;

    /// Decimal rendering of an element value.
    static std::string toString(int a) { return std::to_string(a); }

private:
    int q_ = 0, p_ = 0, e_ = 0;
    std::vector<int> modulus_;     // constant-first, incl. leading 1; empty if e == 1
    std::vector<int> exp_;         // exp_[i] = alpha^i, i in [0, q-1)
    std::vector<int> log_;         // log_[v] for v != 0
    std::vector<int> addTable_;    // q*q entries
    std::vector<int> negTable_;
    std::vector<int> order_;       // order_[i] = gamma_i
    std::vector<int> orderIndex_;  // inverse of order_
};

/// Horner evaluation of sum coeffs[i] * x^i (coefficients constant-first).
int polyEvalUni(const Field& f, const std::vector<int>& coeffs, int x);

/// True iff q = p^e for a prime p and e >= 1.
bool isPrimePower(int q);

} // namespace grm
