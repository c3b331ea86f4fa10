#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "grm/gf.hpp"

using grm::Field;

TEST_CASE("canonical moduli are reproduced for every extension field") {
    struct Row {
        int q;
        std::vector<int> mod;
    };
    const Row rows[] = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {16, {1, 1, 0, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {64, {1, 1, 0, 0, 0, 0, 1}},
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},
        {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {9, {2, 1, 1}},
        {25, {2, 1, 1}},
        {27, {1, 2, 0, 1}},
        {49, {3, 1, 1}},
        {81, {2, 1, 0, 0, 1}},
        {121, {7, 1, 1}},
        {125, {2, 3, 0, 1}},
        {169, {2, 1, 1}},
        {243, {1, 2, 0, 0, 0, 1}},
    };
    for (const auto& row : rows) {
        CAPTURE(row.q);
        Field f(row.q);
        CHECK(f.modulus() == row.mod);
        CHECK(f.q() == row.q);
    }
}

TEST_CASE("prime fields use the smallest primitive root") {
    CHECK(Field(2).alpha() == 1);
    CHECK(Field(3).alpha() == 2);
    CHECK(Field(5).alpha() == 2);
    CHECK(Field(7).alpha() == 3);
    CHECK(Field(11).alpha() == 2);
    CHECK(Field(23).alpha() == 5);
    CHECK(Field(251).alpha() == 6);
    CHECK(Field(7).modulus().empty());
}

TEST_CASE("non prime powers and out-of-range orders are rejected") {
    CHECK_THROWS_AS(Field(6), std::invalid_argument);
    CHECK_THROWS_AS(Field(12), std::invalid_argument);
    CHECK_THROWS_AS(Field(1), std::invalid_argument);
    CHECK_THROWS_AS(Field(0), std::invalid_argument);
    CHECK_THROWS_AS(Field(-8), std::invalid_argument);
    CHECK_THROWS_AS(Field(257), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        CAPTURE(q);
        Field f(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms hold on sampled triples for larger q") {
    for (int q : {25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243, 251, 256}) {
        CAPTURE(q);
        Field f(q);
        uint64_t x = 0x9e3779b97f4a7c15ull + q;
        auto next = [&] {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            return static_cast<int>(x % q);
        };
        for (int i = 0; i < 400; ++i) {
            int a = next(), b = next(), c = next();
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("exp and log round trip") {
    for (int q : {3, 4, 8, 9, 16, 27, 49, 256}) {
        CAPTURE(q);
        Field f(q);
        for (int i = 0; i < q - 1; ++i) CHECK(f.log(f.exp(i)) == i);
        for (int a = 1; a < q; ++a) CHECK(f.exp(f.log(a)) == a);
        CHECK(f.exp(-1) == f.inv(f.alpha()));
        CHECK(f.exp(q - 1) == 1);
    }
}

TEST_CASE("frozen power tables") {
    Field f8(8);
    const int exp8[] = {1, 2, 4, 3, 6, 7, 5};
    for (int i = 0; i < 7; ++i) CHECK(f8.exp(i) == exp8[i]);
    CHECK(f8.mul(f8.exp(1), f8.exp(6)) == 1);

    Field f9(9);
    const int exp9[] = {1, 3, 7, 8, 2, 6, 5, 4};
    for (int i = 0; i < 8; ++i) CHECK(f9.exp(i) == exp9[i]);

    Field f16(16);
    const int exp16[] = {1, 2, 4, 8, 3, 6, 12, 11, 5, 10, 7, 14, 15, 13, 9};
    for (int i = 0; i < 15; ++i) CHECK(f16.exp(i) == exp16[i]);

    CHECK(Field(7).inv(3) == 5);
    CHECK(Field(4).mul(2, 2) == 3);
}

TEST_CASE("characteristic two elements are their own negatives") {
    for (int q : {2, 4, 8, 16}) {
        Field f(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, a) == 0);
            CHECK(f.neg(a) == a);
        }
    }
}

TEST_CASE("element enumeration is a bijection starting 0, 1, alpha, ...") {
    for (int q : {2, 3, 4, 5, 8, 9, 16, 27}) {
        CAPTURE(q);
        Field f(q);
        std::set<int> seen;
        for (int i = 0; i < q; ++i) {
            int v = f.element(i);
            CHECK(v >= 0);
            CHECK(v < q);
            seen.insert(v);
            CHECK(f.elementIndex(v) == i);
        }
        CHECK(static_cast<int>(seen.size()) == q);
        CHECK(f.element(0) == 0);
        if (q > 2) {
            CHECK(f.element(1) == 1);
            CHECK(f.element(2) == f.alpha());
        }
    }
    Field f9(9);
    const int order9[] = {0, 1, 3, 7, 8, 2, 6, 5, 4};
    for (int i = 0; i < 9; ++i) CHECK(f9.element(i) == order9[i]);
}

TEST_CASE("inv, log and division by zero raise domain errors") {
    Field f(8);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.log(0), std::domain_error);
    CHECK_THROWS_AS(f.div(3, 0), std::domain_error);
}

TEST_CASE("pow handles zero and large exponents") {
    Field f(9);
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
    for (int a = 1; a < 9; ++a) {
        CHECK(f.pow(a, 0) == 1);
        CHECK(f.pow(a, 8) == 1);
        CHECK(f.pow(a, 3) == f.mul(a, f.mul(a, a)));
        CHECK(f.pow(a, 1000000007LL) == f.pow(a, 1000000007LL % 8));
    }
}

TEST_CASE("univariate Horner evaluation") {
    Field f8(8);
    CHECK(grm::polyEvalUni(f8, {5}, 3) == 5);
    CHECK(grm::polyEvalUni(f8, {0, 1}, 6) == 6);
    CHECK(grm::polyEvalUni(f8, {1, 1, 1}, 2) == 7);
    Field f7(7);
    for (int x = 0; x < 7; ++x)
        CHECK(grm::polyEvalUni(f7, {1, 2, 3}, x) == (1 + 2 * x + 3 * x * x) % 7);
    CHECK(grm::polyEvalUni(f7, {}, 4) == 0);
}

TEST_CASE("prime power detection") {
    CHECK(grm::isPrimePower(2));
    CHECK(grm::isPrimePower(243));
    CHECK(grm::isPrimePower(251));
    CHECK_FALSE(grm::isPrimePower(1));
    CHECK_FALSE(grm::isPrimePower(6));
    CHECK_FALSE(grm::isPrimePower(100));
    CHECK_FALSE(grm::isPrimePower(0));
}
