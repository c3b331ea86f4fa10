#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "grm/errors.hpp"
#include "grm/gf.hpp"
#include "grm/rsline.hpp"
#include "grm/sim.hpp"

using namespace grm;

namespace {

std::vector<int> gammasOf(const Field& f) {
    std::vector<int> g(f.q());
    for (int i = 0; i < f.q(); ++i) g[i] = f.element(i);
    return g;
}

std::vector<int> evalAll(const Field& f, const std::vector<int>& coeffs) {
    std::vector<int> out(f.q());
    for (int i = 0; i < f.q(); ++i) out[i] = polyEvalUni(f, coeffs, f.element(i));
    return out;
}

} // namespace

TEST_CASE("degree zero lines are constant") {
    Field f(8);
    LineView view;
    view.gamma = gammasOf(f);
    view.values.assign(8, kErased);
    view.values[5] = 6;
    auto out = interpolateLine(f, view, 0);
    for (int v : out) CHECK(v == 6);
}

TEST_CASE("hand-checked linear interpolation over F_3") {
    Field f(3);
    LineView view;
    view.gamma = gammasOf(f); // 0, 1, 2
    view.values = {kErased, 1, 2};
    CHECK(interpolateLine(f, view, 1) == std::vector<int>{0, 1, 2});
}

TEST_CASE("reconstruction is exact for every erasure pattern, small fields") {
    std::mt19937_64 rng(23);
    for (int q : {4, 5, 8}) {
        CAPTURE(q);
        Field f(q);
        auto gammas = gammasOf(f);
        for (int r = 0; r <= q - 2; ++r) {
            for (int rep = 0; rep < 6; ++rep) {
                std::vector<int> coeffs(r + 1);
                for (int& c : coeffs) c = uniformBelow(rng, q);
                auto truth = evalAll(f, coeffs);
                for (int mask = 0; mask < (1 << q); ++mask) {
                    int known = __builtin_popcount(mask);
                    if (known < r + 1) continue;
                    LineView view;
                    view.gamma = gammas;
                    view.values.assign(q, kErased);
                    for (int i = 0; i < q; ++i)
                        if (mask & (1 << i)) view.values[i] = truth[i];
                    CHECK(interpolateLine(f, view, r) == truth);
                }
            }
        }
    }
}

TEST_CASE("reconstruction is exact on sampled patterns for q = 16") {
    std::mt19937_64 rng(29);
    Field f(16);
    auto gammas = gammasOf(f);
    for (int r : {1, 7, 14}) {
        for (int rep = 0; rep < 60; ++rep) {
            std::vector<int> coeffs(r + 1);
            for (int& c : coeffs) c = uniformBelow(rng, 16);
            auto truth = evalAll(f, coeffs);
            int erasures = uniformBelow(rng, 16 - r);
            std::vector<int> idx(16);
            std::iota(idx.begin(), idx.end(), 0);
            shuffle(rng, idx);
            LineView view;
            view.gamma = gammas;
            view.values = truth;
            for (int i = 0; i < erasures; ++i) view.values[idx[i]] = kErased;
            CHECK(interpolateLine(f, view, r) == truth);
        }
    }
}

TEST_CASE("too few known symbols is a parameter error") {
    Field f(8);
    LineView view;
    view.gamma = gammasOf(f);
    view.values.assign(8, kErased);
    view.values[0] = 1;
    view.values[3] = 2;
    CHECK_THROWS_AS(interpolateLine(f, view, 2), std::invalid_argument);
    CHECK_THROWS_AS(interpolateLine(f, view, 8), std::invalid_argument);
}

TEST_CASE("inconsistent overdetermined values raise an integrity error") {
    Field f(4);
    LineView view;
    view.gamma = gammasOf(f); // 0, 1, 2, 3
    view.values = {0, 1, 0, kErased};
    CHECK_THROWS_AS(interpolateLine(f, view, 1), IntegrityError);
}

TEST_CASE("parity shortcut equals interpolation on full-degree lines") {
    std::mt19937_64 rng(31);
    for (int q : {3, 4, 8, 9}) {
        CAPTURE(q);
        Field f(q);
        auto gammas = gammasOf(f);
        int r = q - 2;
        for (int rep = 0; rep < 200; ++rep) {
            std::vector<int> coeffs(r + 1);
            for (int& c : coeffs) c = uniformBelow(rng, q);
            auto truth = evalAll(f, coeffs);
            LineView view;
            view.gamma = gammas;
            view.values = truth;
            view.values[uniformBelow(rng, q)] = kErased;
            CHECK(paritySumDecode(f, view, r) == truth);
            CHECK(paritySumDecode(f, view, r) == interpolateLine(f, view, r));
        }
    }
}

TEST_CASE("all-zero known symbols recover a zero") {
    Field f(8);
    LineView view;
    view.gamma = gammasOf(f);
    view.values.assign(8, 0);
    view.values[2] = kErased;
    CHECK(paritySumDecode(f, view, 6) == std::vector<int>(8, 0));
}

TEST_CASE("parity shortcut preconditions") {
    Field f(8);
    LineView view;
    view.gamma = gammasOf(f);
    view.values.assign(8, 0);
    view.values[2] = kErased;
    CHECK_THROWS_AS(paritySumDecode(f, view, 5), std::invalid_argument);
    view.values[3] = kErased;
    CHECK_THROWS_AS(paritySumDecode(f, view, 6), std::invalid_argument);
    view.values = std::vector<int>(8, 0);
    CHECK_THROWS_AS(paritySumDecode(f, view, 6), std::invalid_argument);
}
