#include "colsig/errors.hpp"
#include "colsig/laurent.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace colsig;

namespace {

LaurentPoly t(int nv, int i, int p = 1) { return LaurentPoly::variable(nv, i, p); }
LaurentPoly one(int nv) { return LaurentPoly::constant(nv, 1); }

LaurentPoly random_poly(std::mt19937_64& rng, int nv, int terms = 4, int span = 3) {
    LaurentPoly p(nv);
    std::uniform_int_distribution<int> ex(-span, span), co(-5, 5);
    for (int k = 0; k < terms; ++k) {
        Exponent e(static_cast<std::size_t>(nv));
        for (auto& x : e) x = ex(rng);
        p.add_term(e, co(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("laurent arithmetic examples") {
    CHECK(((t(1, 0) + one(1)) * t(1, 0, -1)) == one(1) + t(1, 0, -1));
    CHECK((t(1, 0) + one(1)) * LaurentPoly(1) == LaurentPoly(1));
    const LaurentPoly a = one(2) + t(2, 0) + t(2, 0, 2);
    const LaurentPoly b = one(2) + t(2, 1);
    CHECK(a - b == t(2, 0) + t(2, 0, 2) - t(2, 1));
    CHECK((-a) + a == LaurentPoly(2));
    CHECK_THROWS_AS(t(1, 0) + t(2, 0), DimensionError);
    CHECK_THROWS_AS(t(1, 0) * t(2, 0), DimensionError);
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly p(1);
    p.add_term({3}, 2);
    p.add_term({3}, -2);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK((t(1, 0) - t(1, 0)).terms().empty());
}

TEST_CASE("augment and U membership") {
    const LaurentPoly cert = t(2, 0) + t(2, 0, 2) - t(2, 1);
    CHECK(augment(one(1) + t(1, 0) + t(1, 0, 2)) == 3);
    CHECK(augment(cert) == 1);
    const LaurentPoly five = LaurentPoly::monomial(1, {2}, 5) + LaurentPoly::monomial(1, {1}, -6) +
                             LaurentPoly::constant(1, 5);
    CHECK(augment(five) == 4);
    CHECK(is_in_U(cert));
    CHECK_FALSE(is_in_U(five));
    CHECK_FALSE(is_in_U(LaurentPoly(3)));
    CHECK(is_in_U(-one(2)));
}

TEST_CASE("to_string") {
    CHECK((one(1) + t(1, 0, -1)).to_string() == "t1^-1 + 1");
    CHECK((t(2, 0) - t(2, 1).scaled(2)).to_string() == "-2*t2 + t1");
    CHECK(LaurentPoly(2).to_string() == "0");
}

TEST_CASE("ring laws and augmentation homomorphism on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int nv = 1 + trial % 3;
        const auto p = random_poly(rng, nv), q = random_poly(rng, nv), r = random_poly(rng, nv);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK(p * one(nv) == p);
        CHECK(augment(p * q) == augment(p) * augment(q));
        CHECK(augment(p + q) == augment(p) + augment(q));
        CHECK(p.inverted_variables().inverted_variables() == p);
        // Double evaluation agrees with the algebra.
        std::vector<oracle::cd> z;
        for (int i = 0; i < nv; ++i) z.push_back(oracle::root(1 + trial % 5, 7 + i));
        CHECK(std::abs(oracle::eval(p * q, z) - oracle::eval(p, z) * oracle::eval(q, z)) < 1e-9 * (1 + std::abs(oracle::eval(p * q, z))));
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int nv = 1 + trial % 3;
        const auto a = random_poly(rng, nv), b = random_poly(rng, nv);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
    CHECK_THROWS_AS(exact_divide(one(1) + t(1, 0), LaurentPoly::constant(1, 2)), DomainError);
    CHECK_THROWS_AS(exact_divide(one(1), LaurentPoly(1)), DomainError);
    CHECK_THROWS_AS(exact_divide(t(1, 0, 2) + one(1), t(1, 0) + one(1)), DomainError);
}

TEST_CASE("rank over the fraction field: examples") {
    LaurentMatrix m1(1, 1, 1);
    m1(0, 0) = LaurentPoly::constant(1, 2) - t(1, 0) - t(1, 0, -1);
    CHECK(rank_over_fraction_field(m1) == 1);
    CHECK(rank_over_fraction_field(LaurentMatrix(0, 0, 1)) == 0);
    LaurentMatrix m2(2, 2, 1);
    m2(0, 0) = t(1, 0) - one(1);
    m2(1, 0) = t(1, 0) - one(1);
    CHECK(rank_over_fraction_field(m2) == 1);
    LaurentMatrix z(3, 2, 2);
    CHECK(rank_over_fraction_field(z) == 0);
}

TEST_CASE("rank invariances and evaluation oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int nv = 1 + trial % 3;
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        // Low-rank products make rank deficiency common.
        const std::size_t inner = 1 + rng() % 3;
        LaurentMatrix a(rows, inner, nv), b(inner, cols, nv), m(rows, cols, nv);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < inner; ++k) a(i, k) = random_poly(rng, nv, 2, 1);
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) b(k, j) = random_poly(rng, nv, 2, 1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                for (std::size_t k = 0; k < inner; ++k) m(i, j) += a(i, k) * b(k, j);

        const std::size_t r = rank_over_fraction_field(m);
        CHECK(r <= std::min({rows, cols, inner}));
        std::size_t best = 0;
        for (int s = 0; s < 3; ++s) best = std::max(best, oracle::evaluated_rank(m, rng));
        CHECK(r == best);

        // Row permutation, column permutation, transpose, monomial row scaling.
        LaurentMatrix p(rows, cols, nv);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) p(i, j) = m(rows - 1 - i, cols - 1 - j);
        CHECK(rank_over_fraction_field(p) == r);
        CHECK(rank_over_fraction_field(m.transposed()) == r);
        Exponent shift(static_cast<std::size_t>(nv), -2);
        for (std::size_t j = 0; j < cols; ++j) p(0, j) = m(0, j).shifted(shift).scaled(-1);
        for (std::size_t i = 1; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) p(i, j) = m(i, j);
        CHECK(rank_over_fraction_field(p) == r);
    }
}
