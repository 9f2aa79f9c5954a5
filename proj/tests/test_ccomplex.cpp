#include "colsig/ccomplex.hpp"
#include "colsig/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace colsig;

namespace {

CComplexData hopf() { return CComplexData::from_seifert_matrix(IntMatrix::from_rows({{1}}), 1, 2); }

bool has_kind(const std::vector<Violation>& v, Violation::Kind k) {
    for (const auto& x : v) {
        if (x.kind == k) return true;
    }
    return false;
}

const ExactForm& exact(const HermitianForm& h) { return std::get<ExactForm>(h); }

}  // namespace

TEST_CASE("sign strings") {
    CHECK(sign_string(0b010, 3) == "+-+");
    CHECK(parse_sign_string("+-+") == 0b010u);
    CHECK_THROWS_AS(parse_sign_string("+x"), ValidationError);
    CHECK_THROWS_AS(parse_sign_string(""), ValidationError);
}

TEST_CASE("validate") {
    CHECK(validate(hopf()).empty());

    auto bad_shape = hopf();
    bad_shape.half_matrices[0] = IntMatrix::from_rows({{1, 0}, {0, 1}});
    CHECK(has_kind(validate(bad_shape), Violation::Kind::Shape));

    auto bad_link = hopf();
    bad_link.linking = {{3}};
    CHECK(has_kind(validate(bad_link), Violation::Kind::Metadata));

    std::mt19937_64 rng(1);
    auto missing = gen::random_ccomplex(rng, 2, 2);
    missing.half_matrices.erase(0b10);
    CHECK(has_kind(validate(missing), Violation::Kind::Family));

    auto bad_beta = hopf();
    bad_beta.beta0 = 0;
    CHECK(has_kind(validate(bad_beta), Violation::Kind::Metadata));
    CHECK_THROWS_AS(require_valid(bad_beta), ValidationError);

    auto asym = gen::random_ccomplex(rng, 1, 2);
    asym.linking = {{0, 1}, {2, 0}};
    CHECK(has_kind(validate(asym), Violation::Kind::Metadata));
}

TEST_CASE("matrix family completion") {
    std::mt19937_64 rng(3);
    const auto cc = gen::random_ccomplex(rng, 3, 3);
    for (SignMask eps = 0; eps < 8; ++eps) {
        CHECK(cc.matrix(eps) == cc.matrix(~eps & 7u).transposed());
    }
}

TEST_CASE("symbolic form examples") {
    const auto h = symbolic_form(hopf());
    REQUIRE(h.rows() == 1);
    const auto t = LaurentPoly::variable(1, 0);
    CHECK(h(0, 0) == LaurentPoly::constant(1, 2) - t - LaurentPoly::variable(1, 0, -1));

    CHECK(symbolic_form(CComplexData::from_seifert_matrix(IntMatrix(0, 0))).rows() == 0);

    CComplexData zero;
    zero.mu = 2;
    zero.g = 1;
    zero.components_per_color = {1, 1};
    zero.linking = {{0, 0}, {0, 0}};
    zero.half_matrices[0b00] = IntMatrix::from_rows({{0}});
    zero.half_matrices[0b10] = IntMatrix::from_rows({{0}});
    const auto z = symbolic_form(zero);
    REQUIRE(z.rows() == 1);
    CHECK(z(0, 0).is_zero());

    auto invalid = hopf();
    invalid.beta0 = 0;
    CHECK_THROWS_AS(symbolic_form(invalid), ValidationError);
}

TEST_CASE("symbolic form is Hermitian under t -> 1/t") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const auto cc = gen::random_ccomplex(rng, 1 + trial % 3, 1 + trial % 3);
        const auto h = symbolic_form(cc);
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j) CHECK(h(i, j) == h(j, i).inverted_variables());
    }
}

TEST_CASE("hermitian form examples") {
    const auto m1 = TorusPoint::roots({{1, 2}});
    const auto h = exact(hermitian_form(hopf(), m1));
    REQUIRE(h.size == 1);
    CHECK(h(0, 0) == CyclotomicScalar::integer(h.ring, 4));

    CHECK(form_size(hermitian_form(CComplexData::from_seifert_matrix(IntMatrix(0, 0)), m1)) == 0);

    const auto tre = exact(hermitian_form(CComplexData::from_seifert_matrix(IntMatrix::from_rows({{-1, 1}, {0, -1}})), m1));
    CHECK(tre(0, 0) == CyclotomicScalar::integer(tre.ring, -4));
    CHECK(tre(0, 1) == CyclotomicScalar::integer(tre.ring, 2));
    CHECK(tre(1, 0) == CyclotomicScalar::integer(tre.ring, 2));
    CHECK(tre(1, 1) == CyclotomicScalar::integer(tre.ring, -4));

    CHECK_THROWS_AS(hermitian_form(hopf(), TorusPoint::roots({{1, 2}, {1, 2}})), DimensionError);
    EvalOptions o;
    o.backend = Backend::Exact;
    CHECK_THROWS_AS(hermitian_form(hopf(), parse_omega("angle:1"), o), ConfigurationError);
}

TEST_CASE("hermitian form: specialization, conjugation and backend agreement") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const int mu = 1 + trial % 3;
        const auto cc = gen::random_ccomplex(rng, 1 + trial % 4, mu);
        std::vector<std::pair<long, long>> kn;
        for (int i = 0; i < mu; ++i) kn.emplace_back(1 + gen::uniform(rng, 0, 3), 5 + 2 * (i % 2));
        const auto w = TorusPoint::roots(kn);
        const auto hf = hermitian_form(cc, w);
        const auto& h = exact(hf);
        CHECK(is_hermitian(hf));
        const auto sym = symbolic_form(cc);
        const auto hc = exact(hermitian_form(cc, w.conjugate()));
        const auto ref = oracle::hermitian(cc, oracle::coords(w));
        const auto ap = std::get<ApproxForm>(hermitian_form(cc, w, EvalOptions{Backend::Approx, 200, 1e-9}));
        CHECK(is_hermitian(HermitianForm(ap)));
        for (std::size_t i = 0; i < h.size; ++i) {
            for (std::size_t j = 0; j < h.size; ++j) {
                CHECK(evaluate_exact(sym(i, j), w, h.ring) == h(i, j));
                CHECK(hc(i, j) == h(i, j).conj());
                const auto num = h(i, j).to_approx(200);
                CHECK(std::abs(num.re.to_double() - ref(i, j).real()) < 1e-9);
                CHECK(std::abs(num.im.to_double() - ref(i, j).imag()) < 1e-9);
                CHECK((num - ap(i, j)).abs().to_double() < std::ldexp(1.0, -190));
            }
        }
    }
}
