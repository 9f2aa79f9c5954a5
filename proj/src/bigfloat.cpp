#include "colsig/bigfloat.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace colsig {

namespace {
mpfr_prec_t clamp_prec(unsigned p) { return std::max<mpfr_prec_t>(MPFR_PREC_MIN, static_cast<mpfr_prec_t>(p)); }
}  // namespace

BigFloat::BigFloat(unsigned precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, unsigned precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, unsigned precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v, unsigned precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, unsigned precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return buf.data();
}

BigFloat BigFloat::pi(unsigned precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long exp, unsigned precision_bits) {
    BigFloat r(1L, precision_bits);
    mpfr_mul_2si(r.v_, r.v_, exp, MPFR_RNDN);
    return r;
}

// Results take the wider of the two precisions.
#define COLSIG_BIGFLOAT_BINOP(op, fn)                                               \
    BigFloat& BigFloat::operator op(const BigFloat& o) {                           \
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN); \
        fn(v_, v_, o.v_, MPFR_RNDN);                                                \
        return *this;                                                               \
    }
COLSIG_BIGFLOAT_BINOP(+=, mpfr_add)
COLSIG_BIGFLOAT_BINOP(-=, mpfr_sub)
COLSIG_BIGFLOAT_BINOP(*=, mpfr_mul)
COLSIG_BIGFLOAT_BINOP(/=, mpfr_div)
#undef COLSIG_BIGFLOAT_BINOP

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& a) {
    BigFloat r(a);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
}

ApproxComplex ApproxComplex::unit(const BigFloat& angle) { return {cos(angle), sin(angle)}; }

ApproxComplex& ApproxComplex::operator+=(const ApproxComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

ApproxComplex& ApproxComplex::operator-=(const ApproxComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

ApproxComplex& ApproxComplex::operator*=(const ApproxComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    BigFloat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

}  // namespace colsig
