#pragma once

// Minimal value-semantic wrapper over an mpfr_t with an explicit, per-value
// precision. Binary operations round to the larger operand precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace colsig {

class BigFloat {
public:
    explicit BigFloat(unsigned precision_bits = 128);
    BigFloat(double v, unsigned precision_bits);
    BigFloat(long v, unsigned precision_bits);
    BigFloat(const mpz_class& v, unsigned precision_bits);
    BigFloat(const mpq_class& v, unsigned precision_bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    std::string to_string(int digits = 20) const;

    static BigFloat pi(unsigned precision_bits);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    friend BigFloat abs(const BigFloat& a);
    friend BigFloat sqrt(const BigFloat& a);
    friend BigFloat cos(const BigFloat& a);
    friend BigFloat sin(const BigFloat& a);
    /// 2^exp at the given precision.
    static BigFloat pow2(long exp, unsigned precision_bits);

    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

/// Complex number over BigFloat; the approximate scalar backend.
struct ApproxComplex {
    BigFloat re;
    BigFloat im;

    explicit ApproxComplex(unsigned precision_bits = 128) : re(precision_bits), im(precision_bits) {}
    ApproxComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    unsigned precision() const { return re.precision(); }

    /// e^{i angle}
    static ApproxComplex unit(const BigFloat& angle);

    ApproxComplex conj() const { return {re, -im}; }
    BigFloat abs2() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(abs2()); }

    ApproxComplex& operator+=(const ApproxComplex& o);
    ApproxComplex& operator-=(const ApproxComplex& o);
    ApproxComplex& operator*=(const ApproxComplex& o);
    friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
    friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
    friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
    ApproxComplex scaled(const BigFloat& s) const { return {re * s, im * s}; }
};

}  // namespace colsig
