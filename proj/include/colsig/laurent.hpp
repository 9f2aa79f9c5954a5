#pragma once

// Multivariate integer Laurent polynomials Z[t1^{+-1},...,tmu^{+-1}] and dense
// matrices over them.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace colsig {

using Exponent = std::vector<int>;

class LaurentPoly {
public:
    using TermMap = std::map<Exponent, mpz_class>;  // lexicographic on exponents

    explicit LaurentPoly(int num_vars = 1);

    static LaurentPoly constant(int num_vars, const mpz_class& c);
    static LaurentPoly monomial(int num_vars, Exponent exps, const mpz_class& c = 1);
    /// t_index^power, index is 0-based.
    static LaurentPoly variable(int num_vars, int index, int power = 1);

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c * t^exps, dropping the term if it cancels.
    void add_term(const Exponent& exps, const mpz_class& c);

    /// Coefficient of t^exps (zero if absent).
    mpz_class coeff(const Exponent& exps) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    LaurentPoly scaled(const mpz_class& c) const;
    /// Multiplies by the monomial t^shift.
    LaurentPoly shifted(const Exponent& shift) const;
    /// The involution t_i -> t_i^{-1}.
    LaurentPoly inverted_variables() const;

    /// Componentwise minimum / maximum exponent over the support (zeros for 0).
    Exponent min_exponents() const;
    Exponent max_exponents() const;

    /// Terms in lexicographic exponent order, e.g. "t1^-1 + 1".
    std::string to_string() const;

private:
    int num_vars_;
    TermMap terms_;
};

/// Evaluation at (1,...,1): the sum of all coefficients.
mpz_class augment(const LaurentPoly& p);

/// Membership in U: |p(1,...,1)| = 1.
bool is_in_U(const LaurentPoly& p);

/// Exact quotient num / den in the Laurent ring. Throws DomainError when den
/// does not divide num.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

class LaurentMatrix {
public:
    LaurentMatrix(std::size_t rows, std::size_t cols, int num_vars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int num_vars() const { return num_vars_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    LaurentMatrix transposed() const;
    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    int num_vars_;
    std::vector<LaurentPoly> entries_;
};

/// Rank over the fraction field Q(t1,...,tmu). Each row is first multiplied by
/// a monomial so that all exponents are nonnegative, then fraction-free
/// (Bareiss) elimination runs over Z[t1,...,tmu].
std::size_t rank_over_fraction_field(const LaurentMatrix& m);

}  // namespace colsig
