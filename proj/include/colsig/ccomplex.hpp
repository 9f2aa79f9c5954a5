#pragma once

// C-complex data: the generalized Seifert matrices A^eps of a mu-colored link,
// the symbolic matrix H(t) and the Hermitian matrices H(omega).

#include "colsig/laurent.hpp"
#include "colsig/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace colsig {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    /// Throws DimensionError on ragged input.
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    long long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const;
    std::vector<std::vector<long long>> to_rows() const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<long long> data_;
};

/// Sign vector eps in {+1,-1}^mu; bit i set means eps_{i+1} = -1.
using SignMask = std::uint32_t;

/// "+-+" style string for a mask.
std::string sign_string(SignMask eps, int mu);
/// Inverse of sign_string. Throws ValidationError.
SignMask parse_sign_string(const std::string& s);

inline constexpr int kMaxColors = 16;

struct CComplexData {
    int mu = 1;
    int g = 0;
    int beta0 = 1;
    std::vector<int> components_per_color;
    std::vector<std::vector<long long>> linking;
    /// Only masks with eps_1 = +1 (bit 0 clear) are stored.
    std::map<SignMask, IntMatrix> half_matrices;

    /// A^eps for any sign vector, using A^{-eps} = (A^eps)^T.
    IntMatrix matrix(SignMask eps) const;

    /// mu = 1 C-complex from a classical Seifert matrix (A^+ = A).
    static CComplexData from_seifert_matrix(const IntMatrix& seifert, int beta0 = 1, int components = 1);

    friend bool operator==(const CComplexData&, const CComplexData&) = default;
};

struct Violation {
    enum class Kind { Shape, Family, Metadata };
    Kind kind;
    std::string message;
};

std::string to_string(Violation::Kind k);

/// Every invariant violation; empty means valid.
std::vector<Violation> validate(const CComplexData& cc);
/// Throws ValidationError listing the violations, if any.
void require_valid(const CComplexData& cc);

/// H(t) = sum_eps prod_i (1 - t_i^{-eps_i}) A^eps over Z[t^{+-1}].
LaurentMatrix symbolic_form(const CComplexData& cc);

struct ExactForm {
    std::size_t size = 0;
    std::shared_ptr<const CyclotomicRing> ring;
    std::vector<CyclotomicScalar> entries;  // row-major

    const CyclotomicScalar& operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    CyclotomicScalar& operator()(std::size_t i, std::size_t j) { return entries[i * size + j]; }
};

struct ApproxForm {
    std::size_t size = 0;
    unsigned precision_bits = kDefaultPrecisionBits;
    std::vector<ApproxComplex> entries;  // row-major

    const ApproxComplex& operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    ApproxComplex& operator()(std::size_t i, std::size_t j) { return entries[i * size + j]; }
};

using HermitianForm = std::variant<ExactForm, ApproxForm>;

std::size_t form_size(const HermitianForm& h);
Backend form_backend(const HermitianForm& h);

/// Exact check M = M^* for the exact backend; within tolerance * max|entry|
/// for the approximate one.
bool is_hermitian(const HermitianForm& h, double tolerance = kDefaultTolerance);

/// Numerical copy of an exact form.
ApproxForm to_approx(const ExactForm& h, unsigned precision_bits);

struct EvalOptions {
    std::optional<Backend> backend;  // unset: exact iff omega is exact
    unsigned precision_bits = kDefaultPrecisionBits;
    double tolerance = kDefaultTolerance;
};

/// H(omega) = sum_eps prod_i (1 - conj(omega_i)^{eps_i}) A^eps.
HermitianForm hermitian_form(const CComplexData& cc, const TorusPoint& omega, const EvalOptions& opts = {});

}  // namespace colsig
