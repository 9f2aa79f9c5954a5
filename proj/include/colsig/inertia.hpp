#pragma once

// Inertia of Hermitian forms and the link invariants built from it:
// sigma_L(omega) = sign H(omega), eta_L(omega) = null H(omega) + beta0 - 1.

#include "colsig/ccomplex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace colsig {

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    int signature() const { return static_cast<int>(positive) - static_cast<int>(negative); }
    std::size_t size() const { return positive + negative + zero; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Hermitian congruence reduction over Q(zeta_N). Throws DomainError if the
/// form is not Hermitian.
Inertia inertia_exact(const ExactForm& h);

struct ApproxInertia {
    Inertia inertia;
    /// Smallest |eigenvalue| counted as nonzero; unset when there is none.
    std::optional<double> tolerance_margin;
};

/// Eigenvalues of H via cyclic Jacobi on the real symmetric embedding
/// [[Re H, -Im H], [Im H, Re H]]; returned sorted, one per eigenvalue of H.
std::vector<BigFloat> hermitian_eigenvalues(const ApproxForm& h);

/// Eigenvalue counts against the threshold tolerance * max|H_ij|. An
/// eigenvalue with threshold/4 < |lambda| < 4 * threshold throws
/// IndeterminateInertia.
ApproxInertia inertia_approx(const ApproxForm& h, double tolerance = kDefaultTolerance);

/// Dispatches on the form's backend.
ApproxInertia inertia(const HermitianForm& h, double tolerance = kDefaultTolerance);

struct InertiaResult {
    TorusPoint omega;
    int signature = 0;
    std::size_t matrix_nullity = 0;
    std::size_t eta = 0;
    Backend backend = Backend::Exact;
    std::optional<double> tolerance_margin;
};

InertiaResult signature_and_nullity(const CComplexData& cc, const TorusPoint& omega, const EvalOptions& opts = {});

struct ProfileRow {
    TorusPoint omega;
    std::optional<InertiaResult> result;
    std::string error;  // empty on success
    bool indeterminate = false;
};

/// Per-point invariants over a grid, parallel over points (OpenMP). Row i
/// always corresponds to grid[i]; per-point failures are recorded in the row.
std::vector<ProfileRow> torus_profile(const CComplexData& cc, const std::vector<TorusPoint>& grid,
                                      const EvalOptions& opts = {});

/// Single-threaded reference for torus_profile.
std::vector<ProfileRow> torus_profile_serial(const CComplexData& cc, const std::vector<TorusPoint>& grid,
                                             const EvalOptions& opts = {});

struct AlexanderNullity {
    std::size_t value = 0;
    bool sampled = false;
    std::size_t samples = 0;
};

struct AlexanderOptions {
    std::size_t samples = 32;
    std::uint64_t seed = 0x5eed;
};

/// Exact points whose coordinates are roots of unity of one prime order,
/// with a different prime (>= 53) for each point.
std::vector<TorusPoint> generic_sample_points(int mu, std::size_t count, std::uint64_t seed);

/// beta0 = 1: g - rank H(t). Otherwise the minimum of eta over
/// generic_sample_points, flagged as sampled.
AlexanderNullity alexander_nullity(const CComplexData& cc, const AlexanderOptions& opts = {});

}  // namespace colsig
