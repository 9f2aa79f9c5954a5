#pragma once

// Genus and surface bounds for colored cobordisms, and concordance /
// 0.5-solvable cobordism obstructions from signatures, nullities and linking
// numbers. The inequalities only hold at points that are not concordance
// roots; elsewhere checks are reported but marked not applicable.

#include "colsig/ccomplex.hpp"
#include "colsig/inertia.hpp"
#include "colsig/omega.hpp"

#include <optional>
#include <string>
#include <vector>

namespace colsig {

/// A colored cobordism between links with n and n' components. Any subset of
/// the three per-color encodings may be given; they must agree.
struct CobordismProfile {
    std::optional<std::vector<long>> euler_characteristics;  // chi(Sigma_i)
    std::optional<std::vector<long>> betti_numbers;          // b1(Sigma_i)
    std::optional<std::vector<long>> genera;                 // summed genus of Sigma_i
    long components = 1;                                     // m
    long double_points = 0;                                  // c
    std::optional<long> boundary_left;                       // n, needed with genera
    std::optional<long> boundary_right;                      // n'
};

/// sum -chi(Sigma_i) + c = sum b1(Sigma_i) - m + c = sum 2 g_i + n + n' - 2m + c.
/// Throws ConsistencyError when encodings disagree or none is usable.
long cobordism_cost(const CobordismProfile& profile);

/// A colored bounding surface F in the 4-ball.
struct SurfaceProfile {
    std::vector<long> betti_numbers;  // b1(F_i)
    long components = 1;              // m
    long double_points = 0;           // c
};

struct BoundCheck {
    long lhs = 0;
    long rhs = 0;
    bool satisfied = true;
    /// The point is certified not to be a concordance root.
    bool applicable = false;
    bool sharp() const { return lhs == rhs; }
};

/// |sigma_L - sigma_L'| + |eta_L - eta_L'| <= cobordism_cost.
BoundCheck genus_bound_check(const InertiaResult& left, const InertiaResult& right, const CobordismProfile& profile,
                             const OmegaClassification& classification);

/// |sigma_L| + |eta_L - m + 1| <= sum b1(F_i) + c.
BoundCheck surface_bound_check(const InertiaResult& inv, const SurfaceProfile& profile,
                               const OmegaClassification& classification);

struct ObstructionRow {
    TorusPoint omega;
    OmegaClassification classification;
    std::optional<InertiaResult> left;
    std::optional<InertiaResult> right;
    long lhs = 0;  // |dsigma| + |deta|
    long rhs = 0;
    bool satisfied = true;
    bool applicable = false;
    std::string error;
    bool indeterminate = false;
};

struct LinkingMismatch {
    int i;
    int j;
    long long left;
    long long right;
};

enum class ObstructionVerdict { Consistent, Obstructed };

std::string to_string(ObstructionVerdict v);

struct ObstructionReport {
    std::vector<ObstructionRow> rows;
    std::vector<LinkingMismatch> linking_mismatches;
    ObstructionVerdict verdict = ObstructionVerdict::Consistent;
    std::vector<TorusPoint> witnesses;  // applicable points where sigma or eta differ
};

/// Per coordinate the p^e-th roots of unity, p in {2,3,5}, e <= 3, combined so
/// that all coordinates share the prime; evenly subsampled to at most
/// max_points in a fixed order.
std::vector<TorusPoint> default_grid(int mu, std::size_t max_points = 256);

/// The same construction for every prime p <= max_prime and 1 <= e <= max_exponent.
std::vector<TorusPoint> prime_power_grid(int mu, long max_prime, int max_exponent, std::size_t max_points = 256);

/// Compares sigma and eta of two C-complexes at every grid point certified
/// not to be a concordance root, plus sublink linking numbers.
ObstructionReport concordance_obstruction(const CComplexData& left, const CComplexData& right,
                                          const std::vector<TorusPoint>& grid, const EvalOptions& opts = {});

/// Same, with caller-supplied classifications (one per grid point).
ObstructionReport concordance_obstruction(const CComplexData& left, const CComplexData& right,
                                          const std::vector<TorusPoint>& grid,
                                          const std::vector<OmegaClassification>& classifications,
                                          const EvalOptions& opts = {});

/// CSV with columns omega,sigma_L,eta_L,sigma_L2,eta_L2,lhs,rhs,applicable.
std::string report_csv(const ObstructionReport& report);

}  // namespace colsig
