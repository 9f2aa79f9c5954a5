#pragma once

// Classification of torus points with respect to concordance roots.
//
// A point is a concordance root when some Laurent polynomial p with
// p(1,...,1) = +-1 vanishes there. Points whose coordinates are all roots of
// unity of p-power order for one prime p are never concordance roots.

#include "colsig/laurent.hpp"
#include "colsig/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace colsig {

enum class Verdict { NotConcordanceRoot, ConcordanceRoot, Unknown };

std::string to_string(Verdict v);

struct OmegaClassification {
    Verdict verdict = Verdict::Unknown;
    std::optional<long> prime;               // set for NotConcordanceRoot
    std::optional<LaurentPoly> certificate;  // set for ConcordanceRoot
    std::string notes;
};

/// The common prime p when every coordinate has p-power order.
std::optional<long> common_prime_power_prime(const TorusPoint& omega);

/// True iff p(omega) = 0 exactly and |p(1,...,1)| = 1. Throws
/// ConfigurationError at a non-exact point.
bool verify_certificate(const LaurentPoly& p, const TorusPoint& omega);

/// p(x_1..x_n) = q(x_beta(1), ..., x_beta(mu)); beta is 0-based here.
/// Throws DomainError for an index outside [0, n).
LaurentPoly transport_certificate(const LaurentPoly& q, const std::vector<int>& beta, int n);

/// Certificate a * (1 + t1 + ... + t1^{p-1}) - b * (1 + t2 + ... + t2^{q-1})
/// with a p - b q = +-1, for a two-coordinate point of distinct prime orders.
std::optional<LaurentPoly> mixed_prime_certificate(const TorusPoint& omega);

/// Throws InvalidCertificate for a supplied certificate that does not verify
/// and InconsistencyError for a verifying certificate at a prime-power point.
OmegaClassification classify(const TorusPoint& omega, const std::optional<LaurentPoly>& cert = std::nullopt);

}  // namespace colsig
