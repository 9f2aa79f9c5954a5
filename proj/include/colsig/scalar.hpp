#pragma once

// Points of the torus (S^1 \ {1})^mu and the two scalar backends used to
// evaluate things at them: exact arithmetic in Z[zeta_N] / Q(zeta_N) for
// roots of unity, and multiprecision complex arithmetic otherwise.

#include "colsig/bigfloat.hpp"
#include "colsig/laurent.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace colsig {

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr double kDefaultTolerance = 1e-9;

/// e^{2 pi i k / n} with gcd(k, n) = 1 and 0 < k < n.
struct RootOfUnity {
    long k;
    long n;
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// e^{i angle} with angle strictly inside (0, 2 pi).
struct AngleCoord {
    double angle;
    friend bool operator==(const AngleCoord&, const AngleCoord&) = default;
};

using TorusCoord = std::variant<RootOfUnity, AngleCoord>;

/// Reduces k/n and rejects the point 1. Throws DomainError.
RootOfUnity make_root(long k, long n);
/// Throws DomainError unless 0 < angle < 2 pi.
AngleCoord make_angle(double angle);

class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(std::vector<TorusCoord> coords);

    /// Convenience: all coordinates exact, given as (k, n) pairs.
    static TorusPoint roots(const std::vector<std::pair<long, long>>& kn);
    /// The same coordinate repeated mu times.
    static TorusPoint diagonal(const TorusCoord& c, int mu);

    int num_vars() const { return static_cast<int>(coords_.size()); }
    const std::vector<TorusCoord>& coords() const { return coords_; }
    const TorusCoord& operator[](std::size_t i) const { return coords_[i]; }
    bool is_exact() const;

    /// Complex conjugate point (k/n -> (n-k)/n, angle -> 2 pi - angle).
    TorusPoint conjugate() const;

    /// Textual form accepted by parse_omega, e.g. "root:1/3,angle:2.5".
    std::string to_string() const;

    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

private:
    std::vector<TorusCoord> coords_;
};

/// Parses "root:k/n,angle:x,..." into a point. Throws ValidationError.
TorusPoint parse_omega(const std::string& spec);

/// lcm of the coordinate orders; every coordinate lies in Q(zeta_N).
/// Throws ConfigurationError for a point with an approximate coordinate.
long common_field(const TorusPoint& omega);

/// If n = p^e with p prime and e >= 1, returns p.
std::optional<long> prime_power_base(long n);

/// Prime p when the coordinate is an exact root of unity of order p^e.
std::optional<long> is_root_of_unity_of_prime_power_order(const TorusCoord& c);

/// Angle of the coordinate at the given precision.
BigFloat coord_angle(const TorusCoord& c, unsigned precision_bits);

/// Phi_n as a one-variable Laurent polynomial, from
/// Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d.
LaurentPoly cyclotomic_polynomial(long n);

/// Integer coefficients of Phi_n, constant term first. Cached.
const std::vector<mpz_class>& cyclotomic_coefficients(long n);

/// Z[t] / Phi_N(t), shared between all scalars of one conductor.
class CyclotomicRing {
public:
    static std::shared_ptr<const CyclotomicRing> get(long conductor);

    long conductor() const { return conductor_; }
    /// deg Phi_N = Euler's totient of N.
    std::size_t degree() const { return modulus_.size() - 1; }

    /// Reduces an arbitrary-length coefficient vector modulo Phi_N in place
    /// and truncates it to degree() entries.
    void reduce(std::vector<mpz_class>& coeffs) const;

    explicit CyclotomicRing(long conductor);

private:
    long conductor_;
    std::vector<mpz_class> modulus_;  // monic, constant term first
    std::vector<std::size_t> support_;  // indices i < degree() with modulus_[i] != 0
};

/// Element of Q(zeta_N) stored as (integer power-basis vector) / denominator.
class CyclotomicScalar {
public:
    explicit CyclotomicScalar(std::shared_ptr<const CyclotomicRing> ring);

    static CyclotomicScalar integer(std::shared_ptr<const CyclotomicRing> ring, const mpz_class& v);
    static CyclotomicScalar rational(std::shared_ptr<const CyclotomicRing> ring, const mpq_class& v);
    /// zeta_N^e for any integer e.
    static CyclotomicScalar zeta_power(std::shared_ptr<const CyclotomicRing> ring, long e);
    /// Builds sum_j c_j zeta_N^j from a coefficient vector of any length.
    static CyclotomicScalar from_powers(std::shared_ptr<const CyclotomicRing> ring, std::vector<mpz_class> c);

    long conductor() const { return ring_->conductor(); }
    const std::shared_ptr<const CyclotomicRing>& ring() const { return ring_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    /// Fixed by complex conjugation zeta -> zeta^{-1}.
    bool is_real() const;
    CyclotomicScalar conj() const;

    CyclotomicScalar& operator+=(const CyclotomicScalar& o);
    CyclotomicScalar& operator-=(const CyclotomicScalar& o);
    friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
    friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b);
    friend CyclotomicScalar operator-(const CyclotomicScalar& a);
    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b);

    CyclotomicScalar scaled(const mpz_class& s) const;
    /// gcd of the numerator coefficients (0 for the zero element).
    mpz_class content() const;
    /// Divides the numerator by an exact positive divisor of its content.
    void divide_numerator(const mpz_class& d);
    /// Sum of bit lengths of the numerator; a cost heuristic for pivoting.
    std::size_t bit_size() const;

    /// Numerical value under zeta_N = e^{2 pi i / N}.
    ApproxComplex to_approx(unsigned precision_bits) const;

    std::string to_string() const;

private:
    void normalize();

    std::shared_ptr<const CyclotomicRing> ring_;
    std::vector<mpz_class> coeffs_;
    mpz_class den_ = 1;
};

/// Exact sign of a real cyclotomic number: 0 iff it is zero, otherwise the
/// sign of a floating enclosure refined at doubling precision until it
/// excludes 0. Throws DomainError for non-real input.
int sign_of_real(const CyclotomicScalar& x);

enum class Backend { Exact, Approx };

std::string to_string(Backend b);

using Scalar = std::variant<CyclotomicScalar, ApproxComplex>;

/// p(omega) in Q(zeta_N) with N = common_field(omega) (or the given ring,
/// whose conductor must be a multiple of it).
CyclotomicScalar evaluate_exact(const LaurentPoly& p, const TorusPoint& omega);
CyclotomicScalar evaluate_exact(const LaurentPoly& p, const TorusPoint& omega,
                                const std::shared_ptr<const CyclotomicRing>& ring);

ApproxComplex evaluate_approx(const LaurentPoly& p, const TorusPoint& omega,
                              unsigned precision_bits = kDefaultPrecisionBits);

/// Evaluates in the requested backend (default: exact iff omega is exact).
/// Requesting Exact at a non-exact point throws ConfigurationError.
Scalar evaluate(const LaurentPoly& p, const TorusPoint& omega, std::optional<Backend> backend = {},
                unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace colsig
