#include "colsig/scalar.hpp"

#include "colsig/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace colsig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long positive_mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

// Exact division of integer polynomials (constant term first) by a monic or
// unit-led divisor; the caller guarantees divisibility.
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<mpz_class> q(num.size() - dn);
    for (std::size_t top = num.size(); top-- > dn;) {
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), num[top].get_mpz_t(), den[dn].get_mpz_t());
        q[top - dn] = c;
        for (std::size_t i = 0; i <= dn; ++i) num[top - dn + i] -= c * den[i];
    }
    return q;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return r;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

RootOfUnity make_root(long k, long n) {
    if (n < 1) throw DomainError("root of unity order must be positive");
    k = positive_mod(k, n);
    if (k == 0) throw DomainError("coordinate equal to 1 is not a point of the torus");
    const long g = std::gcd(k, n);
    return RootOfUnity{k / g, n / g};
}

AngleCoord make_angle(double angle) {
    if (!std::isfinite(angle) || !(angle > 0.0) || !(angle < kTwoPi)) {
        throw DomainError("angle must lie strictly inside (0, 2*pi)");
    }
    return AngleCoord{angle};
}

TorusPoint::TorusPoint(std::vector<TorusCoord> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) {
        if (auto* r = std::get_if<RootOfUnity>(&c)) {
            *r = make_root(r->k, r->n);
        } else {
            make_angle(std::get<AngleCoord>(c).angle);
        }
    }
}

TorusPoint TorusPoint::roots(const std::vector<std::pair<long, long>>& kn) {
    std::vector<TorusCoord> c;
    c.reserve(kn.size());
    for (auto [k, n] : kn) c.emplace_back(make_root(k, n));
    return TorusPoint(std::move(c));
}

TorusPoint TorusPoint::diagonal(const TorusCoord& c, int mu) {
    return TorusPoint(std::vector<TorusCoord>(static_cast<std::size_t>(mu), c));
}

bool TorusPoint::is_exact() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const TorusCoord& c) { return std::holds_alternative<RootOfUnity>(c); });
}

TorusPoint TorusPoint::conjugate() const {
    std::vector<TorusCoord> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_) {
        if (const auto* r = std::get_if<RootOfUnity>(&x)) {
            c.emplace_back(RootOfUnity{r->n - r->k, r->n});
        } else {
            c.emplace_back(AngleCoord{kTwoPi - std::get<AngleCoord>(x).angle});
        }
    }
    return TorusPoint(std::move(c));
}

std::string TorusPoint::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        if (const auto* r = std::get_if<RootOfUnity>(&coords_[i])) {
            out += "root:" + std::to_string(r->k) + "/" + std::to_string(r->n);
        } else {
            out += "angle:" + format_double(std::get<AngleCoord>(coords_[i]).angle);
        }
    }
    return out;
}

TorusPoint parse_omega(const std::string& spec) {
    std::vector<TorusCoord> coords;
    std::stringstream ss(spec);
    std::string item;
    auto fail = [&](const std::string& why) { throw ValidationError("bad omega spec '" + spec + "': " + why); };
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        try {
            if (item.rfind("root:", 0) == 0) {
                const std::string body = item.substr(5);
                const auto slash = body.find('/');
                if (slash == std::string::npos) fail("expected root:k/n");
                std::size_t p1 = 0, p2 = 0;
                const long k = std::stol(body.substr(0, slash), &p1);
                const long n = std::stol(body.substr(slash + 1), &p2);
                if (p1 != slash || p2 != body.size() - slash - 1) fail("trailing characters in " + item);
                coords.emplace_back(make_root(k, n));
            } else if (item.rfind("angle:", 0) == 0) {
                std::size_t p = 0;
                const double a = std::stod(item.substr(6), &p);
                if (p != item.size() - 6) fail("trailing characters in " + item);
                coords.emplace_back(make_angle(a));
            } else {
                fail("unknown coordinate '" + item + "'");
            }
        } catch (const std::logic_error&) {
            fail("unparsable number in '" + item + "'");
        } catch (const DomainError& e) {
            fail(e.what());
        }
    }
    if (coords.empty()) fail("no coordinates");
    return TorusPoint(std::move(coords));
}

long common_field(const TorusPoint& omega) {
    long n = 1;
    for (const auto& c : omega.coords()) {
        const auto* r = std::get_if<RootOfUnity>(&c);
        if (!r) throw ConfigurationError("exact arithmetic needs every coordinate to be a root of unity");
        n = std::lcm(n, r->n);
    }
    return n;
}

std::optional<long> prime_power_base(long n) {
    if (n < 2) return std::nullopt;
    long p = 0;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return n;
    while (n % p == 0) n /= p;
    if (n != 1) return std::nullopt;
    return p;
}

std::optional<long> is_root_of_unity_of_prime_power_order(const TorusCoord& c) {
    const auto* r = std::get_if<RootOfUnity>(&c);
    if (!r) return std::nullopt;
    return prime_power_base(r->n);
}

BigFloat coord_angle(const TorusCoord& c, unsigned precision_bits) {
    if (const auto* r = std::get_if<RootOfUnity>(&c)) {
        BigFloat a = BigFloat::pi(precision_bits);
        a *= BigFloat(2 * r->k, precision_bits);
        a /= BigFloat(r->n, precision_bits);
        return a;
    }
    return BigFloat(std::get<AngleCoord>(c).angle, precision_bits);
}

const std::vector<mpz_class>& cyclotomic_coefficients(long n) {
    if (n < 1) throw DomainError("cyclotomic polynomial index must be positive");
    static std::mutex mutex;
    static std::map<long, std::vector<mpz_class>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // t^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<mpz_class> num(static_cast<std::size_t>(n) + 1);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) num = poly_divexact(std::move(num), cyclotomic_coefficients(d));
    }
    std::lock_guard lock(mutex);
    return cache.try_emplace(n, std::move(num)).first->second;
}

LaurentPoly cyclotomic_polynomial(long n) {
    const auto& c = cyclotomic_coefficients(n);
    LaurentPoly p(1);
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term({static_cast<int>(i)}, c[i]);
    return p;
}

CyclotomicRing::CyclotomicRing(long conductor) : conductor_(conductor), modulus_(cyclotomic_coefficients(conductor)) {
    for (std::size_t i = 0; i + 1 < modulus_.size(); ++i) {
        if (sgn(modulus_[i]) != 0) support_.push_back(i);
    }
}

std::shared_ptr<const CyclotomicRing> CyclotomicRing::get(long conductor) {
    if (conductor < 1) throw DomainError("conductor must be positive");
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const CyclotomicRing>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[conductor];
    if (!slot) slot = std::make_shared<const CyclotomicRing>(conductor);
    return slot;
}

void CyclotomicRing::reduce(std::vector<mpz_class>& c) const {
    const std::size_t deg = degree();
    for (std::size_t top = c.size(); top-- > deg;) {
        if (sgn(c[top]) == 0) continue;
        const mpz_class q = c[top];
        c[top] = 0;
        for (std::size_t i : support_) {
            mpz_submul(c[top - deg + i].get_mpz_t(), q.get_mpz_t(), modulus_[i].get_mpz_t());
        }
    }
    c.resize(deg);
}

CyclotomicScalar::CyclotomicScalar(std::shared_ptr<const CyclotomicRing> ring)
    : ring_(std::move(ring)), coeffs_(ring_->degree()) {}

CyclotomicScalar CyclotomicScalar::integer(std::shared_ptr<const CyclotomicRing> ring, const mpz_class& v) {
    CyclotomicScalar s(std::move(ring));
    s.coeffs_[0] = v;
    return s;
}

CyclotomicScalar CyclotomicScalar::rational(std::shared_ptr<const CyclotomicRing> ring, const mpq_class& v) {
    CyclotomicScalar s(std::move(ring));
    s.coeffs_[0] = v.get_num();
    s.den_ = v.get_den();
    s.normalize();
    return s;
}

CyclotomicScalar CyclotomicScalar::zeta_power(std::shared_ptr<const CyclotomicRing> ring, long e) {
    const long n = ring->conductor();
    std::vector<mpz_class> c(static_cast<std::size_t>(positive_mod(e, n)) + 1);
    c.back() = 1;
    return from_powers(std::move(ring), std::move(c));
}

CyclotomicScalar CyclotomicScalar::from_powers(std::shared_ptr<const CyclotomicRing> ring, std::vector<mpz_class> c) {
    CyclotomicScalar s(std::move(ring));
    if (c.size() < s.coeffs_.size()) c.resize(s.coeffs_.size());
    s.ring_->reduce(c);
    s.coeffs_ = std::move(c);
    return s;
}

bool CyclotomicScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

bool CyclotomicScalar::is_real() const { return conj() == *this; }

CyclotomicScalar CyclotomicScalar::conj() const {
    const long n = conductor();
    std::vector<mpz_class> c(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[positive_mod(-static_cast<long>(j), n)] += coeffs_[j];
    CyclotomicScalar r = from_powers(ring_, std::move(c));
    r.den_ = den_;
    return r;
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& o) {
    if (o.conductor() != conductor()) throw DimensionError("cyclotomic scalars from different fields");
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    } else {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] * o.den_ + o.coeffs_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& o) { return *this += -o; }

CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    if (a.conductor() != b.conductor()) throw DimensionError("cyclotomic scalars from different fields");
    CyclotomicScalar r = CyclotomicScalar::from_powers(a.ring_, poly_mul(a.coeffs_, b.coeffs_));
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

CyclotomicScalar operator-(const CyclotomicScalar& a) {
    CyclotomicScalar r(a);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    return a.conductor() == b.conductor() && a.den_ == b.den_ && a.coeffs_ == b.coeffs_;
}

CyclotomicScalar CyclotomicScalar::scaled(const mpz_class& s) const {
    CyclotomicScalar r(*this);
    for (auto& c : r.coeffs_) c *= s;
    r.normalize();
    return r;
}

mpz_class CyclotomicScalar::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void CyclotomicScalar::divide_numerator(const mpz_class& d) {
    for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

std::size_t CyclotomicScalar::bit_size() const {
    std::size_t bits = 0;
    for (const auto& c : coeffs_) bits += sgn(c) == 0 ? 0 : mpz_sizeinbase(c.get_mpz_t(), 2);
    return bits;
}

void CyclotomicScalar::normalize() {
    if (den_ == 1) return;
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& c : coeffs_) c = -c;
    }
    mpz_class g = content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g == 0) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        divide_numerator(g);
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

ApproxComplex CyclotomicScalar::to_approx(unsigned precision_bits) const {
    ApproxComplex sum(precision_bits);
    const BigFloat base = BigFloat::pi(precision_bits) * BigFloat(2L, precision_bits) /
                          BigFloat(conductor(), precision_bits);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) continue;
        const BigFloat angle = base * BigFloat(static_cast<long>(j), precision_bits);
        sum += ApproxComplex::unit(angle).scaled(BigFloat(coeffs_[j], precision_bits));
    }
    if (den_ != 1) {
        const BigFloat d(den_, precision_bits);
        sum.re /= d;
        sum.im /= d;
    }
    return sum;
}

std::string CyclotomicScalar::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[j].get_str();
        if (j > 0) out += "*z" + std::to_string(conductor()) + "^" + std::to_string(j);
    }
    if (out.empty()) out = "0";
    if (den_ != 1) out = "(" + out + ")/" + den_.get_str();
    return out;
}

int sign_of_real(const CyclotomicScalar& x) {
    if (!x.is_real()) throw DomainError("sign requested for a non-real cyclotomic number");
    if (x.is_zero()) return 0;
    mpz_class l1 = 0;
    std::size_t max_bits = 1;
    for (const auto& c : x.coeffs()) {
        l1 += abs(c);
        if (sgn(c) != 0) max_bits = std::max(max_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    const long terms = static_cast<long>(x.coeffs().size()) + 2;
    // Each term carries at most a few ulps of error from pi, the angle and the
    // cosine; 2^10 * terms covers accumulation with room to spare.
    for (unsigned prec = static_cast<unsigned>(max_bits) + 64;; prec *= 2) {
        const BigFloat value = x.to_approx(prec).re * BigFloat(x.denominator(), prec);
        BigFloat bound = BigFloat(l1, prec) * BigFloat(terms, prec) * BigFloat::pow2(10 - static_cast<long>(prec), prec);
        if (abs(value) > bound) return value.sign();
        if (prec > (1u << 20)) throw DomainError("sign refinement did not terminate");
    }
}

std::string to_string(Backend b) { return b == Backend::Exact ? "exact" : "approx"; }

CyclotomicScalar evaluate_exact(const LaurentPoly& p, const TorusPoint& omega) {
    return evaluate_exact(p, omega, CyclotomicRing::get(common_field(omega)));
}

CyclotomicScalar evaluate_exact(const LaurentPoly& p, const TorusPoint& omega,
                                const std::shared_ptr<const CyclotomicRing>& ring) {
    if (p.num_vars() != omega.num_vars()) throw DimensionError("polynomial and point have different variable counts");
    const long n = ring->conductor();
    if (n % common_field(omega) != 0) throw DimensionError("ring conductor does not contain the point");
    std::vector<long> step(omega.coords().size());
    for (std::size_t i = 0; i < step.size(); ++i) {
        const auto& r = std::get<RootOfUnity>(omega[i]);
        step[i] = r.k * (n / r.n);
    }
    std::vector<mpz_class> acc(static_cast<std::size_t>(n));
    for (const auto& [e, c] : p.terms()) {
        long power = 0;
        for (std::size_t i = 0; i < step.size(); ++i) power = positive_mod(power + positive_mod(e[i] * step[i], n), n);
        acc[power] += c;
    }
    return CyclotomicScalar::from_powers(ring, std::move(acc));
}

ApproxComplex evaluate_approx(const LaurentPoly& p, const TorusPoint& omega, unsigned precision_bits) {
    if (p.num_vars() != omega.num_vars()) throw DimensionError("polynomial and point have different variable counts");
    std::vector<BigFloat> angles;
    for (const auto& c : omega.coords()) angles.push_back(coord_angle(c, precision_bits));
    ApproxComplex sum(precision_bits);
    for (const auto& [e, c] : p.terms()) {
        BigFloat angle(precision_bits);
        for (std::size_t i = 0; i < angles.size(); ++i) angle += angles[i] * BigFloat(static_cast<long>(e[i]), precision_bits);
        sum += ApproxComplex::unit(angle).scaled(BigFloat(c, precision_bits));
    }
    return sum;
}

Scalar evaluate(const LaurentPoly& p, const TorusPoint& omega, std::optional<Backend> backend,
                unsigned precision_bits) {
    const Backend b = backend.value_or(omega.is_exact() ? Backend::Exact : Backend::Approx);
    if (b == Backend::Exact) {
        if (!omega.is_exact()) throw ConfigurationError("exact backend requested at a non-exact point");
        return evaluate_exact(p, omega);
    }
    return evaluate_approx(p, omega, precision_bits);
}

}  // namespace colsig
