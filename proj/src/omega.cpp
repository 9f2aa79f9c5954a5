#include "colsig/omega.hpp"

#include "colsig/errors.hpp"

namespace colsig {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NotConcordanceRoot: return "NotConcordanceRoot";
        case Verdict::ConcordanceRoot: return "ConcordanceRoot";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<long> common_prime_power_prime(const TorusPoint& omega) {
    std::optional<long> prime;
    for (const auto& c : omega.coords()) {
        const auto p = is_root_of_unity_of_prime_power_order(c);
        if (!p || (prime && *prime != *p)) return std::nullopt;
        prime = p;
    }
    return prime;
}

bool verify_certificate(const LaurentPoly& p, const TorusPoint& omega) {
    if (!omega.is_exact()) {
        throw ConfigurationError("certificate verification needs an exact point");
    }
    if (p.num_vars() != omega.num_vars()) throw DimensionError("certificate and point have different variable counts");
    return is_in_U(p) && evaluate_exact(p, omega).is_zero();
}

LaurentPoly transport_certificate(const LaurentPoly& q, const std::vector<int>& beta, int n) {
    if (static_cast<int>(beta.size()) != q.num_vars()) throw DomainError("beta must be defined on every variable of q");
    for (int b : beta) {
        if (b < 0 || b >= n) throw DomainError("beta maps outside the target variables");
    }
    LaurentPoly p(n);
    for (const auto& [e, c] : q.terms()) {
        Exponent target(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < beta.size(); ++i) target[beta[i]] += e[i];
        p.add_term(target, c);
    }
    return p;
}

std::optional<LaurentPoly> mixed_prime_certificate(const TorusPoint& omega) {
    if (omega.num_vars() != 2 || !omega.is_exact()) return std::nullopt;
    const auto& r1 = std::get<RootOfUnity>(omega[0]);
    const auto& r2 = std::get<RootOfUnity>(omega[1]);
    const long p = r1.n, q = r2.n;
    if (p == q || prime_power_base(p) != p || prime_power_base(q) != q) return std::nullopt;

    mpz_class g, a, b;
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), mpz_class(p).get_mpz_t(), mpz_class(q).get_mpz_t());
    // a p + b q = 1, so a * sum_p - (-b) * sum_q has augmentation 1.
    LaurentPoly sum_p(2), sum_q(2);
    for (int i = 0; i < p; ++i) sum_p.add_term({i, 0}, 1);
    for (int j = 0; j < q; ++j) sum_q.add_term({0, j}, 1);
    return sum_p.scaled(a) + sum_q.scaled(b);
}

OmegaClassification classify(const TorusPoint& omega, const std::optional<LaurentPoly>& cert) {
    OmegaClassification out;
    const auto prime = common_prime_power_prime(omega);

    if (cert) {
        if (cert->num_vars() != omega.num_vars()) {
            throw InvalidCertificate("certificate has " + std::to_string(cert->num_vars()) + " variables, point has " +
                                     std::to_string(omega.num_vars()));
        }
        if (!omega.is_exact()) {
            throw InvalidCertificate("a certificate can only be verified at an exact point");
        }
        if (!is_in_U(*cert)) {
            throw InvalidCertificate("certificate augmentation is " + augment(*cert).get_str() + ", not +-1");
        }
        if (!evaluate_exact(*cert, omega).is_zero()) {
            throw InvalidCertificate("certificate does not vanish at " + omega.to_string());
        }
        if (prime) {
            throw InconsistencyError("verified certificate at a point whose coordinates all have " +
                                     std::to_string(*prime) + "-power order");
        }
        out.verdict = Verdict::ConcordanceRoot;
        out.certificate = *cert;
        out.notes = "supplied certificate vanishes at omega and has augmentation +-1";
        return out;
    }

    if (prime) {
        out.verdict = Verdict::NotConcordanceRoot;
        out.prime = prime;
        out.notes = "every coordinate is a root of unity of " + std::to_string(*prime) +
                    "-power order; any polynomial vanishing there has augmentation divisible by " +
                    std::to_string(*prime);
        return out;
    }

    if (auto auto_cert = mixed_prime_certificate(omega)) {
        if (!verify_certificate(*auto_cert, omega)) {
            throw InconsistencyError("generated mixed-prime certificate failed to verify");
        }
        out.verdict = Verdict::ConcordanceRoot;
        out.certificate = std::move(auto_cert);
        out.notes = "coordinates have distinct prime orders; certificate built from the Bezout identity";
        return out;
    }

    out.verdict = Verdict::Unknown;
    if (!omega.is_exact()) {
        out.notes = "approximate coordinates cannot establish prime-power order";
    } else {
        out.notes = "coordinate orders do not share a single prime and no certificate was supplied";
    }
    return out;
}

}  // namespace colsig
