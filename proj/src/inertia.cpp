#include "colsig/inertia.hpp"

#include "colsig/errors.hpp"

#include <algorithm>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colsig {

namespace {

// Divides every entry of the active block by the gcd of all numerator
// coefficients; a positive rescaling leaves the inertia unchanged.
void remove_content(std::vector<std::vector<CyclotomicScalar>>& m, const std::vector<std::size_t>& active) {
    mpz_class g = 0;
    for (std::size_t i : active) {
        for (std::size_t j : active) {
            const mpz_class c = m[i][j].content();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return;
        }
    }
    if (g <= 1) return;
    for (std::size_t i : active)
        for (std::size_t j : active) m[i][j].divide_numerator(g);
}

}  // namespace

Inertia inertia_exact(const ExactForm& h) {
    if (!is_hermitian(h)) throw DomainError("inertia of a non-Hermitian matrix");
    const std::size_t n = h.size;
    Inertia out;
    if (n == 0) return out;

    // Clear denominators with a positive integer so every entry is integral.
    mpz_class lcm = 1;
    for (const auto& x : h.entries) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<std::vector<CyclotomicScalar>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            CyclotomicScalar x = h(i, j);
            if (lcm != 1) x = x.scaled(lcm);
            m[i].push_back(std::move(x));
        }
    }

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;
    // The true remaining form is flip * (positive scalar) * m on `active`.
    int flip = 1;

    while (!active.empty()) {
        // Identically zero rows are radical vectors.
        std::erase_if(active, [&](std::size_t i) {
            const bool zero_row = std::all_of(active.begin(), active.end(), [&](std::size_t j) { return m[i][j].is_zero(); });
            if (zero_row) ++out.zero;
            return zero_row;
        });
        if (active.empty()) break;

        std::size_t pivot = n;
        for (std::size_t i : active) {
            if (m[i][i].is_zero()) continue;
            if (pivot == n || m[i][i].bit_size() < m[pivot][pivot].bit_size()) pivot = i;
        }

        if (pivot != n) {
            const CyclotomicScalar d = m[pivot][pivot];
            const int s = sign_of_real(d);
            if (s * flip > 0) {
                ++out.positive;
            } else {
                ++out.negative;
            }
            std::erase(active, pivot);
            // v_i = d e_i - m[pivot][i] e_pivot gives the block d * (d m_ij - m_ip m_pj).
            std::vector<std::vector<CyclotomicScalar>> next = m;
            for (std::size_t i : active) {
                for (std::size_t j : active) {
                    if (j < i) continue;
                    CyclotomicScalar v = d * m[i][j] - m[i][pivot] * m[pivot][j];
                    if (j != i) next[j][i] = v.conj();
                    next[i][j] = std::move(v);
                }
            }
            m = std::move(next);
            if (s < 0) flip = -flip;
        } else {
            // Zero diagonal with a nonzero off-diagonal entry h = m[a][b]: the
            // plane <e_a, e_b> is hyperbolic and contributes one of each sign.
            std::size_t a = n, b = n;
            for (std::size_t i : active) {
                for (std::size_t j : active) {
                    if (i != j && !m[i][j].is_zero()) {
                        a = i;
                        b = j;
                        break;
                    }
                }
                if (a != n) break;
            }
            ++out.positive;
            ++out.negative;
            const CyclotomicScalar hab = m[a][b];
            const CyclotomicScalar hba = m[b][a];
            const CyclotomicScalar norm = hab * hba;  // |h|^2 > 0
            std::erase(active, a);
            std::erase(active, b);
            // v_i = N e_i - h m_bi e_a - conj(h) m_ai e_b is orthogonal to the
            // plane; the new block is N m_ij - h m_ia m_bj - conj(h) m_ib m_aj.
            std::vector<std::vector<CyclotomicScalar>> next = m;
            for (std::size_t i : active) {
                for (std::size_t j : active) {
                    if (j < i) continue;
                    CyclotomicScalar v = norm * m[i][j] - hab * m[i][a] * m[b][j] - hba * m[i][b] * m[a][j];
                    if (j != i) next[j][i] = v.conj();
                    next[i][j] = std::move(v);
                }
            }
            m = std::move(next);
        }
        remove_content(m, active);
    }
    return out;
}

std::vector<BigFloat> hermitian_eigenvalues(const ApproxForm& h) {
    const std::size_t n = h.size;
    const std::size_t m = 2 * n;
    const unsigned prec = h.precision_bits;
    if (n == 0) return {};
    std::vector<BigFloat> a(m * m, BigFloat(prec));
    auto at = [&](std::size_t i, std::size_t j) -> BigFloat& { return a[i * m + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Symmetrize explicitly so rounding in the input cannot break symmetry.
            const BigFloat re = (h(i, j).re + h(j, i).re) / BigFloat(2L, prec);
            const BigFloat im = (h(i, j).im - h(j, i).im) / BigFloat(2L, prec);
            at(i, j) = re;
            at(i + n, j + n) = re;
            at(i + n, j) = im;
            at(i, j + n) = -im;
        }
    }

    BigFloat total(prec);
    for (const auto& x : a) total += x * x;
    const BigFloat eps = BigFloat::pow2(-2 * static_cast<long>(prec) + 16, prec) * total;
    const BigFloat one(1L, prec);
    for (int sweep = 0; sweep < 100; ++sweep) {
        BigFloat off(prec);
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = p + 1; q < m; ++q) off += at(p, q) * at(p, q);
        if (off <= eps) break;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                if (at(p, q).is_zero()) continue;
                const BigFloat tau = (at(q, q) - at(p, p)) / (BigFloat(2L, prec) * at(p, q));
                BigFloat t = one / (abs(tau) + sqrt(one + tau * tau));
                if (tau.sign() < 0) t = -t;
                const BigFloat c = one / sqrt(one + t * t);
                const BigFloat s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const BigFloat akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const BigFloat apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<BigFloat> diag;
    diag.reserve(m);
    for (std::size_t i = 0; i < m; ++i) diag.push_back(at(i, i));
    std::sort(diag.begin(), diag.end(), [](const BigFloat& x, const BigFloat& y) { return x < y; });
    // Each eigenvalue of H appears twice in the embedding.
    std::vector<BigFloat> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back((diag[2 * i] + diag[2 * i + 1]) / BigFloat(2L, prec));
    return out;
}

ApproxInertia inertia_approx(const ApproxForm& h, double tolerance) {
    if (!(tolerance > 0)) throw ConfigurationError("tolerance must be positive");
    if (!is_hermitian(h, tolerance)) throw DomainError("inertia of a non-Hermitian matrix");
    ApproxInertia out;
    if (h.size == 0) return out;
    const unsigned prec = h.precision_bits;
    BigFloat scale(prec);
    for (const auto& x : h.entries) scale = std::max(scale, x.abs());
    if (scale.is_zero()) {
        out.inertia.zero = h.size;
        return out;
    }
    const BigFloat threshold = scale * BigFloat(tolerance, prec);
    const BigFloat lower = threshold / BigFloat(4L, prec);
    const BigFloat upper = threshold * BigFloat(4L, prec);
    for (const auto& lambda : hermitian_eigenvalues(h)) {
        const BigFloat mag = abs(lambda);
        if (mag <= lower) {
            ++out.inertia.zero;
            continue;
        }
        if (mag < upper) {
            throw IndeterminateInertia("eigenvalue " + lambda.to_string(6) + " lies within a factor 4 of the zero threshold " +
                                       threshold.to_string(6) + "; raise the precision or change the tolerance");
        }
        if (lambda.sign() > 0) {
            ++out.inertia.positive;
        } else {
            ++out.inertia.negative;
        }
        const double m = mag.to_double();
        if (!out.tolerance_margin || m < *out.tolerance_margin) out.tolerance_margin = m;
    }
    return out;
}

ApproxInertia inertia(const HermitianForm& h, double tolerance) {
    if (const auto* e = std::get_if<ExactForm>(&h)) return ApproxInertia{inertia_exact(*e), std::nullopt};
    return inertia_approx(std::get<ApproxForm>(h), tolerance);
}

InertiaResult signature_and_nullity(const CComplexData& cc, const TorusPoint& omega, const EvalOptions& opts) {
    const HermitianForm h = hermitian_form(cc, omega, opts);
    const ApproxInertia in = inertia(h, opts.tolerance);
    InertiaResult r;
    r.omega = omega;
    r.signature = in.inertia.signature();
    r.matrix_nullity = in.inertia.zero;
    r.eta = in.inertia.zero + static_cast<std::size_t>(cc.beta0) - 1;
    r.backend = form_backend(h);
    r.tolerance_margin = in.tolerance_margin;
    return r;
}

namespace {

void fill_row(const CComplexData& cc, ProfileRow& row, const EvalOptions& opts) {
    try {
        row.result = signature_and_nullity(cc, row.omega, opts);
    } catch (const IndeterminateInertia& e) {
        row.error = e.what();
        row.indeterminate = true;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
}

std::vector<ProfileRow> empty_rows(const std::vector<TorusPoint>& grid) {
    std::vector<ProfileRow> rows;
    rows.reserve(grid.size());
    for (const auto& w : grid) rows.push_back(ProfileRow{w, std::nullopt, {}, false});
    return rows;
}

}  // namespace

std::vector<ProfileRow> torus_profile(const CComplexData& cc, const std::vector<TorusPoint>& grid,
                                      const EvalOptions& opts) {
    require_valid(cc);
    std::vector<ProfileRow> rows = empty_rows(grid);
    const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) fill_row(cc, rows[static_cast<std::size_t>(i)], opts);
    return rows;
}

std::vector<ProfileRow> torus_profile_serial(const CComplexData& cc, const std::vector<TorusPoint>& grid,
                                             const EvalOptions& opts) {
    require_valid(cc);
    std::vector<ProfileRow> rows = empty_rows(grid);
    for (auto& row : rows) fill_row(cc, row, opts);
    return rows;
}

std::vector<TorusPoint> generic_sample_points(int mu, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TorusPoint> out;
    out.reserve(count);
    for (long p = 53; out.size() < count; ++p) {
        if (prime_power_base(p) != p) continue;
        std::uniform_int_distribution<long> pick(1, p - 1);
        std::vector<std::pair<long, long>> kn;
        for (int i = 0; i < mu; ++i) kn.emplace_back(pick(rng), p);
        out.push_back(TorusPoint::roots(kn));
    }
    return out;
}

AlexanderNullity alexander_nullity(const CComplexData& cc, const AlexanderOptions& opts) {
    require_valid(cc);
    AlexanderNullity out;
    if (cc.beta0 == 1) {
        const std::size_t rank = rank_over_fraction_field(symbolic_form(cc));
        out.value = static_cast<std::size_t>(cc.g) - rank;
        return out;
    }
    out.sampled = true;
    out.samples = opts.samples;
    std::optional<std::size_t> best;
    for (const auto& w : generic_sample_points(cc.mu, opts.samples, opts.seed)) {
        const std::size_t eta = signature_and_nullity(cc, w).eta;
        if (!best || eta < *best) best = eta;
    }
    out.value = best.value_or(static_cast<std::size_t>(cc.g) + static_cast<std::size_t>(cc.beta0) - 1);
    return out;
}

}  // namespace colsig
