#include "colsig/ccomplex.hpp"

#include "colsig/errors.hpp"

#include <algorithm>

namespace colsig {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

std::string sign_string(SignMask eps, int mu) {
    std::string s(static_cast<std::size_t>(mu), '+');
    for (int i = 0; i < mu; ++i) {
        if (eps & (1u << i)) s[i] = '-';
    }
    return s;
}

SignMask parse_sign_string(const std::string& s) {
    if (s.empty() || s.size() > kMaxColors) throw ValidationError("bad sign string '" + s + "'");
    SignMask m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '-') {
            m |= 1u << i;
        } else if (s[i] != '+') {
            throw ValidationError("bad sign string '" + s + "'");
        }
    }
    return m;
}

IntMatrix CComplexData::matrix(SignMask eps) const {
    if (eps & 1u) {
        const SignMask flipped = ~eps & ((1u << mu) - 1);
        return half_matrices.at(flipped).transposed();
    }
    return half_matrices.at(eps);
}

CComplexData CComplexData::from_seifert_matrix(const IntMatrix& seifert, int beta0, int components) {
    CComplexData cc;
    cc.mu = 1;
    cc.g = static_cast<int>(seifert.rows());
    cc.beta0 = beta0;
    cc.components_per_color = {components};
    cc.linking = {{0}};
    cc.half_matrices[0] = seifert;
    return cc;
}

std::string to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::Shape: return "shape";
        case Violation::Kind::Family: return "family";
        case Violation::Kind::Metadata: return "metadata";
    }
    return "?";
}

std::vector<Violation> validate(const CComplexData& cc) {
    std::vector<Violation> out;
    auto add = [&](Violation::Kind k, std::string msg) { out.push_back({k, std::move(msg)}); };

    if (cc.mu < 1 || cc.mu > kMaxColors) {
        add(Violation::Kind::Metadata, "mu must lie in [1, " + std::to_string(kMaxColors) + "]");
        return out;
    }
    if (cc.g < 0) add(Violation::Kind::Shape, "g must be nonnegative");
    if (cc.beta0 < 1) add(Violation::Kind::Metadata, "beta0 must be at least 1");

    const std::size_t expected = std::size_t{1} << (cc.mu - 1);
    if (cc.half_matrices.size() != expected) {
        add(Violation::Kind::Family, "expected " + std::to_string(expected) + " matrices with eps_1 = +, got " +
                                         std::to_string(cc.half_matrices.size()));
    }
    for (const auto& [eps, m] : cc.half_matrices) {
        if (eps >> cc.mu) {
            add(Violation::Kind::Family, "sign vector outside {+-}^mu");
            continue;
        }
        if (eps & 1u) add(Violation::Kind::Family, "matrix keyed by " + sign_string(eps, cc.mu) + " has eps_1 = -");
        if (cc.g >= 0 && (m.rows() != static_cast<std::size_t>(cc.g) || m.cols() != static_cast<std::size_t>(cc.g))) {
            add(Violation::Kind::Shape, "matrix " + sign_string(eps, cc.mu) + " is " + std::to_string(m.rows()) + "x" +
                                            std::to_string(m.cols()) + ", expected g x g with g = " +
                                            std::to_string(cc.g));
        }
    }

    if (cc.components_per_color.size() != static_cast<std::size_t>(cc.mu)) {
        add(Violation::Kind::Metadata, "components_per_color must have mu entries");
    } else if (std::any_of(cc.components_per_color.begin(), cc.components_per_color.end(),
                           [](int c) { return c < 1; })) {
        add(Violation::Kind::Metadata, "components_per_color entries must be positive");
    }

    const auto mu = static_cast<std::size_t>(cc.mu);
    if (cc.linking.size() != mu ||
        std::any_of(cc.linking.begin(), cc.linking.end(), [&](const auto& r) { return r.size() != mu; })) {
        add(Violation::Kind::Metadata, "linking must be a mu x mu matrix");
    } else {
        for (std::size_t i = 0; i < mu; ++i) {
            if (cc.linking[i][i] != 0) add(Violation::Kind::Metadata, "linking matrix has nonzero diagonal");
            for (std::size_t j = i + 1; j < mu; ++j) {
                if (cc.linking[i][j] != cc.linking[j][i]) add(Violation::Kind::Metadata, "linking matrix is not symmetric");
            }
        }
    }
    return out;
}

void require_valid(const CComplexData& cc) {
    const auto v = validate(cc);
    if (v.empty()) return;
    std::string msg = "invalid C-complex:";
    for (const auto& x : v) msg += " [" + to_string(x.kind) + "] " + x.message + ";";
    throw ValidationError(msg);
}

LaurentMatrix symbolic_form(const CComplexData& cc) {
    require_valid(cc);
    const auto g = static_cast<std::size_t>(cc.g);
    LaurentMatrix h(g, g, cc.mu);
    const SignMask count = 1u << cc.mu;
    for (SignMask eps = 0; eps < count; ++eps) {
        // prod_i (1 - t_i^{-eps_i})
        LaurentPoly coeff = LaurentPoly::constant(cc.mu, 1);
        for (int i = 0; i < cc.mu; ++i) {
            const int e = (eps & (1u << i)) ? 1 : -1;  // -eps_i
            coeff *= LaurentPoly::constant(cc.mu, 1) - LaurentPoly::variable(cc.mu, i, e);
        }
        const IntMatrix a = cc.matrix(eps);
        for (std::size_t r = 0; r < g; ++r)
            for (std::size_t c = 0; c < g; ++c)
                if (a(r, c) != 0) h(r, c) += coeff.scaled(static_cast<long>(a(r, c)));
    }
    return h;
}

std::size_t form_size(const HermitianForm& h) {
    return std::visit([](const auto& f) { return f.size; }, h);
}

Backend form_backend(const HermitianForm& h) {
    return std::holds_alternative<ExactForm>(h) ? Backend::Exact : Backend::Approx;
}

bool is_hermitian(const HermitianForm& h, double tolerance) {
    if (const auto* e = std::get_if<ExactForm>(&h)) {
        for (std::size_t i = 0; i < e->size; ++i)
            for (std::size_t j = i; j < e->size; ++j)
                if (!((*e)(i, j) == (*e)(j, i).conj())) return false;
        return true;
    }
    const auto& a = std::get<ApproxForm>(h);
    BigFloat scale(a.precision_bits);
    for (const auto& x : a.entries) scale = std::max(scale, x.abs());
    const BigFloat limit = scale * BigFloat(tolerance, a.precision_bits);
    for (std::size_t i = 0; i < a.size; ++i)
        for (std::size_t j = i; j < a.size; ++j)
            if ((a(i, j) - a(j, i).conj()).abs() > limit) return false;
    return true;
}

ApproxForm to_approx(const ExactForm& h, unsigned precision_bits) {
    ApproxForm out;
    out.size = h.size;
    out.precision_bits = precision_bits;
    out.entries.reserve(h.entries.size());
    for (const auto& x : h.entries) out.entries.push_back(x.to_approx(precision_bits));
    return out;
}

HermitianForm hermitian_form(const CComplexData& cc, const TorusPoint& omega, const EvalOptions& opts) {
    require_valid(cc);
    if (omega.num_vars() != cc.mu) {
        throw DimensionError("point has " + std::to_string(omega.num_vars()) + " coordinates, C-complex has mu = " +
                             std::to_string(cc.mu));
    }
    const Backend backend = opts.backend.value_or(omega.is_exact() ? Backend::Exact : Backend::Approx);
    if (backend == Backend::Exact && !omega.is_exact()) {
        throw ConfigurationError("exact backend requested at a non-exact point");
    }
    const auto g = static_cast<std::size_t>(cc.g);
    const SignMask count = 1u << cc.mu;

    if (backend == Backend::Exact) {
        const long n = common_field(omega);
        auto ring = CyclotomicRing::get(n);
        std::vector<long> power(static_cast<std::size_t>(cc.mu));
        for (int i = 0; i < cc.mu; ++i) {
            const auto& r = std::get<RootOfUnity>(omega[i]);
            power[i] = r.k * (n / r.n);
        }
        ExactForm h{g, ring, std::vector<CyclotomicScalar>(g * g, CyclotomicScalar(ring))};
        const auto one = CyclotomicScalar::integer(ring, 1);
        for (SignMask eps = 0; eps < count; ++eps) {
            CyclotomicScalar coeff = one;
            for (int i = 0; i < cc.mu; ++i) {
                const long sign = (eps & (1u << i)) ? -1 : 1;
                coeff = coeff * (one - CyclotomicScalar::zeta_power(ring, -sign * power[i]));
            }
            const IntMatrix a = cc.matrix(eps);
            for (std::size_t r = 0; r < g; ++r)
                for (std::size_t c = 0; c < g; ++c)
                    if (a(r, c) != 0) h(r, c) += coeff.scaled(static_cast<long>(a(r, c)));
        }
        return h;
    }

    const unsigned prec = opts.precision_bits;
    std::vector<BigFloat> angles;
    for (const auto& c : omega.coords()) angles.push_back(coord_angle(c, prec));
    ApproxForm h{g, prec, std::vector<ApproxComplex>(g * g, ApproxComplex(prec))};
    const ApproxComplex one(BigFloat(1L, prec), BigFloat(prec));
    for (SignMask eps = 0; eps < count; ++eps) {
        ApproxComplex coeff = one;
        for (int i = 0; i < cc.mu; ++i) {
            const long sign = (eps & (1u << i)) ? -1 : 1;
            coeff *= one - ApproxComplex::unit(angles[i] * BigFloat(-sign, prec));
        }
        const IntMatrix a = cc.matrix(eps);
        for (std::size_t r = 0; r < g; ++r)
            for (std::size_t c = 0; c < g; ++c)
                if (a(r, c) != 0) h(r, c) += coeff.scaled(BigFloat(static_cast<long>(a(r, c)), prec));
    }
    return h;
}

}  // namespace colsig
