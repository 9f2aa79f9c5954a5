#include "colsig/bounds.hpp"

#include "colsig/errors.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace colsig {

namespace {

long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

}  // namespace

long cobordism_cost(const CobordismProfile& profile) {
    if (profile.double_points < 0) throw ConsistencyError("double point count must be nonnegative");
    if (profile.components < 1) throw ConsistencyError("a cobordism has at least one component");
    const long m = profile.components, c = profile.double_points;

    std::vector<std::pair<std::string, long>> values;
    if (profile.euler_characteristics) values.emplace_back("euler", -sum(*profile.euler_characteristics) + c);
    if (profile.betti_numbers) values.emplace_back("betti", sum(*profile.betti_numbers) - m + c);
    if (profile.genera) {
        if (!profile.boundary_left || !profile.boundary_right) {
            throw ConsistencyError("the genus encoding needs both boundary component counts");
        }
        values.emplace_back("genus", 2 * sum(*profile.genera) + *profile.boundary_left + *profile.boundary_right -
                                         2 * m + c);
    }
    if (values.empty()) throw ConsistencyError("cobordism profile has no surface data");
    for (const auto& [name, v] : values) {
        if (v != values.front().second) {
            throw ConsistencyError("encodings disagree: " + values.front().first + " gives " +
                                   std::to_string(values.front().second) + ", " + name + " gives " + std::to_string(v));
        }
    }
    return values.front().second;
}

BoundCheck genus_bound_check(const InertiaResult& left, const InertiaResult& right, const CobordismProfile& profile,
                             const OmegaClassification& classification) {
    if (left.omega.num_vars() != right.omega.num_vars()) throw DomainError("links have different numbers of colors");
    if (!(left.omega == right.omega)) throw DomainError("invariants were computed at different points");
    BoundCheck out;
    out.lhs = std::labs(left.signature - right.signature) +
              std::labs(static_cast<long>(left.eta) - static_cast<long>(right.eta));
    out.rhs = cobordism_cost(profile);
    out.satisfied = out.lhs <= out.rhs;
    out.applicable = classification.verdict == Verdict::NotConcordanceRoot;
    return out;
}

BoundCheck surface_bound_check(const InertiaResult& inv, const SurfaceProfile& profile,
                               const OmegaClassification& classification) {
    if (profile.betti_numbers.size() != static_cast<std::size_t>(inv.omega.num_vars())) {
        throw DomainError("surface profile needs one Betti number per color");
    }
    if (profile.components < 1 || profile.double_points < 0) throw DomainError("invalid surface profile");
    BoundCheck out;
    out.lhs = std::labs(inv.signature) + std::labs(static_cast<long>(inv.eta) - profile.components + 1);
    out.rhs = sum(profile.betti_numbers) + profile.double_points;
    out.satisfied = out.lhs <= out.rhs;
    out.applicable = classification.verdict == Verdict::NotConcordanceRoot;
    return out;
}

std::string to_string(ObstructionVerdict v) { return v == ObstructionVerdict::Obstructed ? "Obstructed" : "Consistent"; }

std::vector<TorusPoint> default_grid(int mu, std::size_t max_points) { return prime_power_grid(mu, 5, 3, max_points); }

std::vector<TorusPoint> prime_power_grid(int mu, long max_prime, int max_exponent, std::size_t max_points) {
    if (mu < 1) throw DomainError("mu must be positive");
    if (max_exponent < 1 || max_exponent > 20) throw DomainError("exponent bound must be in [1, 20]");
    std::vector<std::vector<RootOfUnity>> per_prime;
    for (long p = 2; p <= max_prime; ++p) {
        if (prime_power_base(p) != p) continue;
        std::vector<RootOfUnity> coords;
        long order = 1;
        for (int e = 1; e <= max_exponent; ++e) {
            if (order > 1000000 / p) throw DomainError("root order too large for a grid");
            order *= p;
            for (long k = 1; k < order; ++k) {
                if (k % p != 0) coords.push_back(RootOfUnity{k, order});
            }
        }
        per_prime.push_back(std::move(coords));
    }

    // Index space: concatenation over primes of the mu-fold products, in
    // big integers since the products overflow quickly.
    std::vector<mpz_class> block;
    mpz_class total = 0;
    for (const auto& coords : per_prime) {
        mpz_class b = 1;
        for (int i = 0; i < mu; ++i) b *= static_cast<unsigned long>(coords.size());
        block.push_back(b);
        total += b;
    }
    auto point_at = [&](mpz_class idx) {
        std::size_t which = 0;
        while (idx >= block[which]) idx -= block[which++];
        const auto& coords = per_prime[which];
        const auto size = static_cast<unsigned long>(coords.size());
        std::vector<TorusCoord> c(static_cast<std::size_t>(mu));
        for (int i = mu - 1; i >= 0; --i) {
            mpz_class digit = idx % size;
            c[static_cast<std::size_t>(i)] = coords[digit.get_ui()];
            idx /= size;
        }
        return TorusPoint(std::move(c));
    };

    std::vector<TorusPoint> out;
    if (total <= static_cast<unsigned long>(max_points)) {
        for (unsigned long i = 0; i < total.get_ui(); ++i) out.push_back(point_at(i));
    } else {
        for (std::size_t i = 0; i < max_points; ++i) {
            mpz_class idx = total * static_cast<unsigned long>(i);
            idx /= static_cast<unsigned long>(max_points);
            out.push_back(point_at(idx));
        }
    }
    return out;
}

ObstructionReport concordance_obstruction(const CComplexData& left, const CComplexData& right,
                                          const std::vector<TorusPoint>& grid, const EvalOptions& opts) {
    std::vector<OmegaClassification> cls;
    cls.reserve(grid.size());
    for (const auto& w : grid) cls.push_back(classify(w));
    return concordance_obstruction(left, right, grid, cls, opts);
}

ObstructionReport concordance_obstruction(const CComplexData& left, const CComplexData& right,
                                          const std::vector<TorusPoint>& grid,
                                          const std::vector<OmegaClassification>& classifications,
                                          const EvalOptions& opts) {
    require_valid(left);
    require_valid(right);
    if (left.mu != right.mu) throw DomainError("links have different numbers of colors");
    if (classifications.size() != grid.size()) throw DimensionError("one classification per grid point is required");

    ObstructionReport report;
    for (int i = 0; i < left.mu; ++i) {
        for (int j = i + 1; j < left.mu; ++j) {
            const long long a = left.linking[i][j], b = right.linking[i][j];
            if (a != b) report.linking_mismatches.push_back({i, j, a, b});
        }
    }

    const auto lp = torus_profile(left, grid, opts);
    const auto rp = torus_profile(right, grid, opts);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        ObstructionRow row;
        row.omega = grid[k];
        row.classification = classifications[k];
        row.left = lp[k].result;
        row.right = rp[k].result;
        row.applicable = classifications[k].verdict == Verdict::NotConcordanceRoot;
        if (!lp[k].error.empty() || !rp[k].error.empty()) {
            row.error = !lp[k].error.empty() ? "left: " + lp[k].error : "right: " + rp[k].error;
            row.indeterminate = lp[k].indeterminate || rp[k].indeterminate;
            row.satisfied = true;
            report.rows.push_back(std::move(row));
            continue;
        }
        row.lhs = std::labs(row.left->signature - row.right->signature) +
                  std::labs(static_cast<long>(row.left->eta) - static_cast<long>(row.right->eta));
        row.rhs = 0;
        row.satisfied = row.lhs <= row.rhs;
        if (!row.satisfied && row.applicable) report.witnesses.push_back(grid[k]);
        report.rows.push_back(std::move(row));
    }
    if (!report.witnesses.empty() || !report.linking_mismatches.empty()) {
        report.verdict = ObstructionVerdict::Obstructed;
    }
    return report;
}

std::string report_csv(const ObstructionReport& report) {
    std::ostringstream os;
    os << "omega,sigma_L,eta_L,sigma_L2,eta_L2,lhs,rhs,applicable,error\n";
    for (const auto& r : report.rows) {
        os << '"' << r.omega.to_string() << "\",";
        if (r.left && r.right) {
            os << r.left->signature << ',' << r.left->eta << ',' << r.right->signature << ',' << r.right->eta << ','
               << r.lhs << ',' << r.rhs << ',';
        } else {
            os << ",,,,,,";
        }
        os << (r.applicable ? "true" : "false") << ',';
        if (!r.error.empty()) os << '"' << r.error << '"';
        os << '\n';
    }
    return os.str();
}

}  // namespace colsig
