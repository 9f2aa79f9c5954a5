// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include "colsig/bounds.hpp"
#include "colsig/corpus.hpp"
#include "colsig/inertia.hpp"
#include "colsig/omega.hpp"
#include "colsig/plumbing.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace colsig;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects the first few failures of a criterion.
class Tally {
public:
    void check(bool cond, const std::string& what) {
        ++checks_;
        if (cond) return;
        ++failed_;
        if (failed_ <= 3) msgs_ << (failed_ > 1 ? "; " : "") << what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failed_ == 0) return {true, summary};
        std::ostringstream os;
        os << failed_ << "/" << checks_ << " checks failed: " << msgs_.str();
        return {false, os.str()};
    }

private:
    long checks_ = 0, failed_ = 0;
    std::ostringstream msgs_;
};

const TorusPoint kMinusOne = TorusPoint::roots({{1, 2}});

Outcome hopf_values() {
    Tally t;
    const auto cc = corpus_entry("hopf")->cc;
    for (auto b : {Backend::Exact, Backend::Approx}) {
        EvalOptions o;
        o.backend = b;
        const auto r = signature_and_nullity(cc, kMinusOne, o);
        t.check(r.backend == b, "backend not honoured");
        t.check(std::abs(r.signature) == 1, "|sigma(-1)| = " + std::to_string(std::abs(r.signature)));
        t.check(r.eta == 0, "eta(-1) = " + std::to_string(r.eta));
    }
    return t.outcome("|sigma(-1)| = 1, eta(-1) = 0 in exact and approx backends");
}

Outcome unlink_values() {
    Tally t;
    std::size_t points = 0;
    for (int m = 1; m <= 4; ++m) {
        const auto cc = unlink_ccomplex(m);
        const auto grid = default_grid(cc.mu);
        points += grid.size();
        for (const auto& row : torus_profile(cc, grid)) {
            t.check(row.result.has_value(), "m=" + std::to_string(m) + " " + row.omega.to_string() + ": " + row.error);
            if (!row.result) continue;
            t.check(row.result->signature == 0 && row.result->eta == static_cast<std::size_t>(m - 1),
                    "m=" + std::to_string(m) + " at " + row.omega.to_string());
        }
    }
    return t.outcome("sigma = 0, eta = m-1 for m = 1..4 on " + std::to_string(points) + " grid points");
}

Outcome sharpness() {
    Tally t;
    const auto r = signature_and_nullity(corpus_entry("hopf")->cc, kMinusOne);
    const auto b = surface_bound_check(r, SurfaceProfile{{1}, 1, 0}, classify(kMinusOne));
    t.check(b.lhs == 1 && b.rhs == 1, "got " + std::to_string(b.lhs) + " <= " + std::to_string(b.rhs));
    t.check(b.satisfied && b.sharp() && b.applicable, "not satisfied, sharp and applicable");
    return t.outcome("Hopf annulus gives 1 <= 1 with equality");
}

long long at_one(const std::vector<long long>& coeffs) {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

Outcome cyclotomic_identities() {
    Tally t;
    for (long p : {2L, 3L, 5L, 7L}) {
        long n = 1;
        for (int e = 1; e <= 3; ++e) {
            n *= p;
            const auto v = augment(cyclotomic_polynomial(n));
            t.check(v == p, "Phi_" + std::to_string(n) + "(1) = " + v.get_str());
            t.check(at_one(oracle::cyclotomic_by_moebius(n)) == p, "oracle Phi_" + std::to_string(n));
        }
    }
    const long mixed[] = {6, 10, 12, 14, 15, 18, 20, 21, 22, 24, 26, 28, 30, 33, 35, 36, 42, 60, 105, 210};
    for (long n : mixed) {
        const auto v = augment(cyclotomic_polynomial(n));
        t.check(v == 1, "Phi_" + std::to_string(n) + "(1) = " + v.get_str());
        t.check(at_one(oracle::cyclotomic_by_moebius(n)) == 1, "oracle Phi_" + std::to_string(n));
    }
    return t.outcome("Phi_{p^e}(1) = p for 12 prime powers, Phi_n(1) = 1 for 20 mixed n");
}

Outcome classification_battery() {
    Tally t;
    const auto a = classify(TorusPoint::roots({{1, 4}, {1, 2}}));
    t.check(a.verdict == Verdict::NotConcordanceRoot && a.prime == 2L, "(i, -1) not certified in T_P with p = 2");

    const auto w = TorusPoint::roots({{1, 3}, {1, 2}});
    const auto cert = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 0, 2) - LaurentPoly::variable(2, 1);
    const auto b = classify(w, cert);
    t.check(b.verdict == Verdict::ConcordanceRoot, "(zeta3, -1) not a concordance root");
    t.check(b.certificate && verify_certificate(*b.certificate, w), "certificate does not verify");
    t.check(augment(cert) == 1, "certificate augmentation != 1");

    // (3+4i)/5 is not a root of unity; only an angle can represent it.
    const TorusPoint u({make_angle(std::atan2(4.0, 3.0)), make_root(1, 2)});
    const auto c = classify(u);
    t.check(c.verdict == Verdict::Unknown, "((3+4i)/5, -1) verdict " + to_string(c.verdict));
    t.check(!common_prime_power_prime(u).has_value(), "T_P test did not decline");
    return t.outcome("(i,-1) NotConcordanceRoot p=2; (zeta3,-1) certified; ((3+4i)/5,-1) Unknown");
}

oracle::CMatrix to_eigen(const ExactForm& h) {
    oracle::CMatrix m(static_cast<Eigen::Index>(h.size), static_cast<Eigen::Index>(h.size));
    for (std::size_t i = 0; i < h.size; ++i)
        for (std::size_t j = 0; j < h.size; ++j) {
            const auto a = h(i, j).to_approx(128);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {a.re.to_double(), a.im.to_double()};
        }
    return m;
}

Outcome inertia_oracle() {
    Tally t;
    std::mt19937_64 rng(20240601);
    const int n = 1000;
    for (int trial = 0; trial < n; ++trial) {
        const auto g = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        const auto h = gen::random_hermitian(rng, g, trial % 3);
        const Inertia ex = inertia_exact(h);
        const Inertia ref = oracle::eigen_inertia(to_eigen(h));
        t.check(ex == ref, "trial " + std::to_string(trial) + " inertia mismatch");
        const long sigma = static_cast<long>(ex.positive) - static_cast<long>(ex.negative);
        t.check((sigma - static_cast<long>(g - ex.zero)) % 2 == 0, "parity fails at trial " + std::to_string(trial));
    }
    return t.outcome(std::to_string(n) + " random Hermitian matrices (g <= 8) match the eigenvalue oracle; parity holds");
}

Outcome specialization() {
    Tally t;
    std::mt19937_64 rng(777);
    const int complexes = 200;
    const std::size_t per = 8;
    std::size_t total = 0, equal = 0;
    for (int trial = 0; trial < complexes; ++trial) {
        const int g = static_cast<int>(gen::uniform(rng, 1, 6)), mu = static_cast<int>(gen::uniform(rng, 1, 3));
        const auto cc = gen::random_ccomplex(rng, g, mu);
        const auto sym = symbolic_form(cc);
        const std::size_t rank = rank_over_fraction_field(sym);
        t.check(rank >= oracle::evaluated_rank(sym, rng), "generic rank below an evaluated rank");
        const std::size_t generic = static_cast<std::size_t>(g) - rank;
        for (const auto& w : generic_sample_points(mu, per, 1000 + static_cast<std::uint64_t>(trial))) {
            const auto hf = hermitian_form(cc, w);
            const auto& h = std::get<ExactForm>(hf);
            bool same = true;
            for (std::size_t i = 0; i < h.size; ++i)
                for (std::size_t j = 0; j < h.size; ++j) same = same && evaluate_exact(sym(i, j), w, h.ring) == h(i, j);
            t.check(same, "H(omega) differs from evaluated H(t) at " + w.to_string());
            const auto in = inertia_exact(h);
            t.check(in.zero >= generic, "nullity below g - rank at " + w.to_string());
            ++total;
            if (in.zero == generic) ++equal;
        }
    }
    const double frac = static_cast<double>(equal) / static_cast<double>(total);
    t.check(frac >= 0.9, "equality at only " + std::to_string(frac));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d complexes, %zu points: coherent; nullity = g - rank at %.1f%% (>= 90%%)",
                  complexes, total, 100.0 * frac);
    return t.outcome(buf);
}

Outcome conjugation() {
    Tally t;
    std::size_t n = 0;
    for (const auto& e : corpus()) {
        const auto grid = default_grid(e.cc.mu);
        std::vector<TorusPoint> conj;
        for (const auto& w : grid) conj.push_back(w.conjugate());
        const auto a = torus_profile(e.cc, grid), b = torus_profile(e.cc, conj);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            ++n;
            const bool ok = a[k].result && b[k].result && a[k].result->signature == b[k].result->signature &&
                            a[k].result->eta == b[k].result->eta;
            t.check(ok, e.name + " at " + grid[k].to_string());
        }
    }
    return t.outcome("sigma and eta agree at omega and its conjugate on " + std::to_string(n) + " corpus points");
}

Outcome plumbing() {
    Tally t;
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = gen::random_graph(rng, static_cast<int>(gen::uniform(rng, 1, 6)),
                                         static_cast<int>(gen::uniform(rng, 0, 10)));
        t.check(static_cast<long>(kernel_basis(g).size()) == g.total_boundary(), "kernel size at trial " +
                                                                                     std::to_string(trial));
        // Balanced iff every pair's signed count vanishes, tallied from the raw edge list.
        std::map<std::pair<int, int>, long> count;
        for (const auto& e : g.edges()) count[{e.u, e.v}] += e.sign;
        bool zero = true;
        for (const auto& [k, v] : count) zero = zero && v == 0;
        t.check(is_balanced(g) == zero, "is_balanced disagrees at trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(gen::uniform(rng, 2, 5));
        const auto a = gen::random_graph(rng, n, static_cast<int>(gen::uniform(rng, 0, 8)));
        PlumbingGraph b;
        for (const auto& v : a.vertices()) b.add_vertex({v.label, gen::uniform(rng, 0, 2), v.boundary});
        const auto w = weight_matrix(a);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                for (long k = gen::uniform(rng, 0, 2); k > 0; --k) {
                    b.add_edge(u, v, 1);
                    b.add_edge(u, v, -1);
                }
                for (long k = 0; k < std::abs(w[u][v]); ++k) b.add_edge(u, v, w[u][v] > 0 ? 1 : -1);
            }
        t.check(is_balanced(doubled_graph(a, b)), "doubled graph unbalanced at trial " + std::to_string(trial));
    }
    return t.outcome("500 random graphs: kernel size = sum n_F, balance agrees; 200 doubled graphs balanced");
}

Outcome obstruction() {
    Tally t;
    for (const auto& e : corpus()) {
        const auto r = concordance_obstruction(e.cc, e.cc, default_grid(e.cc.mu));
        t.check(r.verdict == ObstructionVerdict::Consistent, e.name + " obstructed against itself");
    }
    const auto r = concordance_obstruction(corpus_entry("hopf")->cc, corpus_entry("unlink2")->cc, default_grid(1));
    t.check(r.verdict == ObstructionVerdict::Obstructed, "Hopf vs 2-unlink not obstructed");
    bool eta_witness = false;
    for (const auto& row : r.rows) {
        if (row.omega == kMinusOne && row.applicable && row.left && row.right && row.left->eta != row.right->eta)
            eta_witness = true;
    }
    t.check(eta_witness, "no eta witness at -1");
    bool listed = false;
    for (const auto& w : r.witnesses) listed = listed || w == kMinusOne;
    t.check(listed, "-1 not among the witnesses");
    return t.outcome("corpus self-comparisons Consistent; Hopf vs 2-unlink Obstructed, eta witness at -1");
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no runtime bound
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "hopf-values", 1, hopf_values},
        {2, "unlink-values", 5, unlink_values},
        {3, "sharpness", 0, sharpness},
        {4, "cyclotomic-identities", 1, cyclotomic_identities},
        {5, "classification-battery", 0, classification_battery},
        {6, "inertia-oracle", 60, inertia_oracle},
        {7, "specialization-coherence", 120, specialization},
        {8, "conjugation-invariance", 0, conjugation},
        {9, "plumbing-suite", 10, plumbing},
        {10, "obstruction-soundness", 0, obstruction},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.ok = false;
            o.detail += " [over time limit]";
        }
        if (!o.ok) ++failures;
        char timing[64];
        if (c.limit_seconds > 0) {
            std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit_seconds);
        } else {
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        }
        std::printf("%s %2d %-26s (%s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, timing, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
