#pragma once

// Random inputs shared by the unit tests and the acceptance binary.

#include "colsig/ccomplex.hpp"
#include "colsig/plumbing.hpp"

#include <random>

namespace gen {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline colsig::IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t g, long bound) {
    colsig::IntMatrix m(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) m(i, j) = uniform(rng, -bound, bound);
    return m;
}

/// A structurally valid C-complex; the matrices need not come from a link.
inline colsig::CComplexData random_ccomplex(std::mt19937_64& rng, int g, int mu, long bound = 2) {
    colsig::CComplexData cc;
    cc.mu = mu;
    cc.g = g;
    cc.beta0 = static_cast<int>(uniform(rng, 1, 2));
    cc.components_per_color.assign(static_cast<std::size_t>(mu), 1);
    for (auto& c : cc.components_per_color) c = static_cast<int>(uniform(rng, 1, 2));
    cc.linking.assign(static_cast<std::size_t>(mu), std::vector<long long>(static_cast<std::size_t>(mu), 0));
    for (int i = 0; i < mu; ++i)
        for (int j = i + 1; j < mu; ++j) cc.linking[i][j] = cc.linking[j][i] = uniform(rng, -2, 2);
    for (colsig::SignMask eps = 0; eps < (1u << mu); eps += 2) {
        cc.half_matrices[eps] = random_int_matrix(rng, static_cast<std::size_t>(g), bound);
    }
    return cc;
}

/// Gaussian rational a + b i in Q(zeta_4).
inline colsig::CyclotomicScalar gaussian(const std::shared_ptr<const colsig::CyclotomicRing>& ring, const mpq_class& a,
                                         const mpq_class& b) {
    using colsig::CyclotomicScalar;
    return CyclotomicScalar::rational(ring, a) +
           CyclotomicScalar::rational(ring, b) * CyclotomicScalar::zeta_power(ring, 1);
}

inline mpq_class small_rational(std::mt19937_64& rng, long bound = 6) {
    return mpq_class(uniform(rng, -bound, bound), uniform(rng, 1, 3));
}

/// Random Hermitian matrix over Q(i). Kinds: 0 generic, 1 rank deficient
/// B^* D B, 2 zero diagonal.
inline colsig::ExactForm random_hermitian(std::mt19937_64& rng, std::size_t g, int kind) {
    const auto ring = colsig::CyclotomicRing::get(4);
    colsig::ExactForm h;
    h.size = g;
    h.ring = ring;
    h.entries.assign(g * g, colsig::CyclotomicScalar(ring));
    if (kind == 1) {
        // H = B^* D B with B of shape k x g; inertia of D restricted by rank.
        const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(g)));
        std::vector<colsig::CyclotomicScalar> b(k * g, colsig::CyclotomicScalar(ring));
        for (auto& x : b) x = gaussian(ring, uniform(rng, -2, 2), uniform(rng, -2, 2));
        std::vector<long> d(k);
        for (auto& x : d) x = uniform(rng, -3, 3);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) {
                colsig::CyclotomicScalar s(ring);
                for (std::size_t r = 0; r < k; ++r) {
                    s += b[r * g + i].conj() * b[r * g + j] * colsig::CyclotomicScalar::integer(ring, d[r]);
                }
                h(i, j) = s;
            }
        return h;
    }
    for (std::size_t i = 0; i < g; ++i) {
        h(i, i) = kind == 2 ? colsig::CyclotomicScalar(ring)
                            : colsig::CyclotomicScalar::rational(ring, small_rational(rng));
        for (std::size_t j = i + 1; j < g; ++j) {
            const bool zero = uniform(rng, 0, 3) == 0;
            h(i, j) = zero ? colsig::CyclotomicScalar(ring) : gaussian(ring, small_rational(rng), small_rational(rng));
            h(j, i) = h(i, j).conj();
        }
    }
    return h;
}

inline colsig::PlumbingGraph random_graph(std::mt19937_64& rng, int vertices, int edges) {
    colsig::PlumbingGraph g;
    for (int v = 0; v < vertices; ++v) {
        g.add_vertex({"F" + std::to_string(v + 1), uniform(rng, 0, 2), uniform(rng, 0, 3)});
    }
    if (vertices < 2) return g;
    for (int e = 0; e < edges; ++e) {
        const int u = static_cast<int>(uniform(rng, 0, vertices - 1));
        int v = static_cast<int>(uniform(rng, 0, vertices - 2));
        if (v >= u) ++v;
        g.add_edge(u, v, uniform(rng, 0, 1) ? 1 : -1);
    }
    return g;
}

}  // namespace gen
