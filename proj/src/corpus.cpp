#include "colsig/corpus.hpp"

namespace colsig {

namespace {

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

TorusPoint minus_one(int mu) { return TorusPoint::diagonal(make_root(1, 2), mu); }

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;

    for (int m = 1; m <= 4; ++m) {
        out.push_back({"unlink" + std::to_string(m), unlink_ccomplex(m),
                       "m disjoint disks; no first homology",
                       {{minus_one(1), 0, static_cast<std::size_t>(m - 1), "H is empty, so eta = beta0 - 1"}}});
    }

    const IntMatrix hopf_seifert = IntMatrix::from_rows({{1}});
    out.push_back({"hopf", CComplexData::from_seifert_matrix(hopf_seifert, 1, 2),
                   "Hopf link as one color, bounding a once-twisted annulus; Seifert matrix (1)",
                   {{minus_one(1), 1, 0, "H(-1) = (4)"}}});

    CComplexData hopf2;
    hopf2.mu = 2;
    hopf2.g = 0;
    hopf2.beta0 = 1;
    hopf2.components_per_color = {1, 1};
    hopf2.linking = {{0, 1}, {1, 0}};
    hopf2.half_matrices[0b00] = IntMatrix(0, 0);
    hopf2.half_matrices[0b10] = IntMatrix(0, 0);
    out.push_back({"hopf2", hopf2, "Hopf link with two colors: two disks meeting in one clasp, contractible",
                   {{minus_one(2), 0, 0, "H is empty and the C-complex is connected"}}});

    CComplexData clasped;
    clasped.mu = 2;
    clasped.g = 1;
    clasped.beta0 = 1;
    clasped.components_per_color = {1, 1};
    clasped.linking = {{0, 2}, {2, 0}};
    clasped.half_matrices[0b00] = IntMatrix::from_rows({{-1}});
    clasped.half_matrices[0b10] = IntMatrix::from_rows({{0}});
    out.push_back({"clasped-disks", clasped,
                   "torus link T(2,4) with two colors: two disks joined by two clasps; the loop through both "
                   "clasps generates H1",
                   {{minus_one(2), -1, 0, "H(-1,-1) = (-8)"}}});

    const IntMatrix trefoil = IntMatrix::from_rows({{-1, 1}, {0, -1}});
    out.push_back({"trefoil", CComplexData::from_seifert_matrix(trefoil),
                   "trefoil Seifert matrix from its genus-one Seifert surface",
                   {{minus_one(1), -2, 0, "H(-1) = [[-4, 2], [2, -4]]"},
                    {TorusPoint::roots({{1, 6}}), -1, 1, "Alexander polynomial t^2 - t + 1 vanishes at zeta_6"}}});

    const IntMatrix fig8 = IntMatrix::from_rows({{-1, 1}, {0, 1}});
    out.push_back({"figure-eight", CComplexData::from_seifert_matrix(fig8),
                   "figure-eight Seifert matrix from its genus-one Seifert surface",
                   {{minus_one(1), 0, 0, "H(-1) = [[-4, 2], [2, 4]]"}}});

    out.push_back({"genus2-synthetic", CComplexData::from_seifert_matrix(block_sum(trefoil, trefoil)),
                   "block sum of two trefoil Seifert matrices (connected sum of two trefoils)",
                   {{minus_one(1), -4, 0, "twice the trefoil value"}}});

    const IntMatrix stab = IntMatrix::from_rows({{0, 1}, {0, 0}});
    out.push_back({"trefoil-stabilized", CComplexData::from_seifert_matrix(block_sum(trefoil, stab)),
                   "trefoil Seifert matrix plus a stabilizing block (0 1; 0 0); the same knot",
                   {{minus_one(1), -2, 0, "stabilization adds a hyperbolic summand"},
                    {TorusPoint::roots({{1, 6}}), -1, 1, "as for the trefoil"}}});
    return out;
}

}  // namespace

CComplexData unlink_ccomplex(int m) {
    CComplexData cc = CComplexData::from_seifert_matrix(IntMatrix(0, 0), m, m);
    return cc;
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

std::optional<CorpusEntry> corpus_entry(const std::string& name) {
    for (const auto& e : corpus()) {
        if (e.name == name) return e;
    }
    return std::nullopt;
}

}  // namespace colsig
