#pragma once

// Bundled example C-complexes with hand-checked invariant values.

#include "colsig/ccomplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace colsig {

struct KnownValue {
    TorusPoint omega;
    int signature;
    std::size_t eta;
    std::string source;  // how the value was obtained
};

struct CorpusEntry {
    std::string name;
    CComplexData cc;
    std::string provenance;
    std::vector<KnownValue> known;
};

const std::vector<CorpusEntry>& corpus();

/// nullopt for an unknown name.
std::optional<CorpusEntry> corpus_entry(const std::string& name);

/// mu = 1, g = 0 C-complex of the m-component unlink (m disjoint disks).
CComplexData unlink_ccomplex(int m);

}  // namespace colsig
