#pragma once

// JSON encodings (schema version 1) and the textual grid grammar.
//
// Grid grammar:
//   grid     := "" | "none" | family | point (";" point)*
//   family   := "prime-powers:p<=P,e<=E[,max<=M]" | "equispaced:N"
//   point    := parse_omega syntax, e.g. "root:1/3,angle:2.5"
// prime-powers takes every primitive p^e-th root (p <= P prime, 1 <= e <= E)
// with one shared prime across coordinates, evenly subsampled to at most M
// points (default 256). equispaced:N gives the diagonal points zeta_{N+1}^k
// for k = 1..N.

#include "colsig/bounds.hpp"
#include "colsig/ccomplex.hpp"
#include "colsig/inertia.hpp"
#include "colsig/laurent.hpp"
#include "colsig/omega.hpp"
#include "colsig/plumbing.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace colsig {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Rounds to 12 significant digits so emitted floats are stable.
double round12(double x);

json to_json(const LaurentPoly& p);
/// Throws ValidationError. num_vars is used only for an empty term list.
LaurentPoly poly_from_json(const json& j, int num_vars = 1);

json to_json(const TorusPoint& w);
TorusPoint point_from_json(const json& j);

json to_json(const CComplexData& cc);
/// Accepts only eps_1 = '+' matrix keys; checks the schema field when present.
/// Throws ValidationError on malformed input (the data is not validated here).
CComplexData ccomplex_from_json(const json& j);

json to_json(const InertiaResult& r);
json to_json(const OmegaClassification& c);
json to_json(const BoundCheck& b);
json to_json(const ObstructionReport& r);
json to_json(const std::vector<ProfileRow>& rows, const std::vector<OmegaClassification>& classifications);

json to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const json& j);
json to_json(const FormalCombination& c, const std::vector<std::string>& owner_labels);

/// Reads and parses a JSON file. Throws ValidationError.
json read_json_file(const std::string& path);

/// Points for a grid spec in mu variables. Throws ValidationError.
std::vector<TorusPoint> parse_grid(const std::string& spec, int mu);

/// CSV for a single-link profile: omega,signature,nullity,eta,backend,applicable,error.
std::string profile_csv(const std::vector<ProfileRow>& rows, const std::vector<OmegaClassification>& classifications);

}  // namespace colsig
