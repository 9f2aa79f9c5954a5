#include "colsig/io.hpp"

#include "colsig/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace colsig {

double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        throw ValidationError(std::string(what) + ": " + e.what());
    }
}

json optional_double(const std::optional<double>& v) { return v ? json(round12(*v)) : json(nullptr); }

void check_schema(const json& j) {
    if (j.is_object() && j.contains("schema") && j.at("schema") != kSchemaVersion) {
        throw ValidationError("unsupported schema version " + j.at("schema").dump());
    }
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        json coeff = c.fits_slong_p() ? json(c.get_si()) : json(c.get_str());
        out.push_back({{"exponents", e}, {"coeff", coeff}});
    }
    return out;
}

LaurentPoly poly_from_json(const json& j, int num_vars) {
    return guarded("polynomial", [&] {
        if (!j.is_array()) throw ValidationError("polynomial must be a list of {exponents, coeff} records");
        if (!j.empty()) num_vars = static_cast<int>(j.front().at("exponents").size());
        if (num_vars < 1) throw ValidationError("polynomial needs at least one variable");
        LaurentPoly p(num_vars);
        for (const auto& term : j) {
            auto e = term.at("exponents").get<Exponent>();
            if (static_cast<int>(e.size()) != num_vars) throw ValidationError("inconsistent exponent lengths");
            const auto& c = term.at("coeff");
            mpz_class coeff;
            if (c.is_number_integer()) {
                coeff = static_cast<long>(c.get<long long>());
            } else if (c.is_string()) {
                if (coeff.set_str(c.get<std::string>(), 10) != 0) throw ValidationError("bad integer coefficient");
            } else {
                throw ValidationError("coefficient must be an integer");
            }
            p.add_term(e, coeff);
        }
        return p;
    });
}

json to_json(const TorusPoint& w) {
    json coords = json::array();
    for (const auto& c : w.coords()) {
        if (const auto* r = std::get_if<RootOfUnity>(&c)) {
            coords.push_back({{"root", {r->k, r->n}}});
        } else {
            coords.push_back({{"angle", round12(std::get<AngleCoord>(c).angle)}});
        }
    }
    return {{"coords", coords}, {"text", w.to_string()}};
}

TorusPoint point_from_json(const json& j) {
    return guarded("torus point", [&] {
        std::vector<TorusCoord> coords;
        for (const auto& c : j.at("coords")) {
            if (c.contains("root")) {
                const auto& r = c.at("root");
                if (!r.is_array() || r.size() != 2) throw ValidationError("root must be [k, n]");
                try {
                    coords.emplace_back(make_root(r[0].get<long>(), r[1].get<long>()));
                } catch (const DomainError& e) {
                    throw ValidationError(e.what());
                }
            } else if (c.contains("angle")) {
                try {
                    coords.emplace_back(make_angle(c.at("angle").get<double>()));
                } catch (const DomainError& e) {
                    throw ValidationError(e.what());
                }
            } else {
                throw ValidationError("coordinate needs a root or an angle");
            }
        }
        if (coords.empty()) throw ValidationError("a torus point needs at least one coordinate");
        return TorusPoint(std::move(coords));
    });
}

json to_json(const CComplexData& cc) {
    json matrices = json::object();
    for (const auto& [eps, m] : cc.half_matrices) matrices[sign_string(eps, cc.mu)] = m.to_rows();
    return {{"schema", kSchemaVersion},
            {"mu", cc.mu},
            {"g", cc.g},
            {"beta0", cc.beta0},
            {"components_per_color", cc.components_per_color},
            {"linking", cc.linking},
            {"matrices", matrices}};
}

CComplexData ccomplex_from_json(const json& j) {
    return guarded("C-complex", [&] {
        if (!j.is_object()) throw ValidationError("C-complex must be a JSON object");
        check_schema(j);
        CComplexData cc;
        cc.mu = j.at("mu").get<int>();
        cc.g = j.at("g").get<int>();
        cc.beta0 = j.at("beta0").get<int>();
        if (cc.mu < 1 || cc.mu > kMaxColors) throw ValidationError("mu out of range");
        if (cc.g < 0) throw ValidationError("g must be nonnegative");
        cc.components_per_color = j.at("components_per_color").get<std::vector<int>>();
        cc.linking = j.at("linking").get<std::vector<std::vector<long long>>>();
        for (const auto& [key, rows] : j.at("matrices").items()) {
            const SignMask eps = parse_sign_string(key);
            if (static_cast<int>(key.size()) != cc.mu) throw ValidationError("sign string " + key + " has wrong length");
            if (eps & 1u) throw ValidationError("only matrices with a leading '+' are accepted, got " + key);
            const auto r = rows.get<std::vector<std::vector<long long>>>();
            IntMatrix m = r.empty() ? IntMatrix(0, 0) : IntMatrix::from_rows(r);
            cc.half_matrices.emplace(eps, std::move(m));
        }
        return cc;
    });
}

json to_json(const InertiaResult& r) {
    return {{"omega", to_json(r.omega)},
            {"signature", r.signature},
            {"nullity", r.matrix_nullity},
            {"eta", r.eta},
            {"backend", to_string(r.backend)},
            {"tolerance_margin", optional_double(r.tolerance_margin)}};
}

json to_json(const OmegaClassification& c) {
    return {{"verdict", to_string(c.verdict)},
            {"prime", c.prime ? json(*c.prime) : json(nullptr)},
            {"certificate", c.certificate ? to_json(*c.certificate) : json(nullptr)},
            {"notes", c.notes}};
}

json to_json(const BoundCheck& b) {
    return {{"lhs", b.lhs},
            {"rhs", b.rhs},
            {"satisfied", b.satisfied},
            {"sharp", b.sharp()},
            {"applicable", b.applicable}};
}

json to_json(const ObstructionReport& r) {
    json rows = json::array();
    std::size_t applicable = 0;
    for (const auto& row : r.rows) {
        if (row.applicable) ++applicable;
        json x = {{"omega", to_json(row.omega)},
                  {"verdict", to_string(row.classification.verdict)},
                  {"applicable", row.applicable},
                  {"lhs", row.lhs},
                  {"rhs", row.rhs},
                  {"satisfied", row.satisfied}};
        x["left"] = row.left ? to_json(*row.left) : json(nullptr);
        x["right"] = row.right ? to_json(*row.right) : json(nullptr);
        x["error"] = row.error.empty() ? json(nullptr) : json(row.error);
        rows.push_back(std::move(x));
    }
    json mismatches = json::array();
    for (const auto& m : r.linking_mismatches) {
        mismatches.push_back({{"colors", {m.i + 1, m.j + 1}}, {"left", m.left}, {"right", m.right}});
    }
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return {{"schema", kSchemaVersion},
            {"verdict", to_string(r.verdict)},
            {"summary", {{"points", r.rows.size()}, {"applicable", applicable}, {"witnesses", r.witnesses.size()}}},
            {"witnesses", witnesses},
            {"linking_mismatches", mismatches},
            {"rows", rows}};
}

json to_json(const std::vector<ProfileRow>& rows, const std::vector<OmegaClassification>& classifications) {
    json out = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        json x = row.result ? to_json(*row.result) : json{{"omega", to_json(row.omega)}};
        if (i < classifications.size()) {
            x["applicable"] = classifications[i].verdict == Verdict::NotConcordanceRoot;
        }
        x["error"] = row.error.empty() ? json(nullptr) : json(row.error);
        out.push_back(std::move(x));
    }
    return out;
}

json to_json(const PlumbingGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices()) {
        vertices.push_back({{"label", v.label}, {"genus", v.genus}, {"boundary", v.boundary}});
    }
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"sign", e.sign}});
    return {{"schema", kSchemaVersion}, {"vertices", vertices}, {"edges", edges}};
}

PlumbingGraph graph_from_json(const json& j) {
    return guarded("plumbing graph", [&] {
        check_schema(j);
        PlumbingGraph g;
        try {
            for (const auto& v : j.at("vertices")) {
                g.add_vertex({v.value("label", ""), v.value("genus", 0L), v.value("boundary", 0L)});
            }
            if (j.contains("edges")) {
                for (const auto& e : j.at("edges")) g.add_edge(e.at("u"), e.at("v"), e.at("sign"));
            }
        } catch (const DomainError& e) {
            throw ValidationError(e.what());
        }
        return g;
    });
}

json to_json(const FormalCombination& c, const std::vector<std::string>& owner_labels) {
    json terms = json::array();
    for (const auto& [sym, coeff] : c) {
        terms.push_back({{"kind", sym.kind == HomologySymbol::Kind::Boundary ? "boundary" : "meridian"},
                         {"owner", sym.owner},
                         {"index", sym.index},
                         {"coeff", coeff.get_str()}});
    }
    return {{"text", to_string(c, owner_labels)}, {"terms", terms}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

namespace {

long parse_long(const std::string& s, const std::string& context) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("expected an integer in '" + context + "', got '" + s + "'");
    }
}

std::vector<TorusPoint> parse_prime_powers(const std::string& body, int mu) {
    long max_p = -1, max_e = -1, max_points = 256;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto pos = item.find("<=");
        if (pos == std::string::npos) throw ValidationError("expected name<=value in '" + item + "'");
        const std::string name = item.substr(0, pos);
        const long v = parse_long(item.substr(pos + 2), item);
        if (name == "p") {
            max_p = v;
        } else if (name == "e") {
            max_e = v;
        } else if (name == "max") {
            max_points = v;
        } else {
            throw ValidationError("unknown prime-powers bound '" + name + "'");
        }
    }
    if (max_p < 2 || max_e < 1 || max_e > 20 || max_points < 1) {
        throw ValidationError("prime-powers needs p<=P with P >= 2 and e<=E with 1 <= E <= 20");
    }
    try {
        return prime_power_grid(mu, max_p, static_cast<int>(max_e), static_cast<std::size_t>(max_points));
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
}

}  // namespace

std::vector<TorusPoint> parse_grid(const std::string& spec, int mu) {
    if (mu < 1) throw ValidationError("mu must be positive");
    if (spec.empty() || spec == "none") return {};
    if (spec.rfind("prime-powers:", 0) == 0) return parse_prime_powers(spec.substr(13), mu);
    if (spec.rfind("equispaced:", 0) == 0) {
        const long n = parse_long(spec.substr(11), spec);
        if (n < 1 || n > 100000) throw ValidationError("equispaced needs 1 <= N <= 100000");
        std::vector<TorusPoint> out;
        for (long k = 1; k <= n; ++k) out.push_back(TorusPoint::diagonal(make_root(k, n + 1), mu));
        return out;
    }
    std::vector<TorusPoint> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        TorusPoint w = parse_omega(item);
        if (w.num_vars() != mu) {
            throw ValidationError("grid point '" + item + "' has " + std::to_string(w.num_vars()) +
                                  " coordinates, expected " + std::to_string(mu));
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::string profile_csv(const std::vector<ProfileRow>& rows, const std::vector<OmegaClassification>& classifications) {
    std::ostringstream os;
    os << "omega,signature,nullity,eta,backend,applicable,error\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        os << csv_quote(row.omega.to_string()) << ',';
        if (row.result) {
            os << row.result->signature << ',' << row.result->matrix_nullity << ',' << row.result->eta << ','
               << to_string(row.result->backend) << ',';
        } else {
            os << ",,,,";
        }
        const bool applicable = i < classifications.size() && classifications[i].verdict == Verdict::NotConcordanceRoot;
        os << (applicable ? "true" : "false") << ',';
        if (!row.error.empty()) os << csv_quote(row.error);
        os << '\n';
    }
    return os.str();
}

}  // namespace colsig
