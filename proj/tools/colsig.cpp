// colsig: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 indeterminate
// inertia (raise --precision or --tolerance), 4 obstruction found.

#include "colsig/bounds.hpp"
#include "colsig/corpus.hpp"
#include "colsig/errors.hpp"
#include "colsig/inertia.hpp"
#include "colsig/io.hpp"
#include "colsig/omega.hpp"
#include "colsig/plumbing.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace colsig;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitObstructed = 4;

struct Common {
    std::string backend;
    unsigned precision = kDefaultPrecisionBits;
    double tolerance = kDefaultTolerance;
    std::string out;
    std::string format;
};

unsigned default_precision() {
    if (const char* env = std::getenv("COLSIG_PRECISION")) {
        try {
            const long v = std::stol(env);
            if (v >= 16 && v <= 1 << 20) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw ValidationError(std::string("COLSIG_PRECISION must be an integer in [16, 1048576], got '") + env + "'");
    }
    return kDefaultPrecisionBits;
}

EvalOptions eval_options(const Common& c) {
    EvalOptions o;
    if (c.backend == "exact") o.backend = Backend::Exact;
    if (c.backend == "approx") o.backend = Backend::Approx;
    o.precision_bits = c.precision;
    o.tolerance = c.tolerance;
    return o;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw ValidationError("cannot write " + c.out);
    f << text;
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

/// A path, or "corpus:NAME" for a bundled entry.
CComplexData load_ccomplex(const std::string& source) {
    if (source.rfind("corpus:", 0) == 0) {
        const auto e = corpus_entry(source.substr(7));
        if (!e) throw ValidationError("no corpus entry named " + source.substr(7));
        return e->cc;
    }
    CComplexData cc = ccomplex_from_json(read_json_file(source));
    require_valid(cc);
    return cc;
}

TorusPoint load_omega(const std::string& spec, int mu) {
    const TorusPoint w = parse_omega(spec);
    if (w.num_vars() != mu) {
        throw ValidationError("omega has " + std::to_string(w.num_vars()) + " coordinates, the C-complex has " +
                              std::to_string(mu) + " colors");
    }
    return w;
}

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError("expected a comma-separated integer list, got '" + s + "'");
        }
    }
    return out;
}

std::vector<OmegaClassification> classify_all(const std::vector<TorusPoint>& grid) {
    std::vector<OmegaClassification> out;
    out.reserve(grid.size());
    for (const auto& w : grid) out.push_back(classify(w));
    return out;
}

json corpus_json(const CorpusEntry& e) {
    json j = to_json(e.cc);
    j["name"] = e.name;
    j["provenance"] = e.provenance;
    json known = json::array();
    for (const auto& k : e.known) {
        known.push_back({{"omega", to_json(k.omega)}, {"signature", k.signature}, {"eta", k.eta}, {"source", k.source}});
    }
    j["known"] = known;
    return j;
}

void add_eval_flags(CLI::App* cmd, Common& c) {
    cmd->add_option("--backend", c.backend, "exact or approx (default: exact iff omega is exact)")
        ->check(CLI::IsMember({"exact", "approx"}));
    cmd->add_option("--precision", c.precision, "working precision in bits for the approximate backend")
        ->check(CLI::Range(16u, 1u << 20));
    cmd->add_option("--tolerance", c.tolerance, "relative zero tolerance for the approximate backend")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multivariable signatures, nullities and concordance obstructions of colored links"};
    app.require_subcommand(1);
    Common c;
    try {
        c.precision = default_precision();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    app.add_option("--out", c.out, "write output to this file instead of stdout");

    int exit_code = 0;

    std::string file, file2, omega, grid = "prime-powers:p<=5,e<=3";
    auto* sig = app.add_subcommand("signature", "signature and nullity at one point");
    sig->add_option("file", file, "C-complex JSON file or corpus:NAME")->required();
    sig->add_option("--omega", omega, "point, e.g. root:1/2 or angle:2.5,root:1/3")->required();
    add_eval_flags(sig, c);
    sig->callback([&] {
        const auto cc = load_ccomplex(file);
        emit(c, to_json(signature_and_nullity(cc, load_omega(omega, cc.mu), eval_options(c))));
    });

    auto* prof = app.add_subcommand("profile", "signature and nullity over a grid");
    prof->add_option("file", file, "C-complex JSON file or corpus:NAME")->required();
    prof->add_option("--grid", grid, "grid spec: prime-powers:p<=P,e<=E[,max<=M] | equispaced:N | point;point;...");
    prof->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_eval_flags(prof, c);
    prof->callback([&] {
        const auto cc = load_ccomplex(file);
        const auto points = parse_grid(grid, cc.mu);
        const auto rows = torus_profile(cc, points, eval_options(c));
        const auto cls = classify_all(points);
        if (c.format == "json") {
            emit(c, json{{"schema", kSchemaVersion}, {"rows", to_json(rows, cls)}});
        } else {
            emit(c, profile_csv(rows, cls));
        }
        for (const auto& r : rows) {
            if (r.indeterminate) exit_code = kExitIndeterminate;
        }
    });

    std::string cert_file;
    auto* cls = app.add_subcommand("classify-omega", "is omega a concordance root?");
    cls->add_option("--omega", omega, "point to classify")->required();
    cls->add_option("--cert", cert_file, "JSON file with a certificate polynomial");
    cls->callback([&] {
        const TorusPoint w = parse_omega(omega);
        std::optional<LaurentPoly> cert;
        if (!cert_file.empty()) {
            json j = read_json_file(cert_file);
            if (j.is_object() && j.contains("certificate")) j = j.at("certificate");
            cert = poly_from_json(j, w.num_vars());
        }
        emit(c, to_json(classify(w, cert)));
    });

    auto* bound = app.add_subcommand("bound-check", "genus and surface bounds at one point");
    bound->require_subcommand(1);
    std::string betti, euler, genera, boundary;
    long components = 1, double_points = 0;

    auto* surf = bound->add_subcommand("surface", "|sigma| + |eta - m + 1| <= sum b1(F_i) + c");
    surf->add_option("file", file, "C-complex JSON file or corpus:NAME")->required();
    surf->add_option("--omega", omega, "evaluation point")->required();
    surf->add_option("--betti", betti, "b1(F_i) per color, comma separated")->required();
    surf->add_option("--components", components, "connected components m of F");
    surf->add_option("--double-points", double_points, "double points c");
    add_eval_flags(surf, c);
    surf->callback([&] {
        const auto cc = load_ccomplex(file);
        const auto w = load_omega(omega, cc.mu);
        const auto inv = signature_and_nullity(cc, w, eval_options(c));
        const auto cl = classify(w);
        const auto check = surface_bound_check(inv, SurfaceProfile{parse_list(betti), components, double_points}, cl);
        emit(c, json{{"schema", kSchemaVersion}, {"check", to_json(check)}, {"invariants", to_json(inv)},
                     {"classification", to_json(cl)}});
        if (check.applicable && !check.satisfied) exit_code = kExitObstructed;
    });

    auto* cob = bound->add_subcommand("cobordism", "|dsigma| + |deta| <= sum -chi(Sigma_i) + c");
    cob->add_option("left", file, "first C-complex")->required();
    cob->add_option("right", file2, "second C-complex")->required();
    cob->add_option("--omega", omega, "evaluation point")->required();
    cob->add_option("--euler", euler, "chi(Sigma_i) per color");
    cob->add_option("--betti", betti, "b1(Sigma_i) per color");
    cob->add_option("--genera", genera, "summed genus of Sigma_i per color");
    cob->add_option("--boundary", boundary, "n,n': component counts of the two links (with --genera)");
    cob->add_option("--components", components, "connected components m of Sigma");
    cob->add_option("--double-points", double_points, "double points c");
    add_eval_flags(cob, c);
    cob->callback([&] {
        const auto a = load_ccomplex(file), b = load_ccomplex(file2);
        const auto w = load_omega(omega, a.mu);
        CobordismProfile p;
        if (!euler.empty()) p.euler_characteristics = parse_list(euler);
        if (!betti.empty()) p.betti_numbers = parse_list(betti);
        if (!genera.empty()) p.genera = parse_list(genera);
        if (!boundary.empty()) {
            const auto nn = parse_list(boundary);
            if (nn.size() != 2) throw ValidationError("--boundary takes two numbers n,n'");
            p.boundary_left = nn[0];
            p.boundary_right = nn[1];
        }
        p.components = components;
        p.double_points = double_points;
        const auto ia = signature_and_nullity(a, w, eval_options(c));
        const auto ib = signature_and_nullity(b, load_omega(omega, b.mu), eval_options(c));
        const auto cl = classify(w);
        const auto check = genus_bound_check(ia, ib, p, cl);
        emit(c, json{{"schema", kSchemaVersion}, {"check", to_json(check)}, {"left", to_json(ia)},
                     {"right", to_json(ib)}, {"classification", to_json(cl)}});
        if (check.applicable && !check.satisfied) exit_code = kExitObstructed;
    });

    auto* conc = app.add_subcommand("concordance-check", "compare two links on a grid of certified points");
    conc->add_option("left", file, "first C-complex")->required();
    conc->add_option("right", file2, "second C-complex")->required();
    conc->add_option("--grid", grid, "grid spec (default: the prime-power grid)");
    conc->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"csv", "json"}));
    add_eval_flags(conc, c);
    conc->callback([&] {
        const auto a = load_ccomplex(file), b = load_ccomplex(file2);
        if (a.mu != b.mu) throw ValidationError("the two links have different numbers of colors");
        const auto report = concordance_obstruction(a, b, parse_grid(grid, a.mu), eval_options(c));
        if (c.format == "csv") {
            emit(c, report_csv(report));
        } else {
            emit(c, to_json(report));
        }
        bool indeterminate = false;
        for (const auto& row : report.rows) {
            if (row.indeterminate) indeterminate = true;
        }
        if (report.verdict == ObstructionVerdict::Obstructed) {
            exit_code = kExitObstructed;
        } else if (indeterminate) {
            exit_code = kExitIndeterminate;
        }
    });

    auto* plumb = app.add_subcommand("plumbing", "plumbing graph calculus");
    std::string action;
    plumb->add_option("action", action, "balanced, kernel or weights")
        ->required()
        ->check(CLI::IsMember({"balanced", "kernel", "weights"}));
    plumb->add_option("graph", file, "graph JSON file")->required();
    plumb->callback([&] {
        const auto g = graph_from_json(read_json_file(file));
        std::vector<std::string> labels;
        for (const auto& v : g.vertices()) labels.push_back(v.label);
        if (action == "balanced") {
            emit(c, json{{"balanced", is_balanced(g)}});
        } else if (action == "kernel") {
            json gens = json::array();
            for (const auto& k : kernel_basis(g)) gens.push_back(to_json(k, labels));
            emit(c, json{{"generators", gens}, {"count", gens.size()}, {"expected", g.total_boundary()}});
        } else {
            json pairs = json::array();
            for (int u = 0; u < g.num_vertices(); ++u)
                for (int v = u + 1; v < g.num_vertices(); ++v) {
                    pairs.push_back({{"u", u}, {"v", v}, {"weight", total_weight(g, u, v)}});
                }
            emit(c, json{{"weights", pairs}});
        }
    });

    std::size_t samples = 32;
    std::uint64_t seed = 0x5eed;
    auto* alex = app.add_subcommand("alexander-nullity", "rank of the Alexander module");
    alex->add_option("file", file, "C-complex JSON file or corpus:NAME")->required();
    alex->add_option("--samples", samples, "sample points when beta0 > 1");
    alex->add_option("--seed", seed, "sampling seed");
    alex->callback([&] {
        const auto r = alexander_nullity(load_ccomplex(file), AlexanderOptions{samples, seed});
        emit(c, json{{"alexander_nullity", r.value}, {"sampled", r.sampled}, {"samples", r.samples}});
    });

    auto* corp = app.add_subcommand("corpus", "bundled examples");
    corp->require_subcommand(1);
    auto* list = corp->add_subcommand("list", "names and provenance");
    list->callback([&] {
        json out = json::array();
        for (const auto& e : corpus()) out.push_back({{"name", e.name}, {"provenance", e.provenance}});
        emit(c, out);
    });
    std::string dir, name;
    auto* show = corp->add_subcommand("show", "print one entry");
    show->add_option("name", name)->required();
    show->callback([&] {
        const auto e = corpus_entry(name);
        if (!e) throw ValidationError("no corpus entry named " + name);
        emit(c, corpus_json(*e));
    });
    auto* exp = corp->add_subcommand("export", "write every entry as NAME.json into a directory");
    exp->add_option("dir", dir)->required();
    exp->callback([&] {
        std::filesystem::create_directories(dir);
        for (const auto& e : corpus()) {
            std::ofstream f(std::filesystem::path(dir) / (e.name + ".json"));
            f << corpus_json(e).dump(2) << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    } catch (const IndeterminateInertia& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return kExitIndeterminate;
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return exit_code;
}
