#include "colsig/corpus.hpp"
#include "colsig/errors.hpp"
#include "colsig/io.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace colsig;

TEST_CASE("corpus entries survive a JSON round trip") {
    for (const auto& e : corpus()) {
        const auto back = ccomplex_from_json(json::parse(to_json(e.cc).dump()));
        CHECK_MESSAGE(to_json(back) == to_json(e.cc), e.name);
        CHECK(validate(back).empty());
        for (const auto& k : e.known) {
            const auto r = signature_and_nullity(back, k.omega);
            CHECK_MESSAGE(r.signature == k.signature, e.name << " at " << k.omega.to_string());
            CHECK(static_cast<long>(r.eta) == k.eta);
        }
    }
}

TEST_CASE("random complexes survive a JSON round trip") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const auto cc = gen::random_ccomplex(rng, 1 + trial % 4, 1 + trial % 3);
        const auto j = to_json(cc);
        CHECK(to_json(ccomplex_from_json(json::parse(j.dump(2)))) == j);
    }
}

TEST_CASE("polynomials and points") {
    const auto p = LaurentPoly::monomial(2, {-1, 3}, 4) - LaurentPoly::constant(2, 7);
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(poly_from_json(json::array(), 3) == LaurentPoly(3));

    LaurentPoly big(1);
    big.add_term({2}, mpz_class("123456789012345678901234567890"));
    CHECK(poly_from_json(json::parse(to_json(big).dump())) == big);

    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"exponents": [1], "coeff": "x"}])")), ValidationError);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"exponents": [1]}, 2])")), ValidationError);

    for (const auto* spec : {"root:1/3", "root:1/4,angle:2.5", "angle:0.1,angle:6.2,root:4/5"}) {
        const auto w = parse_omega(spec);
        CHECK(point_from_json(to_json(w)) == w);
    }
    CHECK_THROWS_AS(point_from_json(json::parse(R"({"coords": [{"root": [0, 3]}]})")), ValidationError);
}

TEST_CASE("malformed C-complex JSON") {
    const auto good = to_json(corpus_entry("trefoil")->cc);
    auto wrong_schema = good;
    wrong_schema["schema"] = 99;
    CHECK_THROWS_AS(ccomplex_from_json(wrong_schema), ValidationError);
    CHECK_THROWS_AS(ccomplex_from_json(json::parse("[1, 2]")), ValidationError);
    CHECK_THROWS_AS(ccomplex_from_json(json::parse(R"({"mu": 1})")), ValidationError);

    auto hopf2 = to_json(corpus_entry("hopf2")->cc);
    auto minus = hopf2;
    minus["matrices"]["-+"] = minus["matrices"]["++"];
    CHECK_THROWS_AS(ccomplex_from_json(minus), ValidationError);
    auto short_key = hopf2;
    short_key["matrices"]["+"] = short_key["matrices"]["++"];
    CHECK_THROWS_AS(ccomplex_from_json(short_key), ValidationError);

    CHECK_THROWS_AS(read_json_file("/nonexistent/colsig.json"), ValidationError);
    const auto path = std::filesystem::temp_directory_path() / "colsig_io_truncated.json";
    std::ofstream(path) << good.dump().substr(0, 20);
    CHECK_THROWS_AS(read_json_file(path.string()), ValidationError);
    std::filesystem::remove(path);
}

TEST_CASE("plumbing graphs") {
    PlumbingGraph g;
    g.add_vertex({"A", 1, 2});
    g.add_vertex({"B", 0, 1});
    g.add_edge(0, 1, -1);
    const auto back = graph_from_json(json::parse(to_json(g).dump()));
    CHECK(back.edges() == g.edges());
    CHECK(back.total_boundary() == 3);
    CHECK(back.vertex(0).label == "A");
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": [{"genus": 0}], "edges": [{"u": 0, "v": 0, "sign": 1}]})")),
                    ValidationError);

    const auto k = kernel_basis(g);
    CHECK(to_json(k.front(), {"A", "B"}).at("text") == to_string(k.front(), {"A", "B"}));
}

TEST_CASE("grid grammar") {
    CHECK(parse_grid("", 2).empty());
    CHECK(parse_grid("none", 1).empty());

    const auto eq = parse_grid("equispaced:64", 1);
    REQUIRE(eq.size() == 64);
    CHECK(eq.front() == TorusPoint::roots({{1, 65}}));
    CHECK(parse_grid("equispaced:3", 2)[1] == TorusPoint::roots({{2, 4}, {2, 4}}));

    CHECK(parse_grid("prime-powers:p<=5,e<=3", 2) == default_grid(2));
    CHECK(parse_grid("prime-powers:p<=3,e<=1,max<=4", 1).size() == 3);
    CHECK(parse_grid("prime-powers:p<=7,e<=2,max<=10", 2).size() == 10);

    const auto pts = parse_grid("root:1/2;angle:2.5", 1);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == parse_omega("angle:2.5"));

    for (const auto* bad : {"equispaced:0", "equispaced:x", "prime-powers:p<=1,e<=1", "prime-powers:e<=2",
                            "root:1/2;root:1/2,root:1/3", "root:0/2", "angle:7"}) {
        CHECK_THROWS_AS(parse_grid(bad, 1), ValidationError);
    }
}

TEST_CASE("csv output is deterministic") {
    const auto cc = corpus_entry("figure-eight")->cc;
    const auto grid = parse_grid("root:1/2;root:1/3;angle:1.0", 1);
    std::vector<OmegaClassification> cls;
    for (const auto& w : grid) cls.push_back(classify(w));
    const auto a = profile_csv(torus_profile(cc, grid), cls);
    CHECK(a == profile_csv(torus_profile_serial(cc, grid), cls));
    CHECK(a.rfind("omega,signature,nullity,eta,backend,applicable,error\n", 0) == 0);
    CHECK(a.find("\"root:1/2\",0,0,0,exact,true,") != std::string::npos);
    CHECK(to_json(torus_profile(cc, grid), cls).dump() == to_json(torus_profile(cc, grid), cls).dump());
    CHECK(round12(0.1 + 0.2) == 0.3);
}
