#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "agr/analysis.hpp"
#include "agr/errors.hpp"

using namespace agr;
using nlohmann::json;

namespace {

const Verdict* find_verdict(const AnalysisReport& report, const std::string& check) {
    for (const auto& v : report.verdicts) {
        if (v.check == check) return &v;
    }
    return nullptr;
}

} // namespace

TEST_CASE("request parsing and validation") {
    SUBCASE("semigroup request") {
        const auto req = parse_request(std::string(R"({"semigroup":{"generators":[3,5]}})"),
                                       Options{});
        CHECK(req.kind == RequestKind::Semigroup);
    }
    SUBCASE("monomial request") {
        const auto req = parse_request(
            std::string(R"({"monomial":{"nvars":2,"gens":[[7,0],[6,1],[1,6],[0,7]]}})"),
            Options{});
        CHECK(req.kind == RequestKind::Monomial);
    }
    SUBCASE("invalid gcd is an input error") {
        CHECK_THROWS_AS(
            parse_request(std::string(R"({"semigroup":{"generators":[2,4]}})"),
                          Options{}),
            parse_error);
    }
    SUBCASE("unknown fields are rejected") {
        CHECK_THROWS_AS(
            parse_request(std::string(R"({"semigroup":{"generators":[3,5],"x":1}})"),
                          Options{}),
            parse_error);
        CHECK_THROWS_AS(parse_request(std::string(R"({"bogus":{}})"), Options{}),
                        parse_error);
    }
    SUBCASE("exactly one kind") {
        CHECK_THROWS_AS(
            parse_request(
                std::string(
                    R"({"semigroup":{"generators":[3,5]},"verify":{}})"),
                Options{}),
            parse_error);
        CHECK_THROWS_AS(parse_request(std::string("{}"), Options{}), parse_error);
    }
    SUBCASE("malformed json") {
        CHECK_THROWS_AS(parse_request(std::string("{"), Options{}), parse_error);
        CHECK_THROWS_AS(parse_request(std::string(R"({"semigroup":{"generators":[3.5,5]}})"),
                                      Options{}),
                        parse_error);
    }
    SUBCASE("hypersurface bounds checked at parse time") {
        CHECK_THROWS_AS(
            parse_request(std::string(R"({"hypersurface":{"e":3,"a":[4]}})"),
                          Options{}),
            parse_error);
    }
    SUBCASE("variable count checked at parse time") {
        CHECK_THROWS_AS(
            parse_request(std::string(R"({"monomial":{"nvars":4,"gens":[[1,0,0,0]]}})"),
                          Options{}),
            parse_error);
    }
    SUBCASE("option values validated") {
        CHECK_THROWS_AS(
            parse_request(
                std::string(R"({"semigroup":{"generators":[3,5]},"options":{"window":0}})"),
                Options{}),
            parse_error);
        CHECK_THROWS_AS(
            parse_request(
                std::string(R"({"semigroup":{"generators":[3,5]},"options":{"format":"xml"}})"),
                Options{}),
            parse_error);
    }
    SUBCASE("request options merge, flags win") {
        OptionOverrides pinned;
        pinned.window = 9;
        const auto req = parse_request(
            std::string(
                R"({"semigroup":{"generators":[3,5]},"options":{"window":7,"format":"text"}})"),
            Options{}, pinned);
        CHECK(req.options.window == 9);
        CHECK(req.options.format == "text");
        CHECK_THROWS_AS(
            parse_request(
                std::string(R"({"semigroup":{"generators":[3,5]},"options":{"w":1}})"),
                Options{}),
            parse_error);
    }
}

TEST_CASE("semigroup report content") {
    const auto req = parse_request(
        std::string(R"({"semigroup":{"generators":[13,18,23,28,33]}})"), Options{});
    const AnalysisReport report = run(req);
    CHECK(report.kind == "semigroup");
    CHECK(report.ok);
    CHECK(report.invariants["delta"] == 0);
    CHECK(report.invariants["reduction_number"] == 3);
    CHECK(report.invariants["e0"] == 13);
    CHECK(report.invariants["h_ring"]["terms"] ==
          json::parse("[[0,1],[1,4],[2,4],[3,4]]"));
    CHECK(report.invariants["h_canonical"]["terms"] ==
          json::parse("[[0,4],[1,4],[2,4],[3,1]]"));

    const Verdict* canonical = find_verdict(report, "canonical_criterion");
    REQUIRE(canonical != nullptr);
    CHECK(canonical->value == json(true));
    CHECK(canonical->tag == "cannonical-module-Mod");

    const Verdict* cm = find_verdict(report, "assoc_graded_is_cohen_macaulay");
    REQUIRE(cm != nullptr);
    CHECK(cm->value == json(true));
}

TEST_CASE("semigroup reports the red-2 type identity") {
    const auto req = parse_request(
        std::string(R"({"semigroup":{"generators":[3,5]}})"), Options{});
    const AnalysisReport report = run(req);
    const Verdict* identity = find_verdict(report, "red2_type_identity");
    REQUIRE(identity != nullptr);
    CHECK(identity->value == json(true));
    const Verdict* shape = find_verdict(report, "gorenstein_graded_shape");
    REQUIRE(shape != nullptr);
    CHECK(shape->value == json(true)); // h = 1+z+z^2 is 1*(1+z+z^2)
}

TEST_CASE("monomial report content") {
    const auto req = parse_request(
        std::string(R"({"monomial":{"nvars":2,"gens":[[7,0],[6,1],[1,6],[0,7]]}})"),
        Options{});
    const AnalysisReport report = run(req);
    CHECK(report.ok);
    CHECK(report.invariants["colength"] == 38);
    CHECK(report.invariants["e2"] == 0);
    CHECK(report.invariants["h"]["terms"] ==
          json::parse("[[0,38],[1,3],[2,3],[3,3],[4,3],[5,3],[6,-4]]"));

    const Verdict* a_inv = find_verdict(report, "a_invariant");
    REQUIRE(a_inv != nullptr);
    CHECK(a_inv->value == json(-1));
    CHECK(a_inv->tag == "dim2-hoa");

    const Verdict* param = find_verdict(report, "parameter_ideal");
    REQUIRE(param != nullptr);
    CHECK(param->value == json(false));
}

TEST_CASE("not m-primary surfaces as a precondition error at run time") {
    const auto req = parse_request(
        std::string(R"({"monomial":{"nvars":2,"gens":[[2,0],[1,1]]}})"), Options{});
    CHECK_THROWS_AS(run(req), not_primary);
}

TEST_CASE("hypersurface report content") {
    const auto req = parse_request(
        std::string(R"({"hypersurface":{"e":4,"a":[1,2]}})"), Options{});
    const AnalysisReport report = run(req);
    CHECK(report.ok);
    CHECK(report.invariants["alpha"] == 2);
    CHECK(report.invariants["i_invariant"] == 1);
    CHECK(report.invariants["dual_filtration_dims"]["terms"] ==
          json::parse("[[2,1],[3,2]]"));
    CHECK(report.invariants["hom_dims"] ==
          report.invariants["dual_filtration_dims"]);
    CHECK(report.invariants["gorenstein_shape_s"].is_null());

    const Verdict* oracle = find_verdict(report, "oracle_dual_dims_match");
    REQUIRE(oracle != nullptr);
    CHECK(oracle->value == json(true));
}

TEST_CASE("verify runs corpora and reports green") {
    Options opt;
    opt.corpus_max_e = 3;
    opt.corpus_max_mu = 2;
    opt.semigroup_count = 10;
    const auto req =
        parse_request(std::string(R"({"verify":{}})"), opt);
    const AnalysisReport report = run(req);
    CHECK(report.ok);
    // e=2: mu=1 gives 2, mu=2 gives 3; e=3: 3 and 6; total 14.
    CHECK(report.invariants["corpus"]["instances"] == 14);
    CHECK(report.invariants["random_semigroups"]["count"] == 10);
    CHECK(report.invariants["random_semigroups"]["seed"] == 1729);
    CHECK(report.invariants["failures"] == json::array());
}

TEST_CASE("verify payload overrides options") {
    const auto req = parse_request(
        std::string(R"({"verify":{"max_e":1,"semigroups":0,"seed":42}})"), Options{});
    const AnalysisReport report = run(req);
    CHECK(report.ok);
    CHECK(report.invariants["corpus"]["instances"] == 0);
    CHECK(report.invariants["random_semigroups"]["count"] == 0);
    CHECK(report.invariants["random_semigroups"]["seed"] == 42);
}

TEST_CASE("golden report bytes for the monomial-curve request") {
    std::ifstream request_in(std::string(AGR_TEST_DATA_DIR) +
                             "/request_semigroup.json");
    std::ifstream golden_in(std::string(AGR_TEST_DATA_DIR) +
                            "/golden_semigroup.json");
    REQUIRE(request_in.good());
    REQUIRE(golden_in.good());
    std::stringstream request_text, golden;
    request_text << request_in.rdbuf();
    golden << golden_in.rdbuf();

    const auto req = parse_request(request_text.str(), Options{});
    CHECK(emit(run(req), "json") == golden.str());
}

TEST_CASE("emit: json output is deterministic, text lists every verdict") {
    const auto req = parse_request(
        std::string(R"({"semigroup":{"generators":[3,4,5]}})"), Options{});
    const AnalysisReport report = run(req);

    const std::string once = emit(report, "json");
    const AnalysisReport report2 = run(req);
    CHECK(once == emit(report2, "json"));
    CHECK(once.find("elapsed") == std::string::npos);
    CHECK(json::parse(once)["engine"]["version"].is_string());

    const std::string text = emit(report, "text");
    for (const auto& v : report.verdicts) {
        CHECK(text.find(v.check) != std::string::npos);
        CHECK(text.find("[" + v.tag + "]") != std::string::npos);
    }
    CHECK(text.find("elapsed_ms:") != std::string::npos);
    CHECK_THROWS_AS(emit(report, "yaml"), parse_error);
}
