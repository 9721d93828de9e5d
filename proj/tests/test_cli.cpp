#include "support/fixtures.hpp"

#include <json.hpp>

using namespace fx;
using nlohmann::json;

namespace {

json parsed(const CommandResult& r) { return json::parse(r.output); }

RunOptions quiet()
{
    RunOptions o;
    o.timing = false;
    return o;
}

}  // namespace

TEST_CASE("catalog lists the built-in algebras")
{
    auto names = catalog_names();
    CHECK(names.size() == 7);
    CHECK(std::find(names.begin(), names.end(), "octonion") != names.end());
    CHECK(catalog_entry("zero-3").dim == 3);
    CHECK(catalog_entry("n2mod5").field == F5);
    CHECK_THROWS_AS(catalog_entry("n2mod4"), Error);
    CHECK_THROWS_AS(catalog_entry("nope"), Error);

    auto r = cmd_catalog("p2");
    CHECK(r.exit == 0);
    auto j = parsed(r);
    CHECK(j["dim"] == 2);
    CHECK(j["prec"][0][3] == "1/2");
    CHECK(cmd_catalog("unknown").exit == 2);
}

TEST_CASE("catalog files survive a serialization round trip")
{
    for (std::string name : catalog_names()) {
        if (name == "zero-n") name = "zero-2";
        for (const std::string& suffix : {std::string(), std::string("mod5")}) {
            std::string full = name + suffix;
            INFO(full);
            auto f = catalog_entry(full);
            std::string text = serialize(f);
            auto back = parse_algebra_file(text);
            CHECK(serialize(back) == text);
            CHECK(back.dim == f.dim);
            CHECK(back.basis == f.basis);
        }
    }
    // the graded entry has thirds
    try {
        catalog_entry("p3-gradedmod3");
        FAIL("expected BadCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == "BadCharacteristic");
    }
}

TEST_CASE("malformed files are parse errors")
{
    CHECK_THROWS_AS(parse_algebra_file("{"), Error);
    try {
        parse_algebra_file(R"({"format_version": "1", "field": "Q", "dim": 1, "basis": ["e"], "bogus": 1})");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == "ParseError");
    }
    CHECK(cmd_check("/nonexistent/file.json", "prealt", "", quiet()).exit == 2);
}

TEST_CASE("check exit codes and witnesses")
{
    auto ok = cmd_check_file(catalog_entry("p2"), "check p2", "prealt", "", quiet());
    CHECK(ok.exit == 0);
    CHECK(parsed(ok)["verdict"] == "pass");

    auto bad = cmd_check_file(catalog_entry("halved-idempotent"), "check halved", "prealt", "", quiet());
    CHECK(bad.exit == 1);
    auto j = parsed(bad);
    CHECK(j["verdict"] == "fail");
    bool seen = false;
    for (const auto& v : j["violations"])
        if (v["id"] == "pa.r.sym") {
            seen = true;
            CHECK(v["witness"] == json::array({0, 0, 0}));
            CHECK(v["residual"]["entries"][0][1] == "-1/2");
        }
    CHECK(seen);

    CHECK(cmd_check_file(catalog_entry("octonion"), "c", "associative", "", quiet()).exit == 1);
    CHECK(cmd_check_file(catalog_entry("p2"), "c", "no-such-suite", "", quiet()).exit == 2);
    // a pre-alternative suite needs prec/succ
    CHECK(cmd_check_file(catalog_entry("n2"), "c", "prealt", "", quiet()).exit == 2);
}

TEST_CASE("witness list is capped")
{
    RunOptions o = quiet();
    o.max_witnesses = 2;
    auto j = parsed(cmd_check_file(catalog_entry("halved-idempotent"), "c", "prealt", "", o));
    CHECK(j["violations"].size() == 2);
    CHECK(j["violation_count"] == 6);
    CHECK(j["truncated"] == true);
}

TEST_CASE("construct commands")
{
    ConstructArgs a;
    a.op = "associated";
    auto r = cmd_construct_file(catalog_entry("p2"), a, quiet());
    REQUIRE(r.exit == 0);
    auto f = parse_algebra_file(r.output);
    CHECK(f.alternative().mult == n2().mult);

    a.op = "canonical-r";
    a.sign = "minus";
    r = cmd_construct_file(catalog_entry("p2"), a, quiet());
    REQUIRE(r.exit == 0);
    f = parse_algebra_file(r.output);
    CHECK(f.dim == 4);
    CHECK(f.r.has_value());
    CHECK(f.form.has_value());
    CHECK(cmd_check_file(f, "c", "form", "symplectic", quiet()).exit == 0);
    CHECK(aybe_residual(f.alternative(), f.need_r()).is_zero());

    a.sign = "sideways";
    CHECK(cmd_construct_file(catalog_entry("p2"), a, quiet()).exit == 2);

    ConstructArgs pad;
    pad.op = "pad-double";
    r = cmd_construct_file(catalog_entry("p2"), pad, quiet());
    REQUIRE(r.exit == 0);
    f = parse_algebra_file(r.output);
    CHECK(f.dim == 4);
    CHECK(cmd_check_file(f, "c", "bialgebra", "", quiet()).exit == 0);

    ConstructArgs g;
    g.op = "graded-split";
    g.degrees = {1, 2};
    r = cmd_construct_file(catalog_entry("n2"), g, quiet());
    REQUIRE(r.exit == 0);
    CHECK(parse_algebra_file(r.output).prealternative().prec == p2().prec);

    ConstructArgs unknown;
    unknown.op = "transmogrify";
    CHECK(cmd_construct_file(catalog_entry("n2"), unknown, quiet()).exit == 2);
}

TEST_CASE("residual commands")
{
    auto p = catalog_entry("p2");
    p.r = r_sym();
    auto r = cmd_residual_file(p, "residual p2", "pa", quiet());
    CHECK(r.exit == 0);
    CHECK(r.output.find("PA_3^2") != std::string::npos);

    auto a = catalog_entry("n2");
    a.r = t2(Q, 2, {{0, 0, 1}});
    auto ra = cmd_residual_file(a, "residual n2", "aybe", quiet());
    CHECK(ra.exit == 1);

    auto missing = catalog_entry("n2");
    CHECK(cmd_residual_file(missing, "residual", "aybe", quiet()).exit == 2);
    CHECK(cmd_residual_file(a, "residual", "nonsense", quiet()).exit == 2);
}

TEST_CASE("search commands")
{
    SearchArgs s;
    s.p = 3;
    s.dim = 2;
    s.target = "aybe-skew";
    s.algebra = "n2";
    auto r = cmd_search(s, quiet());
    REQUIRE(r.exit == 0);
    auto j = parsed(r);
    CHECK(j["candidates"] == 3);
    CHECK(j["hit_count"] == 3);

    s.target = "al-operator";
    j = parsed(cmd_search(s, quiet()));
    CHECK(j["candidates"] == 81);

    s.p = 4;
    CHECK(cmd_search(s, quiet()).exit == 2);
    s.p = 3;
    s.cap = 10;
    CHECK(cmd_search(s, quiet()).exit == 2);
    s.cap = 1000;
    s.dim = 3;
    CHECK(cmd_search(s, quiet()).exit == 2);
}

TEST_CASE("reports do not depend on the worker count")
{
    RunOptions one = quiet(), four = quiet();
    four.workers = 4;
    auto o = catalog_entry("octonion");
    CHECK(cmd_check_file(o, "c", "associative", "", one).output ==
          cmd_check_file(o, "c", "associative", "", four).output);
    SearchArgs s;
    s.p = 3;
    s.dim = 2;
    s.target = "pa-sym";
    s.algebra = "p2";
    CHECK(cmd_search(s, one).output == cmd_search(s, four).output);
}
