#include "doctest.h"

#include "homarea/errors.hpp"
#include "homarea/io.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace homarea;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(HOMAREA_DATA_DIR) + "/" + name; }

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string scratch(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("homarea_test_" + name)).string();
}

} // namespace

TEST_CASE("area text output") {
    Run r = cli({"area", data("fix_c.curves")});
    CHECK(r.code == 0);
    CHECK(r.out.find("sigma = 12") != std::string::npos);
}

TEST_CASE("area json output") {
    Run r = cli({"area", "--json", data("fix_b.curves")});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["sigma"] == "4");
    CHECK(j["mode"] == "paths");
    REQUIRE(j["anchors"].size() == 1);
    CHECK(j["anchors"][0]["x"] == "2");
    CHECK(j["anchors"][0]["y"] == "0");
    CHECK(j["segment_costs"].size() == 2);
}

TEST_CASE("sphere area from the file and from the flag") {
    json a = json::parse(cli({"area", "--json", data("fix_a_sphere.curves")}).out);
    CHECK(a["sigma"] == "2");
    json b = json::parse(cli({"area", "--json", "--sphere-area", "100", data("fix_a.curves")}).out);
    CHECK(b["sigma"] == "4");
}

TEST_CASE("cycle reports") {
    json d = json::parse(cli({"area", "--json", data("disjoint_squares.curves")}).out);
    CHECK(d["sigma"] == "2");
    CHECK(d["infimum"] == true);
    json p = json::parse(cli({"area", "--json", data("plus_sign.curves")}).out);
    CHECK(p["sigma"] == "4");
    CHECK(p["cycle_case"] == "crossing");
}

TEST_CASE("check agrees with the oracle") {
    for (const char *f : {"fix_a.curves", "fix_b.curves", "fix_c.curves", "nested_squares.curves"}) {
        CAPTURE(f);
        Run r = cli({"check", data(f)});
        CHECK(r.code == 0);
        CHECK(r.out.find("agree") != std::string::npos);
    }
}

TEST_CASE("exit codes for bad input") {
    for (const char *f : {"overlap.curves", "vertex_on_curve.curves", "not_simple.curves"}) {
        CAPTURE(f);
        Run r = cli({"area", data(f)});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    CHECK(cli({"area", data("no_such_file.curves")}).code == 2);
    CHECK(cli({"area"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"gen", "no-such-family"}).code == 2);
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_curve_file("kind: paths\nP: [0, 0] [1, 0]\nQ: [0, 0] [1 ; 0]\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_curve_file("kind: paths\nkind: paths\n"), ParseError);
    CHECK_THROWS_AS(parse_curve_file("P: [0, 0] [1, 0]\nQ: [0, 0] [1, 0]\n"), ParseError);
}

TEST_CASE("serialize and parse round-trip") {
    for (const char *f : {"exact_input.curves", "fix_c.curves", "nested_squares.curves", "fix_a_sphere.curves"}) {
        CAPTURE(f);
        CurveFile a = read_curve_file(data(f));
        CurveFile b = parse_curve_file(serialize_curve_file(a));
        CHECK(a.kind == b.kind);
        CHECK(a.p.vertices() == b.p.vertices());
        CHECK(a.q.vertices() == b.q.vertices());
        CHECK(a.sphere_area == b.sphere_area);
    }
}

TEST_CASE("svg rendering is deterministic") {
    std::string s1 = scratch("a.svg"), s2 = scratch("b.svg");
    REQUIRE(cli({"render", data("fix_b.curves"), "--svg", s1}).code == 0);
    REQUIRE(cli({"render", data("fix_b.curves"), "--svg", s2}).code == 0);
    std::string a = slurp(s1);
    CHECK(a == slurp(s2));
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("<circle") != std::string::npos);
    std::filesystem::remove(s1);
    std::filesystem::remove(s2);
}

TEST_CASE("generators are deterministic and solvable") {
    for (std::vector<std::string> g : {std::vector<std::string>{"gen", "zigzag", "12"},
                                       {"gen", "random-walks", "4", "9"},
                                       {"gen", "random-polylines", "4", "8", "3"},
                                       {"gen", "random-cycles", "5", "2"}}) {
        CAPTURE(g[1]);
        Run a = cli(g), b = cli(g);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        std::string path = scratch(g[1] + ".curves");
        g.push_back("-o");
        g.push_back(path);
        REQUIRE(cli(g).code == 0);
        CHECK(slurp(path) == a.out);
        CHECK(cli({"check", path}).code == 0);
        std::filesystem::remove(path);
    }
}
