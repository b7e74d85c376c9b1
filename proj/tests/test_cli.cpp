#include <cstdlib>
#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace arank;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
    const char* dir = std::getenv("ARANK_DATA_DIR");
    return std::string(dir ? dir : "data") + "/" + name;
}

}  // namespace

TEST_CASE("dual, ideal and complex conversions", "[cli]") {
    auto d = run({"dual", data("path4.complex"), "--complex"});
    CHECK(d.code == 0);
    CHECK(d.out == "vars: 4\nx1 x2\nx2 x3\nx3 x4\n");
    auto i = run({"ideal", data("path4.complex")});
    CHECK(i.out == "vars: 4\nx1*x2\nx1*x4\nx3*x4\n");
    auto c = run({"complex", data("line4.ideal")});
    CHECK(c.out == "vars: 4\nx1 x3\nx2 x3\nx2 x4\n");
    auto simplex = run({"ideal", "vars: 3;x1 x2 x3"});
    CHECK(simplex.code == 0);
    CHECK(simplex.out == "vars: 3\n");
    auto j = run({"dual", data("line4.ideal"), "--json"});
    CHECK(nlohmann::json::parse(j.out)["generators"] == nlohmann::json::array({"x1*x3", "x1*x4", "x2*x4"}));
}

TEST_CASE("dual round trips on random ideals", "[cli][property]") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        auto I = oracle::random_ideal(rng, 5, 5);
        if (I.is_unit()) continue;
        auto once = run({"dual", format_ideal(I)});
        REQUIRE(once.code == 0);
        std::string text = once.out;
        for (char& ch : text)
            if (ch == '\n') ch = ';';
        auto twice = run({"dual", text});
        CHECK(parse_ideal(twice.out) == I);
    }
}

TEST_CASE("analyze reports the invariants", "[cli]") {
    auto a = run({"analyze", data("line4.ideal")});
    REQUIRE(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["height"] == 2);
    CHECK(j["pd"] == 2);
    CHECK(j["cm"] == true);
    CHECK(j["dual_generalized_tree"] == true);
    auto p = nlohmann::json::parse(run({"analyze", "x1*x2*x3"}).out);
    CHECK(p["linear"] == true);
    CHECK(p["k"] == 3);
    CHECK(run({"analyze", "vars: 3"}).code == 3);
    CHECK(run({"analyze", "x1*x2", "--char", "4"}).code == 3);
}

TEST_CASE("construct with each method", "[cli]") {
    auto h = run({"construct", data("line4.ideal"), "--json"});
    REQUIRE(h.code == 0);
    auto hj = nlohmann::json::parse(h.out);
    CHECK(hj["verified"] == true);
    CHECK(hj["elements"].size() == 2);

    auto bt = run({"construct", data("square.ideal"), "--method", "bt-cone", "--face", "x4", "--facet", "x3 x4",
                   "--elements", data("square.elements"), "--json"});
    REQUIRE(bt.code == 0);
    auto bj = nlohmann::json::parse(bt.out);
    CHECK(bj["provenance"] == "bt-case2");
    REQUIRE(bj["elements"].size() == 3);
    CHECK(parse_polynomial(bj["elements"][1].get<std::string>(), 5) == parse_polynomial("x1^2*x3^2 + x5*x1", 5));

    auto plus = run({"construct", data("line4.ideal"), "--method", "plus-one", "--face", "x4"});
    REQUIRE(plus.code == 0);
    auto e = parse_elements(plus.out);
    CHECK(e.size() == 3);

    CHECK(run({"construct", "x1*x3;x1*x4;x2*x3;x2*x4"}).code == 3);
    CHECK(run({"construct", data("line4.ideal"), "--method", "plus-one"}).code == 3);
    CHECK(run({"construct", data("line4.ideal"), "--method", "plus-one", "--face", "x1 x3"}).code == 3);
    CHECK(run({"construct", data("line4.ideal"), "--method", "other"}).code == 2);
}

TEST_CASE("family output matches the construction", "[cli]") {
    auto f = run({"family", "5", "--json"});
    REQUIRE(f.code == 0);
    auto j = nlohmann::json::parse(f.out);
    CHECK(parse_polynomial(j["q1"].get<std::string>(), 5) == parse_polynomial("x1*x4*x5 - x1^2*x2^2*x3", 5));
    CHECK(parse_polynomial(j["q2"].get<std::string>(), 5) ==
          parse_polynomial("x1*x2*x5 + x3*x4*x5 - x1*x2^2*x3^2", 5));
    CHECK(j["identity"] == true);
    CHECK(run({"family", "3"}).code == 2);
}

TEST_CASE("verify accepts the lifted pair and rejects a tampered one", "[cli]") {
    auto v = run({"verify", data("line5.ideal"), data("line5.elements")});
    CHECK(v.code == 0);
    CHECK(v.out.find("verified: true") != std::string::npos);
    auto t = run({"verify", data("line5.ideal"), "x1*x4*x5 - x1^2*x2^2*x3;x1*x2*x5 + x3*x4*x5", "--json"});
    CHECK(t.code == 1);
    CHECK(nlohmann::json::parse(t.out)["verdict"] == false);
    auto s1 = run({"verify", data("line4.ideal"), "x1*x4", "--seed", "7", "--json"});
    auto s2 = run({"verify", data("line4.ideal"), "x1*x4", "--seed", "7", "--json"});
    CHECK(nlohmann::json::parse(s1.out)["counterexample"] == nlohmann::json::parse(s2.out)["counterexample"]);
}

TEST_CASE("parse errors exit with code 2 and a position", "[cli]") {
    auto r = run({"dual", "vars: 3;x1*x2;x1*y3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3, column 4") != std::string::npos);
    CHECK(run({"verify", data("line4.ideal"), "x1 +"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--order", "deglex", "dual", "x1"}).code == 2);
}

TEST_CASE("batch runs instances on several workers", "[cli]") {
    auto b = run({"batch", data("line4.ideal"), data("line5.ideal"), data("square.ideal"), "--workers", "2",
                  "--json"});
    CHECK(b.code == 0);
    std::istringstream lines(b.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["verified"] == true);
        ++count;
    }
    CHECK(count == 3);
    CHECK(run({"batch", data("line4.ideal"), "x1*x3;x1*x4;x2*x3;x2*x4"}).code == 1);
}

TEST_CASE("betti and peel", "[cli]") {
    auto b = run({"betti", data("line4.ideal"), "--json"});
    CHECK(b.out == "{\"char\":0,\"entries\":[[0,0,1],[1,2,3],[2,3,2]]}\n");
    auto p = run({"peel", "x1 x2;x2 x3;x3 x4", "--json"});
    auto j = nlohmann::json::parse(p.out);
    CHECK(j["generalized_tree"] == true);
    CHECK(j["steps"].size() == 2);
    CHECK(run({"peel", "x1 x2;x2 x3;x1 x3"}).out == "not a generalized tree\n");
}
