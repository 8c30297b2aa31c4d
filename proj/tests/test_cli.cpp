#include "hopfpar/cli.hpp"
#include "hopfpar/json_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace hopfpar;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args, const std::string& input = {})
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}

TEST_SUITE("cli") {

TEST_CASE("example output feeds verify")
{
    auto e = call({"example", "kc2"});
    REQUIRE(e.code == ExitOk);
    auto j = json::parse(e.out);
    CHECK(j["kind"] == "hopf");
    CHECK(j["dim"] == 2);
    auto v = call({"verify", "hopf", "-"}, e.out);
    CHECK(v.code == ExitOk);
    CHECK(json::parse(v.out)["status"] == "pass");
}

TEST_CASE("build-hpar on kC2")
{
    auto e = call({"example", "kc2"});
    auto b = call({"build-hpar", "-"}, e.out);
    REQUIRE(b.code == ExitOk);
    auto j = json::parse(b.out);
    CHECK(j["certified"] == true);
    CHECK(j["dim"] == 3);
    CHECK(j["degree"] == 4);
    CHECK(j["saturation"] == 6);
    CHECK(j["p"][0][1] == "1/1");
    CHECK(j["p"][1][1] == "-1/1");
    CHECK(j["grouplikes_complete"] == true);
    // identical bytes on a second run
    CHECK(call({"build-hpar", "-"}, e.out).out == b.out);
}

TEST_CASE("H4 at low degree is uncertified")
{
    auto e = call({"example", "h4"});
    auto b = call({"build-hpar", "-", "--degree", "4", "--saturation", "6"}, e.out);
    CHECK(b.code == ExitUncertified);
    auto j = json::parse(b.out);
    CHECK(j["certified"] == false);
    CHECK(j["dims_history"].size() > 0);
}

TEST_CASE("input errors")
{
    CHECK(call({"example", "nope"}).code == ExitInput);
    CHECK(call({"verify", "hopf", "-"}, "{ not json").code == ExitInput);
    auto m = call({"verify", "pr", "-"}, "{}");
    CHECK(m.code == ExitInput);
    CHECK(m.err.find("missing field") != std::string::npos);
    CHECK(call({"verify", "nosuch", "-"}, "{}").code == ExitInput);
    CHECK(call({}).code == ExitInput);
}

TEST_CASE("verify pr passes and fails")
{
    json h = json::parse(call({"example", "kc2"}).out);
    json in;
    in["hopf"] = h;
    in["algebra"] = json::parse(R"({"dim": 1, "mult": [[["1"]]], "unit": ["1"]})");
    in["pi"] = json::parse(R"([["1", "1/2"]])");
    // π(g) = 1/2 does not satisfy π(g)^3 = π(g)
    CHECK(call({"verify", "pr", "-"}, in.dump()).code == ExitFailed);
    in["pi"] = json::parse(R"([["1", "-1"]])");
    CHECK(call({"verify", "pr", "-"}, in.dump()).code == ExitOk);
    in["pi"] = json::parse(R"([["1", "0"]])");
    CHECK(call({"verify", "pr", "-"}, in.dump()).code == ExitOk);
}

TEST_CASE("verify pcm on the truncated H4 comodule")
{
    auto r = call({"verify", "pcm", "-"}, R"({"h4_truncated": 12})");
    CHECK(r.code == ExitUncertified);
    auto j = json::parse(r.out);
    CHECK(j["regularity"] == "irregular-evidence");
}

TEST_CASE("report renders json and text")
{
    auto a = call({"report", "--format", "json"});
    REQUIRE(a.code == ExitOk);
    auto b = call({"report", "--format", "json"});
    CHECK(a.out == b.out);
    auto t = call({"report", "-", "--format", "text"}, a.out);
    CHECK(t.code == ExitOk);
    CHECK(t.out.find("status: pass") != std::string::npos);
}

TEST_CASE("groupoid example is a coalgebroid")
{
    auto e = call({"example", "groupoid:2"});
    REQUIRE(e.code == ExitOk);
    CHECK(json::parse(e.out)["kind"] == "coalgebroid");
    CHECK(call({"verify", "coalgebroid", "-"}, e.out).code == ExitOk);
    CHECK(call({"example", "groupoid:0"}).code == ExitInput);
}

}
