#include "cqg/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cqg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cqg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: quantum dimension in q") {
    auto r = cli({"qdim", "--algebra", "A1", "--mu", "1", "--format", "pretty"});
    CHECK(r.code == 0);
    CHECK(r.out == "q + q^-1\n");
    r = cli({"qdim", "--algebra", "A2", "--mu", "1,1", "--format", "pretty"});
    // [2][4]
    CHECK(r.out == "q^4 + 2*q^2 + 2 + 2*q^-2 + q^-4\n");
}

TEST_CASE("cli: report schema") {
    auto r = cli({"verify-plancherel", "--algebra", "A1", "--max-weight", "1/2"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "verify-plancherel");
    CHECK(doc["status"] == "pass");
    const auto& reports = doc["result"]["reports"];
    REQUIRE(reports.size() == 25);
    for (const auto& rep : reports) {
        for (const char* key : {"algebra", "symbol", "pipelines", "expected", "status", "grade", "wall_time_ms"})
            CHECK(rep.contains(key));
        for (const char* key : {"closed", "direct", "tensor"}) CHECK(rep["pipelines"].contains(key));
        CHECK(rep["wall_time_ms"].is_null());
        CHECK(rep["grade"] == "exact");
    }
    r = cli({"verify-plancherel", "--algebra", "A1", "--max-weight", "0", "--timing"});
    CHECK(nlohmann::json::parse(r.out)["result"]["reports"][0]["wall_time_ms"].is_number());
}

TEST_CASE("cli: spins and coordinates in rank one") {
    const auto a = cli({"measure", "--mu", "3/2"});
    const auto b = cli({"measure", "--mu", "3"});
    CHECK(a.code == 0);
    CHECK(nlohmann::json::parse(a.out)["result"] == nlohmann::json::parse(b.out)["result"]);
    CHECK(cli({"measure", "--mu", "1/3"}).code == 2);
    CHECK(cli({"measure", "--algebra", "A2", "--mu", "1/2,0"}).code == 2);
}

TEST_CASE("cli: usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"qdim", "--mu"}).code == 2);
    CHECK(cli({"qdim", "--mu", "x"}).code == 2);
    CHECK(cli({"qdim", "--mu", "1", "--format", "xml"}).code == 2);
    CHECK(cli({"classical-limit", "--mu", "1", "--nu", "0.1,0.2"}).code == 2);
    CHECK(cli({"haar", "--word", "v[1;0,0]"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}
