#include <doctest.h>

#include "dgratio/cli.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dgratio::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("compute prints the exact value and a witness") {
    auto r = run({"compute", "--set", "1,4,7"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "alpha-bar = 3/8 (exact)"));
    CHECK(contains(r.out, "witness blocks: "));

    auto odd = run({"compute", "--set", "3,5,7", "--method", "search"});
    CHECK(odd.code == 0);
    CHECK(contains(odd.out, "alpha-bar = 1/2 (exact)"));
    CHECK(contains(odd.out, "all distances odd"));
}

TEST_CASE("compute --json is schema-stable") {
    auto r = run({"compute", "--set", "2,8,24", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"]["name"] == "compute");
    CHECK(j["result"]["value"] == "5/13");
    CHECK(j["result"]["status"] == "exact");
    CHECK(j["result"]["closed_form"]["family"] == "1-4-k");
    CHECK(j.contains("sidecar"));
    j.erase("sidecar");
    auto again = nlohmann::json::parse(run({"compute", "--set", "2,8,24", "--json"}).out);
    again.erase("sidecar");
    CHECK(j.dump() == again.dump());
}

TEST_CASE("budget exhaustion exits 3 and still prints bounds") {
    auto r = run({"compute", "--set", "1,9,30", "--budget", "1e4"});
    CHECK(r.code == 3);
    CHECK(contains(r.out, "<= alpha-bar <="));

    setenv("DGRATIO_BUDGET", "5000", 1);
    auto e = run({"compute", "--set", "1,9,30"});
    unsetenv("DGRATIO_BUDGET");
    CHECK(e.code == 3);
    CHECK(contains(e.out, "node budget of 5000"));
}

TEST_CASE("a resource cap exits 4") {
    auto r = run({"compute", "--set", "1,30", "--method", "stategraph"});
    CHECK(r.code == 4);
    CHECK(contains(r.err, "resource cap"));
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"compute"}).code == 2);
    CHECK(run({"compute", "--set", "1,,4"}).code == 2);
    CHECK(run({"compute", "--set", "1,4", "--method", "magic"}).code == 2);
    CHECK(run({"compute", "--set", "1,4", "--budget", "lots"}).code == 2);
    CHECK(run({"blocks", "--set", "1,3", "--blocks", "(2 3"}).code == 2);
    CHECK(run({"verify", "--family", "nope", "--range", "1..2"}).code == 2);
    CHECK(run({"verify", "--family", "1-4-k", "--range", "9..5"}).code == 2);
    CHECK(run({"table", "--k", "1-3", "--i", "1..2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("blocks checks a user block structure") {
    auto r = run({"blocks", "--set", "1,3,6", "--blocks", "2^2 5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "independent; density 1/3"));

    auto bad = run({"blocks", "--set", "1,4,7", "--blocks", "2 3"});
    CHECK(contains(bad.out, "not independent"));
    CHECK(contains(bad.out, "distance 7"));
}

TEST_CASE("verify reports verdicts and exit status") {
    auto r = run({"verify", "--family", "1-3-2i", "--range", "2..8"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "summary: 7 pass, 0 failure"));

    // A conjecture counterexample is a finding and does not fail the run.
    auto f = run({"verify", "--family", "1-8-k", "--range", "11..11"});
    CHECK(f.code == 0);
    CHECK(contains(f.out, "1 finding"));

    auto j = nlohmann::json::parse(run({"verify", "--family", "1-k-kp1", "--range", "2..6", "--json"}).out);
    CHECK(j["result"]["verdicts"].size() == 5);
    CHECK(j["result"]["verdicts"][0]["predicted"] == "1/4");
}

TEST_CASE("verify --csv writes a predicted/computed series") {
    const std::string path = "test_cli_series.csv";
    auto r = run({"verify", "--family", "1-4-k", "--range", "5..9", "--csv", path});
    CHECK(r.code == 0);
    auto text = slurp(path);
    std::remove(path.c_str());
    CHECK(contains(text, "params,set,predicted_num"));
    CHECK(contains(text, "k=5,\"{1,4,5}\",1,3,exact,1,3"));
}

TEST_CASE("table emits the grid in order with integer denominators") {
    auto r = run({"table", "--k", "1..2", "--i", "1..3"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,i,set,status,value_num,value_den,lower_num,lower_den,upper_num,upper_den,witness_blocks");
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "1,1,\"{1,2,3}\",exact,1,4,1,4,1,4,4");
    CHECK(rows[3].rfind("2,1,\"{1,3,4}\",exact,2,7,", 0) == 0);
    // {1,3,5}: all odd.
    CHECK(rows[4].rfind("2,2,\"{1,3,5}\",exact,1,2,", 0) == 0);

    auto lim = run({"table", "--k", "8..8", "--i", "21..21", "--budget", "10000"});
    CHECK(lim.code == 3);
    CHECK(contains(lim.out, "lower_bound"));
}

TEST_CASE("table output does not depend on the thread count") {
    auto a = run({"--threads", "1", "table", "--k", "1..3", "--i", "1..5"});
    auto b = run({"table", "--k", "1..3", "--i", "1..5", "--threads", "3"});
    CHECK(a.out == b.out);
}

TEST_CASE("related densities and chi-f") {
    CHECK(run({"chi-f", "--set", "1,2,3"}).out == "4\n");
    CHECK(run({"chi-f", "--set", "1,4"}).out == "5/2\n");
    CHECK(run({"chi-f", "--set", "3,5,7"}).out == "2\n");
    CHECK(contains(run({"domination", "--set", "1"}).out, "domination density = 1/3"));
    CHECK(contains(run({"domination", "--set", "1,2"}).out, "domination density = 1/5"));
    CHECK(contains(run({"idcode", "--set", "1", "--r", "1"}).out, "identifying code density = 1/2"));
    CHECK(contains(run({"coloring", "--set", "1,2", "--k", "3"}).out, "period 3"));
    CHECK(contains(run({"coloring", "--set", "1,2", "--k", "2"}).out, "no periodic proper 2-coloring"));
}

TEST_CASE("families lists every id") {
    auto j = nlohmann::json::parse(run({"families", "--json"}).out);
    CHECK(j["result"].size() > 40);
    auto text = run({"families"}).out;
    CHECK(contains(text, "1-4-k\ttheorem"));
    CHECK(contains(text, "1-6-k\tconjecture"));
}
