#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commgraph/cli.hpp"
#include "support.hpp"

using namespace commgraph;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus_path(const std::string& name)
{
    return (testsupport::corpus_dir() / (name + ".json")).string();
}

std::filesystem::path temp_file(const std::string& name, const std::string& body)
{
    const auto path = std::filesystem::temp_directory_path() / ("commgraph_test_" + name);
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze examples")
{
    const auto s4 = invoke({"analyze", corpus_path("sym4")});
    CHECK(s4.code == cli::kOk);
    const auto j = json::parse(s4.out);
    CHECK(j["kind"] == "TwoFrobenius");
    CHECK(j["K_order"] == 4);
    CHECK(j["L_order"] == 12);

    const auto ab = json::parse(invoke({"analyze", corpus_path("c6")}).out);
    CHECK(ab["kind"] == "HasCentre");

    const auto s33 = json::parse(invoke({"analyze", corpus_path("sym3_x_sym3")}).out);
    CHECK(s33["kind"] == "ConnectedDiameter");
    CHECK(s33["diameter"] == 3);
}

TEST_CASE("analyze keeps input order and sorts keys")
{
    const auto r = invoke({"--jobs", "3", "analyze", corpus_path("sym4"), corpus_path("c6"), corpus_path("alt4"), corpus_path("sym3")});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j.size() == 4);
    CHECK(j[0]["kind"] == "TwoFrobenius");
    CHECK(j[1]["kind"] == "HasCentre");
    CHECK(j[2]["kernel_order"] == 4);
    CHECK(j[3]["kernel_order"] == 3);
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("analyze never reports the sentinel on the corpus")
{
    std::vector<std::string> args{"--jobs", "4", "analyze"};
    for (const auto& p : testsupport::corpus_files()) args.push_back(p.string());
    const auto r = invoke(args);
    CHECK(r.code == cli::kOk);
    for (const auto& v : json::parse(r.out)) {
        CHECK(v["kind"] != "DisconnectedOther");
        CHECK_FALSE(v.contains("error"));
    }
}

TEST_CASE("exit codes")
{
    CHECK(invoke({"analyze", "/nonexistent/group.json"}).code == cli::kInputError);
    const auto bad = temp_file("bad.json", "{\"type\": \"permutation\", \"degree\": 3, \"generators\": [[0, 0, 1]]}");
    CHECK(invoke({"analyze", bad.string()}).code == cli::kInputError);
    const auto garbage = temp_file("garbage.json", "not json");
    CHECK(invoke({"analyze", garbage.string()}).code == cli::kInputError);

    const auto capped = invoke({"--cap", "10", "analyze", corpus_path("sym4")});
    CHECK(capped.code == cli::kCapExceeded);
    CHECK(json::parse(capped.out)["error"].get<std::string>().find("CapExceeded") != std::string::npos);
    // Several files: the worst code wins.
    CHECK(invoke({"--cap", "30", "analyze", corpus_path("sym4"), corpus_path("alt5"), "/nonexistent.json"}).code ==
          cli::kCapExceeded);

    CHECK(invoke({"--format", "xml", "analyze", corpus_path("sym4")}).code == cli::kInputError);
    CHECK(invoke({"--jobs", "0", "analyze", corpus_path("sym4")}).code == cli::kInputError);
    CHECK(invoke({}).code == cli::kInputError);
    CHECK(invoke({"bogus"}).code == cli::kInputError);
}

TEST_CASE("element cap from the environment")
{
    ::setenv(cli::kCapEnv, "10", 1);
    const int capped = invoke({"analyze", corpus_path("sym4")}).code;
    ::setenv(cli::kCapEnv, "1000", 1);
    const int ok = invoke({"analyze", corpus_path("sym4")}).code;
    ::unsetenv(cli::kCapEnv);
    CHECK(capped == cli::kCapExceeded);
    CHECK(ok == cli::kOk);
    // An explicit flag wins over the environment.
    ::setenv(cli::kCapEnv, "10", 1);
    const int flagged = invoke({"--cap", "1000", "analyze", corpus_path("sym4")}).code;
    ::unsetenv(cli::kCapEnv);
    CHECK(flagged == cli::kOk);
}

TEST_CASE("paper-verify")
{
    const auto r = invoke({"paper-verify"});
    CHECK(r.code == cli::kOk);
    const auto j = json::parse(r.out);
    CHECK(j["group_order"] == "54173193341944394740910525");
    CHECK(j["params"] == json{{"q", 11}, {"r", 5}, {"t", 3221}});
    for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");

    CHECK(invoke({"paper-verify", "--q", "11", "--r", "3", "--t", "3221"}).code == cli::kInputError);
    CHECK(invoke({"paper-verify", "--q", "13", "--r", "5", "--t", "3221"}).code == cli::kInputError);

    // Valid triple whose field exceeds the default cap: the build check fails.
    const auto big = invoke({"paper-verify", "--q", "31", "--r", "5", "--t", "11"});
    CHECK(big.code == cli::kCheckFailed);
    CHECK(big.err.find("check failed: build") != std::string::npos);
}

TEST_CASE("search-params")
{
    const auto r = invoke({"search-params", "--q-max", "11"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"([{"q":11,"r":5,"t":3221}])"));
    CHECK(json::parse(invoke({"search-params", "--q-max", "7"}).out).empty());
    CHECK(json::parse(invoke({"search-params", "--q-max", "3"}).out).empty());
    CHECK(invoke({"search-params", "--q-max", "2"}).code == cli::kInputError);
    CHECK(invoke({"--format", "csv", "search-params", "--q-max", "11"}).out == "q,r,t\n11,5,3221\n");
}

TEST_CASE("csv output")
{
    const auto r = invoke({"--format", "csv", "analyze", corpus_path("sym4"), corpus_path("sym3_x_sym3")});
    std::istringstream lines(r.out);
    std::string header, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == "file,kind,order,kernel_order,K_order,L_order,components,diameter,quotient_metacyclic,error");
    CHECK(row1 == corpus_path("sym4") + ",TwoFrobenius,24,,4,12,5,,true,");
    CHECK(row2 == corpus_path("sym3_x_sym3") + ",ConnectedDiameter,36,,,,1,3,,");

    const auto pv = invoke({"paper-verify", "--format", "csv"});
    CHECK(pv.out.rfind("name,status,detail\nbuild,pass,", 0) == 0);

    const auto ge = invoke({"--format", "csv", "graph-export", corpus_path("sym3")});
    CHECK(ge.out.rfind("class,size,rep\n", 0) == 0);
}

TEST_CASE("graph-export")
{
    const auto r = invoke({"graph-export", corpus_path("sym3_x_sym3")});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["diameter"] == 3);
    CHECK(j["components"] == 1);
    std::size_t vertices = 0;
    for (const auto& c : j["classes"]) vertices += c["size"].get<std::size_t>();
    CHECK(vertices == 35);
    const auto ab = json::parse(invoke({"graph-export", corpus_path("c6")}).out);
    CHECK(ab["classes"].empty());
}

TEST_CASE("output is deterministic and --out writes the same bytes")
{
    const std::vector<std::string> files{corpus_path("sym3_wr_c2"), corpus_path("agaml1_8"), corpus_path("dihedral_10")};
    auto args = [&](const std::string& jobs) {
        std::vector<std::string> a{"--jobs", jobs, "analyze"};
        a.insert(a.end(), files.begin(), files.end());
        return a;
    };
    const auto one = invoke(args("1"));
    CHECK(invoke(args("1")).out == one.out);
    CHECK(invoke(args("3")).out == one.out);

    const auto path = std::filesystem::temp_directory_path() / "commgraph_test_out.json";
    std::filesystem::remove(path);
    auto with_out = args("2");
    with_out.insert(with_out.begin(), {"--out", path.string()});
    const auto r = invoke(with_out);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == one.out);
}

}  // TEST_SUITE
