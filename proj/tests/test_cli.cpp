#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli.hpp"
#include "json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using logmonoid::io::Json;

namespace {

struct Result {
    int code;
    std::string out, err;
    Json report() const { return Json::parse(out); }
    Json error() const { return Json::parse(err).at("error"); }
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = logmonoid::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string file(const std::string& name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / ("logmonoid_test_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

const std::string kFree2 = R"({"ambient": {"free_rank": 2}, "generators": [[1, 0], [0, 1]]})";

std::string multiplication(int n) {
    return R"({"source": {"ambient": {"free_rank": 1}, "generators": [[1]]},
               "target": {"ambient": {"free_rank": 1}, "generators": [[1]]}, "matrix": [[)" +
           std::to_string(n) + "]]}";
}

}  // namespace

TEST_CASE("monoid sat of <2,3>") {
    Result r = cli({"monoid", "sat", "--in", file("m23.json", R"({"ambient": {"free_rank": 1}, "generators": [[2], [3]]})")});
    REQUIRE(r.code == 0);
    Json rep = r.report();
    CHECK(rep["results"]["generators"] == Json::parse("[[1]]"));
    CHECK(rep["command"]["verb"] == "monoid");
    CHECK(rep["command"]["subverb"] == "sat");
    CHECK(rep["notes"].empty());
}

TEST_CASE("monoid props and hilbert") {
    Json p = cli({"monoid", "props", "--in", file("z2.json", kFree2)}).report()["results"];
    CHECK(p["toric"] == true);
    CHECK(p["sharp"] == true);
    Json h = cli({"monoid", "hilbert", "--in", file("cone.json", R"({"dim": 2, "rays": [[1, 0], [1, 2]]})")}).report();
    CHECK(h["results"]["hilbert_basis"] == Json::parse("[[1, 0], [1, 1], [1, 2]]"));
}

TEST_CASE("kummer coker of [6]") {
    Result r = cli({"kummer", "coker", "--in", file("u6.json", multiplication(6))});
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"] == Json::parse(R"({"G": {"free_rank": 0, "torsion": [6]}})"));
}

TEST_CASE("kummer check reports the failing clause") {
    const std::string incl = R"({"source": {"ambient": {"free_rank": 1}, "generators": [[1]]},
        "target": {"ambient": {"free_rank": 2}, "generators": [[1, 0], [0, 1]]}, "images": [[1, 0]]})";
    Json res = cli({"kummer", "check", "--in", file("incl.json", incl)}).report()["results"];
    CHECK(res["kummer"] == false);
    CHECK(res["clause"] == "finite_cokernel");
    CHECK(res["witness"] == Json::parse("[0, 1]"));
    CHECK(cli({"kummer", "check", "--in", file("u2.json", multiplication(2))}).report()["results"]["kummer"] == true);
    CHECK(cli({"kummer", "ramification", "--in", file("u6.json", multiplication(6))}).report()["results"]["ramification_index"] == 6);
}

TEST_CASE("covers enum on Z>=0^2 at m = 2") {
    Result r = cli({"covers", "enum", "--point", file("z2.json", kFree2), "--m", "2"});
    REQUIRE(r.code == 0);
    Json covers = r.report()["results"]["covers"];
    REQUIRE(covers.size() == 5);
    std::multiset<long long> degrees;
    for (const auto& c : covers) {
        degrees.insert(c["degree"].get<long long>());
        CHECK(c["fiber"].size() == c["degree"].get<size_t>());
    }
    CHECK(degrees == std::multiset<long long>{1, 2, 2, 2, 4});
}

TEST_CASE("covers fiber-product and quotient by index") {
    const std::string pt = file("z1.json", R"({"ambient": {"free_rank": 1}, "generators": [[1]]})");
    Json covers = cli({"covers", "enum", "--in", pt, "--m", "4"}).report()["results"]["covers"];
    REQUIRE(covers.size() == 3);
    size_t full = 0;
    while (covers[full]["degree"] != 4) ++full;
    Result fp = cli({"covers", "fiber-product", "--in", pt, "--m", "4", "--a", std::to_string(full), "--b", std::to_string(full)});
    REQUIRE(fp.code == 0);
    CHECK(fp.report()["results"]["components"] == 4);
    Result q = cli({"covers", "quotient", "--in", pt, "--m", "4", "--cover", std::to_string(full), "--subgroup",
                    file("h.json", "[[2]]")});
    REQUIRE(q.code == 0);
    CHECK(q.report()["results"]["cover"]["degree"] == 2);
    Result bad = cli({"covers", "fiber-product", "--in", pt, "--m", "4", "--a", "7", "--b", "0"});
    CHECK(bad.code == 1);
    CHECK(bad.error()["kind"] == "input");
}

TEST_CASE("enumeration bound from the flag and the environment") {
    const std::string pt = file("z2.json", kFree2);
    Result flag = cli({"covers", "enum", "--in", pt, "--m", "2", "--bound", "3"});
    CHECK(flag.code == 2);
    CHECK(flag.error()["kind"] == "bound");
    setenv("LOGMONOID_BOUND", "3", 1);
    CHECK(cli({"covers", "enum", "--in", pt, "--m", "2"}).code == 2);
    Result wins = cli({"covers", "enum", "--in", pt, "--m", "2", "--bound", "4"});
    CHECK(wins.code == 0);
    unsetenv("LOGMONOID_BOUND");
}

TEST_CASE("cohom verbs") {
    const std::string trivial2 = file("t2.json", R"({"q": 3, "dim": 1, "gammas": [[[1]], [[1]]]})");
    CHECK(cli({"cohom", "koszul", "--module", trivial2}).report()["results"]["dims"] == Json::parse("[1, 2, 1]"));
    const std::string sign = file("sign.json", R"({"q": 3, "dim": 1, "gammas": [[[2]]]})");
    Json nearby = cli({"cohom", "nearby", "--module", sign, "--m", "2"}).report()["results"];
    CHECK(nearby["dims"] == Json::parse("[1, 0]"));
    CHECK(nearby["tower_checked"] == true);
    const std::string j2 = file("j2.json", R"({"q": 5, "dim": 2, "gammas": [[[1, 1], [0, 1]]]})");
    CHECK(cli({"cohom", "nearby", "--module", j2}).report()["results"]["dims"] == Json::parse("[2, 0]"));
    Json chi = cli({"cohom", "character", "--in", file("z2.json", kFree2), "--m", "2", "--q", "3", "--chi", "1,0"})
                   .report()["results"];
    CHECK(chi["dims"] == Json::parse("[0, 0, 0]"));
    CHECK(chi["trivial"] == false);
}

TEST_CASE("monalg cech reports the verified window") {
    Result r = cli({"monalg", "cech", "--u", file("u2.json", multiplication(2)), "--q", "3"});
    REQUIRE(r.code == 0);
    Json rep = r.report();
    CHECK(rep["results"]["exact"] == true);
    CHECK(rep["results"]["term_dims"] == Json::parse("[4, 7, 14, 28]"));
    CHECK(rep["notes"].size() == 1);
}

TEST_CASE("usage, input and io errors") {
    Result unknown = cli({"frobnicate"});
    CHECK(unknown.code == 1);
    CHECK(unknown.error()["kind"] == "usage");
    Result flag = cli({"monoid", "sat", "--in", file("z2.json", kFree2), "--frob", "1"});
    CHECK(flag.code == 1);
    CHECK(flag.error()["kind"] == "usage");
    Result missing = cli({"monoid", "sat", "--in", "/nonexistent/P.json"});
    CHECK(missing.code == 1);
    CHECK(missing.error()["kind"] == "io");
    Result garbled = cli({"monoid", "sat", "--in", file("bad.json", "{\"ambient\": ")});
    CHECK(garbled.code == 1);
    CHECK(garbled.error()["kind"] == "input");
    CHECK(cli({"replicate", "all"}).error()["kind"] == "usage");
    CHECK(cli({"monoid"}).code == 1);
}

TEST_CASE("reports are byte-stable and --out writes the same bytes") {
    std::vector<std::string> args{"covers", "enum", "--in", file("z2.json", kFree2), "--m", "3"};
    Result a = cli(args), b = cli(args);
    CHECK(a.out == b.out);
    const auto out = (std::filesystem::temp_directory_path() / "logmonoid_test_cli_report.json").string();
    args.insert(args.end(), {"--out", out});
    Result c = cli(args);
    CHECK(c.out.empty());
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == a.out);
}

TEST_CASE("replicate a single criterion") {
    Result r = cli({"replicate", "2", "--seed", "3"});
    REQUIRE(r.code == 0);
    Json res = r.report()["results"];
    CHECK(res["passed"] == true);
    REQUIRE(res["criteria"].size() == 1);
    CHECK(res["criteria"][0]["id"] == 2);
    CHECK(cli({"replicate", "12", "--seed", "3"}).code == 1);
}
