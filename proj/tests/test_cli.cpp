#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "gapn/serialization.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = gapn::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kField35 = "p=3,n=5,mod=1,2,0,0,0,1";

} // namespace

TEST_CASE("check reports the GAPN/GAB verdicts")
{
    CliResult r = run_cli({"check", "--field", kField35, "--mono", "11"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["is_gapn"] == true);
    CHECK(j["is_gab"] == false);
    CHECK(j["degree"] == 3);
    CHECK(j["fourier_sum"]["equality"] == true);
    CHECK(j["spectrum_multiset"]["3"] == 19602);
    CHECK(j["function"]["poly"][0][0] == 11);

    CliResult r17 = run_cli({"check", "--field", kField35, "--mono", "17"});
    REQUIRE(r17.code == 0);
    json j17 = json::parse(r17.out);
    CHECK(j17["is_gapn"] == false);
    CHECK(j17["is_gab"] == true);
    CHECK(j17["degree"] == 5);
    CHECK(j17["walsh_value_set"] == json::array({"-27", "0", "27"}));
}

TEST_CASE("check handles every function source")
{
    CliResult inv = run_cli({"check", "--field", "p=3,n=3", "--inverse"});
    REQUIRE(inv.code == 0);
    CHECK(json::parse(inv.out)["is_gapn"] == true);

    CliResult gold = run_cli({"check", "--field", "p=5,n=2", "--gold", "1"});
    REQUIRE(gold.code == 0);
    CHECK(json::parse(gold.out)["is_gapn"] == true);

    CliResult gg = run_cli({"check", "--field", kField35, "--general-gold", "2,2"});
    REQUIRE(gg.code == 0);
    CHECK(json::parse(gg.out)["function"]["poly"][0][0] == 19);

    CliResult bin = run_cli({"check", "--field", "p=3,n=3", "--binomial", "1"});
    REQUIRE(bin.code == 0);
    CHECK(json::parse(bin.out)["is_gapn"] == true);

    CliResult poly = run_cli({"check", "--field", "p=3,n=3", "--poly", "5:1,1:2"});
    REQUIRE(poly.code == 0);
    CHECK(json::parse(poly.out)["degree"].get<int>() >= 1);

    // two sources at once is a configuration error
    CliResult both =
        run_cli({"check", "--field", kField35, "--mono", "11", "--inverse"});
    CHECK(both.code == 2);
}

TEST_CASE("check --rows embeds the full spectrum")
{
    CliResult r = run_cli({"check", "--field", "p=3,n=2", "--gold", "1", "--rows"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.contains("rows"));
    CHECK(j["rows"].size() == 8);
}

TEST_CASE("a degree-1 function on the prime field")
{
    // on F_p itself every row count is trivially bounded by p and the
    // Walsh values land in {0, p}, so the definitions degenerate: the
    // identity is both GAPN and GAB there, with the whole field on b = 0
    CliResult r = run_cli({"check", "--field", "p=3,n=1,mod=1,1", "--mono", "1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["degree"] == 1);
    CHECK(j["is_gapn"] == true);
    CHECK(j["is_gab"] == true);
    CHECK(j["spectrum_multiset"] == json::object({{"3", 2}}));
}

TEST_CASE("exit codes separate parse and guard failures")
{
    CHECK(run_cli({"check", "--field", "bogus", "--mono", "3"}).code == 2);
    CHECK(run_cli({"check", "--field", "p=3,n=2,mod=0,0,1", "--mono", "3"}).code == 2);
    CHECK(run_cli({"check", "--mono", "3"}).code == 2);
    CHECK(run_cli({"check", "--field", "p=3,n=9", "--mono", "3"}).code == 3);
    CHECK(run_cli({"search", "--field", "p=2,n=13"}).code == 3);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("search emits one deterministic record per exponent coset")
{
    CliResult r = run_cli({"search", "--field", "p=2,n=5"});
    REQUIRE(r.code == 0);
    std::map<int, json> by_d;
    std::istringstream lines(r.out);
    std::string line;
    int prev = 0;
    while (std::getline(lines, line)) {
        json rec = json::parse(line);
        int d = rec["d"].get<int>();
        CHECK(d > prev); // ascending representatives
        prev = d;
        by_d[d] = rec;
    }
    // the Gold cosets 3 and 5 and the inverse coset 15 are all APN
    REQUIRE(by_d.count(3));
    REQUIRE(by_d.count(5));
    REQUIRE(by_d.count(15));
    CHECK(by_d[3]["is_gapn"] == true);
    CHECK(by_d[3]["degree"] == 2);
    CHECK(by_d[5]["is_gapn"] == true);
    CHECK(by_d[15]["is_gapn"] == true);
    for (auto& [d, rec] : by_d) {
        // the representative is the smallest orbit member that is itself a
        // sweep exponent; the orbit of the linear family also contains 1
        auto coset = rec["coset"].get<std::vector<int>>();
        int least = 0;
        for (int e : coset)
            if (e >= 2 && (least == 0 || e < least))
                least = e;
        CHECK(least == d);
    }

    CliResult again = run_cli({"search", "--field", "p=2,n=5"});
    CHECK(again.out == r.out); // byte-identical reruns
}

TEST_CASE("search surfaces the notable F_3^5 exponents")
{
    CliResult r = run_cli({"search", "--field", kField35});
    REQUIRE(r.code == 0);
    bool saw_11 = false, saw_17 = false, saw_inverse = false;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        json rec = json::parse(line);
        auto coset = rec["coset"].get<std::vector<int>>();
        if (rec["d"] == 11) {
            saw_11 = true;
            CHECK(rec["is_gapn"] == true);
            CHECK(rec["is_gab"] == false);
            CHECK(rec["degree"] == 3);
        }
        if (rec["d"] == 17) {
            saw_17 = true;
            CHECK(rec["is_gapn"] == false);
            CHECK(rec["is_gab"] == true);
        }
        if (std::find(coset.begin(), coset.end(), 241) != coset.end()) {
            saw_inverse = true;
            CHECK(rec["is_gapn"] == true); // x^{241} is the inverse permutation
        }
    }
    CHECK(saw_11);
    CHECK(saw_17);
    CHECK(saw_inverse);
}

TEST_CASE("search on a tiny field yields an empty stream")
{
    CliResult r = run_cli({"search", "--field", "p=3,n=1,mod=1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("dualarc exit codes")
{
    CliResult ok = run_cli({"dualarc", "--field", kField35, "--mono", "11", "--munu",
                            "gold-identity", "--seed", "7"});
    REQUIRE(ok.code == 0);
    json j = json::parse(ok.out);
    CHECK(j["pairwise_ok"] == true);
    CHECK(j["triples_ok"] == true);
    CHECK(j["m_set"].size() >= 4);

    CliResult mono = run_cli({"dualarc", "--field", kField35, "--mono", "11", "--munu",
                              "monomial-inverse", "--seed", "7"});
    CHECK(mono.code == 0);

    CliResult inv = run_cli({"dualarc", "--field", kField35, "--inverse", "--munu",
                             "monomial-inverse"});
    CHECK(inv.code == 4);

    CliResult n1 = run_cli({"dualarc", "--field", "p=3,n=1,mod=1,1", "--mono", "1"});
    CHECK(n1.code == 4);

    CliResult bad_m = run_cli({"dualarc", "--field", "p=3,n=3", "--gold", "1",
                               "--m-set", "0,1,2"});
    CHECK(bad_m.code == 4);

    CliResult explicit_m = run_cli({"dualarc", "--field", "p=3,n=3", "--gold", "1",
                                    "--m-set", "0,1,3,14"});
    CHECK(explicit_m.code == 0);
}

TEST_CASE("reports can be written to a file and are reproducible")
{
    const char* path = "cli_report_tmp.json";
    CliResult r1 = run_cli({"dualarc", "--field", "p=3,n=3", "--gold", "1", "--seed",
                            "9", "--json", path});
    REQUIRE(r1.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    json j = json::parse(buf.str());
    CHECK(j["pairwise_ok"] == true);

    CliResult r2 = run_cli({"dualarc", "--field", "p=3,n=3", "--gold", "1", "--seed",
                            "9"});
    CHECK(buf.str() == r2.out);
    std::remove(path);
}

TEST_CASE("lut files round-trip through check")
{
    // x^5 on F_3^2 written out as an explicit lookup table file
    gapn::FieldPtr f = gapn::make_field(3, 2);
    gapn::FunctionTable gold = gapn::tabulate(gapn::make_gold(f, 1));
    const char* path = "cli_lut_tmp.json";
    {
        std::ofstream out(path);
        out << gapn::function_to_json(gold);
    }

    CliResult from_file = run_cli({"check", "--lut", path});
    REQUIRE(from_file.code == 0);
    CliResult direct = run_cli({"check", "--field", "p=3,n=2", "--gold", "1"});
    REQUIRE(direct.code == 0);

    json jf = json::parse(from_file.out);
    json jd = json::parse(direct.out);
    CHECK(jf["is_gapn"] == jd["is_gapn"]);
    CHECK(jf["degree"] == jd["degree"]);
    CHECK(jf["spectrum_multiset"] == jd["spectrum_multiset"]);

    // a --field that disagrees with the file is rejected
    CliResult clash = run_cli({"check", "--field", "p=3,n=3", "--lut", path});
    CHECK(clash.code == 2);
    std::remove(path);
}
