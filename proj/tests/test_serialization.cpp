#include <doctest.h>

#include <json.hpp>

#include "gapn/serialization.hpp"
#include "helpers.hpp"

using namespace gapn;
using nlohmann::json;

TEST_CASE("function JSON round-trips in both shapes")
{
    FieldPtr f = make_field(3, 3);
    Rng rng(51);
    std::vector<std::uint32_t> pool;
    for (std::uint32_t d = 0; d < f->size(); ++d)
        pool.push_back(d);

    for (int trial = 0; trial < 25; ++trial) {
        Polynomial poly = gapn::test::random_poly(f, rng, pool);
        LoadedFunction back = function_from_json(function_to_json(poly));
        REQUIRE(back.poly.has_value());
        CHECK(*back.poly == poly);
        CHECK(back.table == tabulate(poly));
        CHECK(back.field->to_string() == f->to_string());

        FunctionTable t = gapn::test::random_table(f, rng);
        LoadedFunction back2 = function_from_json(function_to_json(t));
        CHECK_FALSE(back2.poly.has_value());
        CHECK(back2.table == t);
    }
}

TEST_CASE("malformed function JSON is rejected")
{
    CHECK_THROWS_AS(function_from_json("not json"), gapn::ParseError);
    CHECK_THROWS_AS(function_from_json("{}"), gapn::ParseError);
    CHECK_THROWS_AS(function_from_json(R"({"field":"p=3,n=2"})"), gapn::ParseError);
    CHECK_THROWS_AS(function_from_json(R"({"field":"p=3,n=2","poly":[[1]]})"),
                    gapn::ParseError);
    CHECK_THROWS_AS(function_from_json(R"({"field":"p=3,n=2","lut":[0,1]})"),
                    BadParametersError); // wrong length
}

TEST_CASE("spectrum report schema")
{
    FieldPtr f = make_field(3, 2);
    FunctionTable gold = tabulate(make_gold(f, 1));
    SpectrumReport rep = spectrum(gold);
    json j = json::parse(spectrum_to_json(rep, function_to_json(gold)));
    CHECK(j["field"] == f->to_string());
    CHECK(j["function"]["field"] == f->to_string());
    CHECK(j["is_gapn"] == true);
    CHECK(j["rows"].size() == f->size() - 1);
    for (const auto& row : j["rows"]) {
        std::uint64_t total = 0;
        for (const auto& [b, c] : row["counts"].items())
            total += c.get<std::uint64_t>();
        CHECK(total == f->size());
    }
    CHECK(j["multiset"]["3"] == 24); // 8 rows x 3 nonzero counts

    json no_rows = json::parse(spectrum_to_json(rep, function_to_json(gold), false));
    CHECK_FALSE(no_rows.contains("rows"));
}

TEST_CASE("walsh report schema")
{
    FieldPtr f = make_field(3, 2);
    FunctionTable gold = tabulate(make_gold(f, 1));
    WalshReport rep = walsh_report(gold);
    json j = json::parse(walsh_to_json(rep, function_to_json(gold)));
    CHECK(j["field"] == f->to_string());
    CHECK(j.contains("value_set"));
    CHECK(j["is_gab"].is_boolean());
    CHECK(j["fourier_sum"]["equality"] == true); // GAPN, so equality holds
    CHECK(j["fourier_sum"]["value"].is_string());
}

TEST_CASE("arc report schema")
{
    FieldPtr f = make_field(3, 3);
    FunctionTable gold = tabulate(make_gold(f, 1));
    auto m = greedy_cap_set(*f, 3);
    auto arc = build_arc(gold, MuNuConfig::gold_identity(), m);
    ArcReport rep = verify_dual_arc(*f, arc);
    json j = json::parse(arc_to_json(rep, arc));
    CHECK(j["m_set"].size() == m.size());
    CHECK(j["pairwise_ok"] == true);
    CHECK(j["triples_ok"] == true);
    CHECK(j["subspaces"].size() == m.size());
    for (const auto& sub : j["subspaces"]) {
        CHECK(sub["basis"].size() == 3);
        CHECK(sub["basis"][0].size() == 6);
    }
}
