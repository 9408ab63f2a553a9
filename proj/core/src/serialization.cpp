#include "gapn/serialization.hpp"

#include <json.hpp>

namespace gapn {

using nlohmann::json;

std::string function_to_json(const Polynomial& poly)
{
    json j;
    j["field"] = poly.field()->to_string();
    json terms = json::array();
    for (const auto& [d, c] : poly.coeffs())
        terms.push_back(json::array({d, c}));
    j["poly"] = std::move(terms);
    return j.dump();
}

std::string function_to_json(const FunctionTable& table)
{
    json j;
    j["field"] = table.field->to_string();
    j["lut"] = table.values;
    return j.dump();
}

LoadedFunction function_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw gapn::ParseError(std::string("bad function JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("field"))
        throw gapn::ParseError("function JSON needs a \"field\" key");
    LoadedFunction out;
    out.field = Field::parse(j["field"].get<std::string>());
    if (j.contains("poly")) {
        std::map<std::uint32_t, Elem> coeffs;
        for (const auto& term : j["poly"]) {
            if (!term.is_array() || term.size() != 2)
                throw gapn::ParseError("poly terms must be [exponent, coefficient]");
            coeffs[term[0].get<std::uint32_t>()] = term[1].get<Elem>();
        }
        out.poly = Polynomial(out.field, std::move(coeffs));
        out.table = tabulate(*out.poly);
    } else if (j.contains("lut")) {
        std::vector<Elem> values = j["lut"].get<std::vector<Elem>>();
        out.table = FunctionTable(out.field, std::move(values));
    } else {
        throw gapn::ParseError("function JSON needs \"poly\" or \"lut\"");
    }
    return out;
}

std::string spectrum_to_json(const SpectrumReport& report,
                             const std::string& function_json, bool include_rows)
{
    json j;
    j["field"] = report.field->to_string();
    j["function"] = json::parse(function_json);
    if (include_rows) {
        json rows = json::array();
        for (const auto& row : report.rows) {
            json counts = json::object();
            for (const auto& [b, c] : row.counts)
                counts[std::to_string(b)] = c;
            rows.push_back({{"a", row.a}, {"counts", std::move(counts)}});
        }
        j["rows"] = std::move(rows);
    }
    json multiset = json::object();
    for (const auto& [count, freq] : report.multiset)
        multiset[std::to_string(count)] = freq;
    j["multiset"] = std::move(multiset);
    j["is_gapn"] = report.is_gapn;
    return j.dump();
}

std::string walsh_to_json(const WalshReport& report, const std::string& function_json)
{
    json j;
    j["field"] = report.field->to_string();
    j["function"] = json::parse(function_json);
    json values = json::array();
    for (const auto& v : report.value_set)
        values.push_back(v.to_string());
    j["value_set"] = std::move(values);
    j["is_gab"] = report.is_gab;
    j["fourier_sum"] = {{"value", to_string_i128(report.fourier.value)},
                        {"threshold", to_string_i128(report.fourier.threshold)},
                        {"equality", report.fourier.equality}};
    return j.dump();
}

std::string arc_to_json(const ArcReport& report, const std::vector<SubspaceBasis>& arc)
{
    json j;
    j["m_set"] = report.m_set;
    json subs = json::array();
    for (const auto& sub : arc) {
        json rows = json::array();
        for (std::size_t r = 0; r < sub.rows.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < sub.rows.cols(); ++c)
                row.push_back(sub.rows.at(r, c));
            rows.push_back(std::move(row));
        }
        subs.push_back({{"a", sub.a}, {"basis", std::move(rows)}});
    }
    j["subspaces"] = std::move(subs);
    j["pairwise_ok"] = report.pairwise_ok;
    j["triples_ok"] = report.triples_ok;
    j["hyperoval_cardinality"] = report.hyperoval_cardinality;
    if (report.first_failure)
        j["first_failure"] = *report.first_failure;
    return j.dump();
}

} // namespace gapn
