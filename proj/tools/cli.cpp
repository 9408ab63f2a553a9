#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapn/diff_analysis.hpp"
#include "gapn/dual_arcs.hpp"
#include "gapn/serialization.hpp"
#include "gapn/walsh.hpp"

namespace gapn::cli {

namespace {

using nlohmann::json;

constexpr std::uint32_t kCheckSizeGuard = 1u << 13;
constexpr std::uint32_t kSearchSizeGuard = 2187; // 3^7
constexpr std::uint64_t kDualArcPairGuard = kMaxFieldSize;

struct RunConfig {
    std::string field_spec;
    // function source: exactly one may be set
    std::optional<std::uint32_t> mono;
    std::string poly;
    std::string lut_path;
    std::optional<std::uint32_t> gold;
    std::string general_gold;
    bool inverse = false;
    std::optional<std::uint32_t> binomial;

    unsigned threads = 1;
    std::uint64_t seed = 1;
    std::string json_path;
    std::string munu;
    std::string m_set;
    bool rows = false;
};

std::vector<std::uint32_t> parse_u32_list(const std::string& text, char sep)
{
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty())
            throw gapn::ParseError("empty entry in list \"" + text + "\"");
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    if (out.empty())
        throw gapn::ParseError("empty list");
    return out;
}

struct Source {
    FieldPtr field;
    std::optional<Polynomial> poly;
    FunctionTable table;
    std::string pretty;
};

Source load_function(const RunConfig& cfg)
{
    int sources = int(cfg.mono.has_value()) + int(!cfg.poly.empty())
                  + int(!cfg.lut_path.empty()) + int(cfg.gold.has_value())
                  + int(!cfg.general_gold.empty()) + int(cfg.inverse)
                  + int(cfg.binomial.has_value());
    if (sources != 1)
        throw gapn::ParseError("exactly one function source is required "
                               "(--mono/--poly/--lut/--gold/--general-gold/--inverse/--binomial)");

    Source src;
    if (!cfg.lut_path.empty()) {
        std::ifstream in(cfg.lut_path);
        if (!in)
            throw gapn::ParseError("cannot open " + cfg.lut_path);
        std::stringstream buf;
        buf << in.rdbuf();
        LoadedFunction loaded = function_from_json(buf.str());
        if (!cfg.field_spec.empty()
            && Field::parse(cfg.field_spec)->to_string() != loaded.field->to_string())
            throw gapn::SpecMismatchError("--field disagrees with the file's field");
        src.field = loaded.field;
        src.poly = std::move(loaded.poly);
        src.table = std::move(loaded.table);
        src.pretty = "lut:" + cfg.lut_path;
        return src;
    }

    if (cfg.field_spec.empty())
        throw gapn::ParseError("--field is required");
    src.field = Field::parse(cfg.field_spec);

    if (cfg.mono) {
        src.poly = make_monomial(src.field, *cfg.mono);
        src.pretty = "x^" + std::to_string(*cfg.mono);
    } else if (!cfg.poly.empty()) {
        // "d:c,d:c"
        Polynomial poly(src.field);
        std::stringstream ss(cfg.poly);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw gapn::ParseError("--poly expects d:c pairs");
            std::uint32_t d = static_cast<std::uint32_t>(std::stoul(item.substr(0, colon)));
            Elem c = static_cast<Elem>(std::stoul(item.substr(colon + 1)));
            poly.set(d, src.field->add(poly.coeff(d), c));
        }
        src.poly = std::move(poly);
        src.pretty = "poly:" + cfg.poly;
    } else if (cfg.gold) {
        src.poly = make_gold(src.field, *cfg.gold);
        src.pretty = "gold:" + std::to_string(*cfg.gold);
    } else if (!cfg.general_gold.empty()) {
        auto exps = parse_u32_list(cfg.general_gold, ',');
        GeneralGold gg = make_general_gold(src.field, exps);
        src.poly = std::move(gg.poly);
        src.pretty = "general-gold:" + cfg.general_gold;
    } else if (cfg.inverse) {
        src.poly = make_inverse(src.field);
        src.pretty = "inverse";
    } else if (cfg.binomial) {
        src.poly = make_binomial(src.field, *cfg.binomial);
        src.pretty = "binomial:" + std::to_string(*cfg.binomial);
    }
    src.table = tabulate(*src.poly);
    return src;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.json_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(cfg.json_path);
    if (!f)
        throw gapn::ParseError("cannot write " + cfg.json_path);
    f << text << "\n";
}

int cmd_check(const RunConfig& cfg, std::ostream& out)
{
    Source src = load_function(cfg);
    if (src.field->size() > kCheckSizeGuard)
        throw gapn::GuardExceededError("check is limited to p^n <= 8192");

    SpectrumReport spec = spectrum(src.table, cfg.threads);
    WalshReport walsh = walsh_report(src.table, cfg.threads);
    std::uint32_t degree = algebraic_degree(src.table);

    json j;
    j["field"] = src.field->to_string();
    j["function"] = json::parse(src.poly ? function_to_json(*src.poly)
                                         : function_to_json(src.table));
    j["function_pretty"] = src.pretty;
    j["degree"] = degree;
    j["is_gapn"] = spec.is_gapn;
    j["is_gab"] = walsh.is_gab;
    json multiset = json::object();
    for (const auto& [count, freq] : spec.multiset)
        multiset[std::to_string(count)] = freq;
    j["spectrum_multiset"] = std::move(multiset);
    json values = json::array();
    for (const auto& v : walsh.value_set)
        values.push_back(v.to_string());
    j["walsh_value_set"] = std::move(values);
    j["fourier_sum"] = {{"value", to_string_i128(walsh.fourier.value)},
                        {"threshold", to_string_i128(walsh.fourier.threshold)},
                        {"equality", walsh.fourier.equality}};
    if (cfg.rows) {
        json rows = json::array();
        for (const auto& row : spec.rows) {
            json counts = json::object();
            for (const auto& [b, c] : row.counts)
                counts[std::to_string(b)] = c;
            rows.push_back({{"a", row.a}, {"counts", std::move(counts)}});
        }
        j["rows"] = std::move(rows);
    }
    emit(cfg, j.dump(), out);
    return 0;
}

int cmd_search(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.field_spec.empty())
        throw gapn::ParseError("--field is required");
    FieldPtr field = Field::parse(cfg.field_spec);
    if (field->size() > kSearchSizeGuard)
        throw gapn::GuardExceededError("search sweeps are limited to p^n <= 3^7");

    const std::uint32_t q = field->size();
    std::ostringstream lines;
    // exponent cosets under multiplication by p mod p^n - 1; one record
    // per representative, since x^{pd} is x^d composed with Frobenius
    for (std::uint32_t d = 2; q >= 3 && d + 1 < q; ++d) {
        std::vector<std::uint32_t> coset;
        std::uint64_t e = d;
        std::uint32_t rep = d;
        do {
            coset.push_back(static_cast<std::uint32_t>(e));
            if (e >= 2 && e < rep)
                rep = static_cast<std::uint32_t>(e);
            e = e * field->p() % (q - 1);
        } while (e != d);
        if (rep != d)
            continue;
        std::sort(coset.begin(), coset.end());

        FunctionTable f = tabulate(make_monomial(field, d));
        json rec;
        rec["field"] = field->to_string();
        rec["d"] = d;
        rec["coset"] = coset;
        rec["is_gapn"] = is_gapn(f, cfg.threads);
        rec["is_gab"] = is_gab(f, cfg.threads);
        rec["degree"] = algebraic_degree(f);
        lines << rec.dump() << "\n";
    }
    if (cfg.json_path.empty()) {
        out << lines.str();
    } else {
        std::ofstream file(cfg.json_path);
        if (!file)
            throw gapn::ParseError("cannot write " + cfg.json_path);
        file << lines.str();
    }
    return 0;
}

int cmd_dualarc(const RunConfig& cfg, std::ostream& out)
{
    Source src = load_function(cfg);
    const Field& fd = *src.field;
    if (static_cast<std::uint64_t>(fd.size()) * fd.size() > kDualArcPairGuard)
        throw gapn::GuardExceededError("dualarc is limited to p^{2n} <= 2^24");

    MuNuConfig munu = MuNuConfig::gold_identity();
    if (cfg.munu == "monomial-inverse") {
        if (!src.poly || src.poly->coeffs().size() != 1
            || src.poly->coeffs().begin()->second != 1)
            throw gapn::BadParametersError(
                "monomial-inverse needs a monic single-term function x^d");
        munu = MuNuConfig::monomial_inverse(src.poly->coeffs().begin()->first);
    } else if (cfg.munu != "gold-identity" && !cfg.munu.empty()) {
        throw gapn::ParseError("--munu must be monomial-inverse or gold-identity");
    }

    std::vector<Elem> m_set;
    if (!cfg.m_set.empty()) {
        for (std::uint32_t v : parse_u32_list(cfg.m_set, ','))
            m_set.push_back(v);
    } else {
        m_set = greedy_cap_set(fd, cfg.seed);
    }

    auto arc = build_arc(src.table, munu, m_set, cfg.threads);
    ArcReport rep = verify_dual_arc(fd, arc);
    json j = json::parse(arc_to_json(rep, arc));
    j["field"] = fd.to_string();
    j["function"] = json::parse(src.poly ? function_to_json(*src.poly)
                                         : function_to_json(src.table));
    emit(cfg, j.dump(), out);
    return rep.pairwise_ok && rep.triples_ok ? 0 : 5;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact GAPN/GAB analysis of functions on F_{p^n}"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* cmd, bool with_source) {
        cmd->add_option("--field", cfg.field_spec,
                        "field spec, e.g. p=3,n=5,mod=1,2,0,0,0,1 (mod optional)");
        cmd->add_option("--threads", cfg.threads, "worker threads (default 1)");
        cmd->add_option("--seed", cfg.seed, "seed for seeded constructions");
        cmd->add_option("--json", cfg.json_path, "write the report to this file");
        if (with_source) {
            cmd->add_option("--mono", cfg.mono, "monomial exponent d");
            cmd->add_option("--poly", cfg.poly, "sparse polynomial d:c,d:c,...");
            cmd->add_option("--lut", cfg.lut_path, "function JSON file (poly or lut form)");
            cmd->add_option("--gold", cfg.gold, "generalized Gold index i");
            cmd->add_option("--general-gold", cfg.general_gold,
                            "Frobenius indices i2,...,ip");
            cmd->add_flag("--inverse", cfg.inverse, "inverse permutation");
            cmd->add_option("--binomial", cfg.binomial, "binomial index i");
        }
    };

    CLI::App* check = app.add_subcommand("check", "GAPN/GAB/degree report for one function");
    add_common(check, true);
    check->add_flag("--rows", cfg.rows, "include the full spectrum rows");

    CLI::App* search = app.add_subcommand("search", "sweep monomial exponents");
    add_common(search, false);

    CLI::App* dualarc = app.add_subcommand("dualarc", "build and verify a dual arc");
    add_common(dualarc, true);
    dualarc->add_option("--munu", cfg.munu,
                        "bilinearizing family: monomial-inverse | gold-identity");
    dualarc->add_option("--m-set", cfg.m_set, "explicit cap set indices i,i,...");

    std::vector<std::string> argv(args.rbegin(), args.rend()); // CLI11 wants reverse order
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed())
            return cmd_check(cfg, out);
        if (search->parsed())
            return cmd_search(cfg, out);
        return cmd_dualarc(cfg, out);
    } catch (const gapn::HypothesisFailedError& e) {
        err << "hypothesis failed: " << e.what() << "\n";
        return 4;
    } catch (const gapn::VerificationFailedError& e) {
        err << "verification failed: " << e.what() << "\n";
        return 5;
    } catch (const gapn::TooLargeError& e) {
        err << "guard: " << e.what() << "\n";
        return 3;
    } catch (const gapn::GuardExceededError& e) {
        err << "guard: " << e.what() << "\n";
        return 3;
    } catch (const gapn::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gapn::cli
