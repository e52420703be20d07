#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "report.hpp"

#ifndef RANKLAB_DEFAULT_DATA_DIR
#define RANKLAB_DEFAULT_DATA_DIR "data"
#endif

namespace ranklab::cli {

/// Bad command line or unreadable configuration (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::uint64_t seed = 0;
    std::string data_dir;   ///< empty: RANKLAB_DATA_DIR, then the built-in default
    std::string table_file; ///< exception table override
    std::string facts_file; ///< known-facts override
    std::string out_file;   ///< empty: stdout
    std::string format = "json";

    // variety selection (dim, bounds)
    std::string variety;
    int n = 0, d = 0, k = 0;
    std::vector<int> dims;
    int s = 0;
    std::string method = "auto"; ///< dim: auto | terracini
    std::string mode = "exact";  ///< terracini rank mode: exact | modular
    int trials = 3;

    // census
    std::string family = "grassmann";
    int limit = 500;
    int n_max = 4, d_max = 4;
    std::string verify = "none";

    // verify-decomp
    std::optional<int> case_id;
    int samples = 200;

    // witness
    std::string point_file;
    bool random_point = false;
    int max_tries = 25;
};

inline std::filesystem::path data_dir(const RunConfig& c)
{
    if (const char* env = std::getenv("RANKLAB_DATA_DIR"); env && *env)
        return env;
    if (!c.data_dir.empty())
        return c.data_dir;
    return RANKLAB_DEFAULT_DATA_DIR;
}

inline std::filesystem::path table_path(const RunConfig& c)
{
    return c.table_file.empty() ? data_dir(c) / "exceptions.json" : std::filesystem::path(c.table_file);
}

inline std::filesystem::path facts_path(const RunConfig& c)
{
    return c.facts_file.empty() ? data_dir(c) / "known_facts.json" : std::filesystem::path(c.facts_file);
}

inline void require_file(const std::filesystem::path& p)
{
    if (!std::filesystem::is_regular_file(p))
        throw ConfigError("data file not found: " + p.string());
}

inline VarietyFamily variety_from(const RunConfig& c)
{
    try {
        if (c.variety == "veronese")
            return make_family("veronese", {c.n, c.d});
        if (c.variety == "grassmann")
            return make_family("grassmann", {c.k, c.n});
        if (c.variety == "segre")
            return make_family("segre", c.dims);
        if (c.variety == "flag" || c.variety == "flag_adjoint3")
            return FlagAdjoint3{};
    } catch (const Error& e) {
        throw ConfigError(std::string("invalid variety parameters: ") + e.what());
    }
    throw ConfigError("unknown variety '" + c.variety + "' (veronese, grassmann, segre, flag)");
}

inline void require_format(const RunConfig& c, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (c.format == a)
            return;
    throw ConfigError("format '" + c.format + "' is not supported by " + c.command);
}

inline ordered_json envelope(const std::string& command)
{
    return {{"schema", kSchema}, {"command", command}};
}

inline std::string render(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// --- commands ---------------------------------------------------------------

inline std::string cmd_dim(const RunConfig& c)
{
    require_format(c, {"json", "csv", "text"});
    const VarietyFamily v = variety_from(c);
    if (c.s < 1)
        throw ConfigError("--s must be >= 1");
    SecantRecord rec;
    if (c.method == "terracini") {
        TerraciniOptions opt;
        opt.seed = c.seed;
        opt.trials = c.trials;
        opt.mode = c.mode == "modular" ? RankMode::modular : RankMode::exact;
        rec = detail::make_record(v, c.s, terracini_dim(v, c.s, opt), DimSource::terracini, "sampled");
    } else if (c.method == "auto") {
        require_file(table_path(c));
        rec = actual_dim(v, c.s, load_exception_table(table_path(c)));
    } else {
        throw ConfigError("--method must be auto or terracini");
    }
    if (c.format == "text")
        return describe(v) + " s=" + std::to_string(c.s) + ": actual dim " + std::to_string(rec.actual_dim) +
               " in P^" + std::to_string(rec.N) + ", expected " + std::to_string(rec.expected_dim) + ", defect " +
               std::to_string(rec.defect) + ", hypersurface=" + (rec.hypersurface ? "true" : "false") + " (" +
               to_string(rec.source) + ", " + rec.status + ")\n";
    if (c.format == "csv")
        return to_csv(ordered_json::array({to_json(rec)}));
    ordered_json doc = envelope("dim");
    doc["record"] = to_json(rec);
    return render(doc);
}

inline std::string cmd_bounds(const RunConfig& c)
{
    require_format(c, {"json", "csv", "text"});
    const VarietyFamily v = variety_from(c);
    require_file(table_path(c));
    require_file(facts_path(c));
    const BoundsReport r =
        bounds_report(v, load_known_facts(facts_path(c)), load_exception_table(table_path(c)));
    if (c.format == "json") {
        ordered_json doc = envelope("bounds");
        doc["report"] = to_json(r);
        return render(doc);
    }
    ordered_json row = to_json(r);
    row.erase("notes");
    if (c.format == "csv")
        return to_csv(ordered_json::array({row}));
    std::ostringstream out;
    out << describe(v) << "  g=" << r.g << "\n";
    for (const auto& [name, value] : r.present_bounds())
        out << "  " << name << ": " << value << "\n";
    if (r.known_r_max)
        out << "  known r_max: " << *r.known_r_max << "\n";
    for (const auto& n : r.notes)
        out << "  note: " << n << "\n";
    return out.str();
}

inline VerifyMode verify_mode(const std::string& s)
{
    if (s == "none")
        return VerifyMode::none;
    if (s == "exact")
        return VerifyMode::terracini_exact;
    if (s == "modular")
        return VerifyMode::terracini_modular;
    throw ConfigError("--verify must be none, exact or modular");
}

inline std::vector<CensusRecord> census_records(const RunConfig& c)
{
    require_file(table_path(c));
    const ExceptionTable table = load_exception_table(table_path(c));
    CensusQuery q;
    q.family = c.family;
    q.limit = c.limit;
    q.verify = verify_mode(c.verify);
    q.seed = c.seed;
    if (c.family == "grassmann")
        return grassmann_census(c.limit, table, q);
    if (c.family == "veronese")
        return veronese_census(c.n_max, c.d_max, table, q);
    throw ConfigError("--family must be grassmann or veronese");
}

inline std::string cmd_census(const RunConfig& c)
{
    require_format(c, {"json", "csv"});
    const auto records = census_records(c);
    ordered_json rows = ordered_json::array();
    for (const auto& r : records)
        rows.push_back(to_json(r));
    if (c.format == "csv")
        return to_csv(rows);
    ordered_json doc = envelope("census");
    doc["family"] = c.family;
    if (c.family == "grassmann")
        doc["limit"] = c.limit;
    else
        doc["range"] = {{"n_max", c.n_max}, {"d_max", c.d_max}};
    doc["count"] = records.size();
    doc["records"] = rows;
    return render(doc);
}

inline std::string cmd_verify_decomp(const RunConfig& c, bool& all_passed)
{
    require_format(c, {"json", "text"});
    if (c.samples < 1)
        throw ConfigError("--samples must be >= 1");
    if (c.case_id && (*c.case_id < 0 || *c.case_id > 17))
        throw ConfigError("--case must be in 0..17");
    const FuzzReport rep = fuzz_all(c.samples, c.seed, c.case_id);
    all_passed = rep.all_passed();
    if (c.format == "json") {
        ordered_json doc = envelope("verify-decomp");
        doc["report"] = to_json(rep);
        return render(doc);
    }
    std::ostringstream out;
    for (const auto& r : rep.cases) {
        out << (r.failed == 0 ? "PASS " : "FAIL ") << r.label << ": " << r.passed << "/" << (r.passed + r.failed)
            << "\n";
        for (const auto& f : r.failures)
            out << "  " << to_string(f.params) << (f.k ? " k=" + f.k->str() : "") << ": " << f.reason << "\n";
    }
    return out.str();
}

inline std::string cmd_witness(const RunConfig& c)
{
    require_format(c, {"json"});
    WitnessTarget target;
    try {
        target = witness_target(c.variety);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (c.random_point == !c.point_file.empty())
        throw ConfigError("witness needs exactly one of --point FILE or --random");
    if (c.max_tries < 1)
        throw ConfigError("--max-tries must be >= 1");
    Vector P;
    if (c.random_point) {
        Rng rng(mix_seed(c.seed, 0xF00D));
        P = random_off_hypersurface(target, rng);
    } else {
        if (!std::filesystem::is_regular_file(c.point_file))
            throw ConfigError("point file not found: " + c.point_file);
        P = read_point_file(c.point_file, coord_len(target.variety));
    }
    const WitnessDecomposition w = rank_witness(target, P, c.seed, c.max_tries);
    ordered_json doc = envelope("witness");
    doc["variety"] = target.name;
    doc["witness"] = to_json(w);
    return render(doc);
}

/// Every comparison table in one document: the Veronese trio, Grassmann
/// census, Gr(3,7), the Segre cube and the flag family.
inline ordered_json report_all_doc(const RunConfig& c)
{
    require_file(table_path(c));
    require_file(facts_path(c));
    const ExceptionTable table = load_exception_table(table_path(c));
    const KnownRankFacts facts = load_known_facts(facts_path(c));
    ordered_json doc = envelope("report-all");
    doc["seed"] = c.seed;

    auto section = [&](const VarietyFamily& v) {
        const BoundsReport b = bounds_report(v, facts, table);
        ordered_json dims = ordered_json::array();
        for (int s = 1; s <= b.g; ++s)
            dims.push_back(to_json(actual_dim(v, s, table)));
        return ordered_json{{"variety", describe(v)}, {"secant_dims", dims}, {"bounds", to_json(b)}};
    };
    doc["veronese"] = ordered_json::array(
        {section(Veronese{2, 2}), section(Veronese{2, 3}), section(Veronese{2, 4})});
    doc["grassmann"] = section(Grassmann{3, 7});
    CensusQuery q;
    q.seed = c.seed;
    ordered_json census = ordered_json::array();
    for (const auto& r : grassmann_census(c.limit, table, q))
        census.push_back(to_json(r));
    doc["grassmann_census"] = {{"limit", c.limit}, {"records", census}};
    doc["segre"] = section(Segre{{3, 3, 3}});
    doc["flag"] = section(FlagAdjoint3{});
    const Tensor3 t = allums13();
    doc["flag"]["allums_flattening_ranks"] = {flattening_rank(t, 1), flattening_rank(t, 2), flattening_rank(t, 3)};
    const FuzzReport fz = fuzz_all(c.samples, c.seed);
    doc["flag"]["decomposition_fuzz"] = {{"samples_per_case", c.samples}, {"all_passed", fz.all_passed()}};
    return doc;
}

inline std::string render_report_text(const ordered_json& doc)
{
    std::ostringstream out;
    auto table = [&](const ordered_json& sec) {
        const auto& b = sec["bounds"];
        out << "## " << sec["variety"].get<std::string>() << "\n\n";
        out << "| s | expected | actual | defect | hypersurface |\n|---|---|---|---|---|\n";
        for (const auto& r : sec["secant_dims"])
            out << "| " << r["s"] << " | " << r["expected_dim"] << " | " << r["actual_dim"] << " | " << r["defect"]
                << " | " << (r["hypersurface"].get<bool>() ? "yes" : "no") << " |\n";
        out << "\n| bound | value |\n|---|---|\n";
        for (const auto& [k, v] : b.items())
            if (k != "family" && k != "params" && k != "notes" && !v.is_null() && !v.is_boolean())
                out << "| " << k << " | " << v << " |\n";
        for (const auto& n : b["notes"])
            out << "\nNote: " << n.get<std::string>() << "\n";
        out << "\n";
    };
    out << "# ranklab report (seed " << doc["seed"] << ")\n\n";
    for (const auto& s : doc["veronese"])
        table(s);
    table(doc["grassmann"]);
    out << "## Grassmann hypersurface census (affine n <= " << doc["grassmann_census"]["limit"] << ")\n\n";
    out << "| k | n | s | N | status |\n|---|---|---|---|---|\n";
    for (const auto& r : doc["grassmann_census"]["records"])
        out << "| " << r["params"][0] << " | " << r["params"][1] << " | " << r["s"] << " | " << r["N"] << " | "
            << r["status"].get<std::string>() << " |\n";
    out << "\n";
    table(doc["segre"]);
    table(doc["flag"]);
    out << "Allums tensor flattening ranks: " << doc["flag"]["allums_flattening_ranks"].dump() << "\n";
    out << "Flag decomposition fuzz: " << (doc["flag"]["decomposition_fuzz"]["all_passed"].get<bool>() ? "pass" : "FAIL")
        << "\n";
    return out.str();
}

inline std::string cmd_report_all(const RunConfig& c)
{
    require_format(c, {"json", "text"});
    const ordered_json doc = report_all_doc(c);
    return c.format == "json" ? render(doc) : render_report_text(doc);
}

/// Executes one configured command. Exit codes: 0 ok, 1 module error (or a
/// failed decomposition check), 2 configuration error.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        ordered_json e{{"schema", kSchema}, {"error", {{"kind", kind}, {"message", msg}}}};
        err << e.dump() << "\n";
        return code;
    };
    try {
        std::string text;
        bool ok = true;
        if (c.command == "dim")
            text = cmd_dim(c);
        else if (c.command == "bounds")
            text = cmd_bounds(c);
        else if (c.command == "census")
            text = cmd_census(c);
        else if (c.command == "verify-decomp")
            text = cmd_verify_decomp(c, ok);
        else if (c.command == "witness")
            text = cmd_witness(c);
        else if (c.command == "report-all")
            text = cmd_report_all(c);
        else
            throw ConfigError("unknown command '" + c.command + "'");
        if (c.out_file.empty()) {
            out << text;
        } else {
            std::ofstream f(c.out_file, std::ios::binary);
            if (!f)
                throw ConfigError("cannot write " + c.out_file);
            f << text;
        }
        return ok ? 0 : 1;
    } catch (const ConfigError& e) {
        return fail(2, "ConfigError", e.what());
    } catch (const Error& e) {
        return fail(1, std::string(to_string(e.kind())), e.what());
    } catch (const std::exception& e) {
        return fail(1, "InternalError", e.what());
    }
}

/// Parses argv into a RunConfig and runs it.
inline int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Exact secant dimensions, X-rank bounds and rank witnesses"};
    app.require_subcommand(1);
    app.add_option("--seed", c.seed, "random seed")->capture_default_str();
    app.add_option("--data-dir", c.data_dir, "data directory (RANKLAB_DATA_DIR takes precedence)");
    app.add_option("--facts", c.facts_file, "known rank facts file");
    app.add_option("--out", c.out_file, "write output to FILE");
    app.add_option("--format", c.format, "json | csv | text")->capture_default_str();
    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", c.seed);
        sub->add_option("--data-dir", c.data_dir);
        sub->add_option("--table", c.table_file, "exception table file");
        sub->add_option("--facts", c.facts_file);
        sub->add_option("--out", c.out_file);
        sub->add_option("--format", c.format);
    };
    auto variety_opts = [&](CLI::App* sub) {
        sub->add_option("--variety", c.variety, "veronese | grassmann | segre | flag")->required();
        sub->add_option("--n", c.n);
        sub->add_option("--d", c.d);
        sub->add_option("--k", c.k);
        sub->add_option("--dims", c.dims)->delimiter(',');
    };

    auto* dim = app.add_subcommand("dim", "secant variety dimension");
    common(dim);
    variety_opts(dim);
    dim->add_option("--s", c.s)->required();
    dim->add_option("--method", c.method, "auto | terracini");
    dim->add_option("--mode", c.mode, "exact | modular");
    dim->add_option("--trials", c.trials);

    auto* bounds = app.add_subcommand("bounds", "maximum rank bounds");
    common(bounds);
    variety_opts(bounds);

    auto* census = app.add_subcommand("census", "hypersurface secant census");
    common(census);
    census->add_option("--family", c.family, "grassmann | veronese");
    census->add_option("--limit", c.limit);
    census->add_option("--n-max", c.n_max);
    census->add_option("--d-max", c.d_max);
    census->add_option("--verify", c.verify, "none | exact | modular");

    auto* vd = app.add_subcommand("verify-decomp", "fuzz the flag tangent decompositions");
    common(vd);
    vd->add_option("--case", c.case_id);
    vd->add_option("--samples", c.samples);

    auto* wit = app.add_subcommand("witness", "constructive rank witness");
    common(wit);
    wit->add_option("--variety", c.variety, "flag | klein | sym2")->required();
    wit->add_option("--point", c.point_file);
    wit->add_flag("--random", c.random_point);
    wit->add_option("--max-tries", c.max_tries);

    auto* all = app.add_subcommand("report-all", "every comparison table");
    common(all);
    all->add_option("--limit", c.limit);
    all->add_option("--samples", c.samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        ordered_json j{{"schema", kSchema}, {"error", {{"kind", "ConfigError"}, {"message", e.what()}}}};
        err << j.dump() << "\n";
        return 2;
    }
    for (auto* sub : app.get_subcommands())
        c.command = sub->get_name();
    if (c.command == "report-all" && all->count("--samples") == 0)
        c.samples = 50;
    return run(c, out, err);
}

} // namespace ranklab::cli
