#pragma once

#include <sstream>

#include <json.hpp>

#include "bounds.hpp"
#include "census.hpp"
#include "flag_decomp.hpp"
#include "witness.hpp"

namespace ranklab {

using nlohmann::ordered_json;

inline constexpr const char* kSchema = "ranklab/1";

/// Exact rationals serialize as integers when integral, else as "p/q" strings.
inline ordered_json to_json(const Rational& q)
{
    if (denominator_of(q) == 1 && abs(numerator_of(q)) < Integer(std::numeric_limits<std::int64_t>::max()))
        return numerator_of(q).convert_to<std::int64_t>();
    return q.str();
}

inline ordered_json to_json(const Vector& v)
{
    ordered_json a = ordered_json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

inline ordered_json to_json(const SecantRecord& r)
{
    return {{"family", family_kind(r.family)},
            {"params", family_params(r.family)},
            {"s", r.s},
            {"N", r.N},
            {"dimX", r.dimX},
            {"expected_dim", r.expected_dim},
            {"actual_dim", r.actual_dim},
            {"defect", r.defect},
            {"hypersurface", r.hypersurface},
            {"source", to_string(r.source)},
            {"status", r.status}};
}

inline ordered_json to_json(const CensusRecord& r)
{
    ordered_json j = to_json(r.record);
    j["terracini_dim"] = r.terracini_dim ? ordered_json(*r.terracini_dim) : ordered_json(nullptr);
    return j;
}

inline ordered_json optional_json(const std::optional<std::int64_t>& v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

inline ordered_json to_json(const BoundsReport& r)
{
    return {{"family", family_kind(r.family)},
            {"params", family_params(r.family)},
            {"g", r.g},
            {"sigma_prev_hypersurface", r.sigma_prev_hypersurface},
            {"x_is_hypersurface", r.x_is_hypersurface},
            {"codim_bound", r.codim_bound},
            {"bt_general", r.bt_general},
            {"bt_hypersurface", optional_json(r.bt_hypersurface)},
            {"bhmt", optional_json(r.bhmt)},
            {"jelisiejew", optional_json(r.jelisiejew)},
            {"bdp", optional_json(r.bdp)},
            {"deparis2", optional_json(r.deparis2)},
            {"r_max_prev", optional_json(r.r_max_prev)},
            {"r_max_prev_is_upper_bound", r.r_max_prev_is_upper_bound},
            {"main_bound", optional_json(r.main_bound)},
            {"x_hypersurface_max_rank", optional_json(r.x_hypersurface_max_rank)},
            {"known_r_max", optional_json(r.known_r_max)},
            {"notes", r.notes}};
}

inline ordered_json to_json(const TangentCoeffs& t)
{
    return {{"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)}, {"d", to_json(t.d)}};
}

inline ordered_json to_json(const FuzzReport& r)
{
    ordered_json cases = ordered_json::array();
    for (const auto& c : r.cases) {
        ordered_json fails = ordered_json::array();
        for (const auto& f : c.failures)
            fails.push_back({{"params", to_json(f.params)},
                             {"k", f.k ? to_json(*f.k) : ordered_json(nullptr)},
                             {"reason", f.reason}});
        cases.push_back(
            {{"case", c.case_id}, {"label", c.label}, {"passed", c.passed}, {"failed", c.failed}, {"failures", fails}});
    }
    return {{"seed", r.seed}, {"samples_per_case", r.samples_per_case}, {"all_passed", r.all_passed()},
            {"cases", cases}};
}

inline ordered_json to_json(const WitnessDecomposition& w)
{
    ordered_json params = ordered_json::array();
    for (const auto& v : w.q_param.vectors)
        params.push_back(to_json(v));
    ordered_json j{{"P", to_json(w.P)}, {"Q", to_json(w.Q)}, {"Q_params", params}};
    if (w.exact) {
        j["exactness"] = "exact";
        j["root"] = {{"s", to_json(w.root_s)}, {"t", to_json(w.root_t)}};
        j["R"] = to_json(w.R);
        j["alpha"] = to_json(w.alpha);
        j["beta"] = to_json(w.beta);
    } else {
        j["exactness"] = {{"numeric_with_residual", {{"tolerance", w.tolerance}, {"residual", w.residual}}}};
        j["tau"] = w.tau;
        j["R"] = w.R_num;
        j["alpha"] = w.alpha_num;
        j["beta"] = w.beta_num;
    }
    j["rank_estimate_R"] = w.rank_estimate;
    j["rank_bound"] = w.rank_bound;
    j["tries"] = w.tries;
    j["degenerate_lines_skipped"] = w.degenerate_skipped;
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string csv_value(const ordered_json& v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return csv_field(v.get<std::string>());
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + v[i].dump();
        return csv_field(s);
    }
    return v.dump();
}

} // namespace detail

/// Flat array of flat objects to CSV; the header comes from the first row.
/// The cells are renderings of the same JSON values, so both formats carry
/// identical numbers.
inline std::string to_csv(const ordered_json& rows)
{
    std::ostringstream out;
    if (rows.empty())
        return "";
    bool first = true;
    for (const auto& [key, _] : rows.front().items()) {
        out << (first ? "" : ",") << detail::csv_field(key);
        first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
        first = true;
        for (const auto& [key, _] : rows.front().items()) {
            out << (first ? "" : ",") << (row.contains(key) ? detail::csv_value(row.at(key)) : "");
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace ranklab
