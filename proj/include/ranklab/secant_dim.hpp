#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "varieties.hpp"

namespace ranklab {

enum class DimSource { terracini, exception_table, arithmetic };

inline std::string to_string(DimSource s)
{
    switch (s) {
    case DimSource::terracini: return "terracini";
    case DimSource::exception_table: return "exception_table";
    case DimSource::arithmetic: return "arithmetic";
    }
    return "?";
}

struct ExceptionEntry {
    std::string family; ///< "veronese" | "grassmann" | "segre" | "flag_adjoint3"
    std::vector<int> params;
    int s = 0;
    int defect = 0;
    std::string status; ///< "theorem" | "conjecture"
    std::string citation;
};

/// Known defective (family, s) pairs. Grassmann keys are stored and looked up
/// in Hodge-dual normal form.
class ExceptionTable {
public:
    ExceptionTable() = default;
    explicit ExceptionTable(std::vector<ExceptionEntry> entries) : entries_(std::move(entries))
    {
        for (auto& e : entries_) {
            if (e.defect < 1)
                throw Error(ErrorKind::InvalidData, "exception entries must have defect >= 1");
            if (e.s < 1)
                throw Error(ErrorKind::InvalidData, "exception entries must have s >= 1");
            if (e.status != "theorem" && e.status != "conjecture")
                throw Error(ErrorKind::InvalidData, "status must be 'theorem' or 'conjecture'");
            const VarietyFamily v = normalized(make_family(e.family, e.params));
            e.params = family_params(v);
        }
    }

    const std::vector<ExceptionEntry>& entries() const noexcept { return entries_; }

    const ExceptionEntry* find(const VarietyFamily& v, int s) const
    {
        const VarietyFamily key = normalized(v);
        const std::string kind = family_kind(key);
        const auto params = family_params(key);
        for (const auto& e : entries_)
            if (e.family == kind && e.params == params && e.s == s)
                return &e;
        return nullptr;
    }

    /// Copy without the entry for (v, s); used by sensitivity checks.
    ExceptionTable without(const VarietyFamily& v, int s) const
    {
        ExceptionTable t;
        const ExceptionEntry* drop = find(v, s);
        for (const auto& e : entries_)
            if (&e != drop)
                t.entries_.push_back(e);
        return t;
    }

private:
    std::vector<ExceptionEntry> entries_;
};

inline ExceptionTable parse_exception_table(const nlohmann::json& doc)
{
    if (!doc.is_array())
        throw Error(ErrorKind::InvalidData, "exception table must be a JSON array");
    static const std::set<std::string> allowed{"family", "params", "s", "defect", "status", "citation"};
    std::vector<ExceptionEntry> entries;
    for (const auto& item : doc) {
        if (!item.is_object())
            throw Error(ErrorKind::InvalidData, "exception table entries must be objects");
        for (const auto& [key, value] : item.items())
            if (!allowed.count(key))
                throw Error(ErrorKind::InvalidData, "unknown field '" + key + "' in exception table");
        for (const auto& key : allowed)
            if (!item.contains(key))
                throw Error(ErrorKind::InvalidData, "missing field '" + key + "' in exception table");
        if (!item["s"].is_number_integer() || !item["defect"].is_number_integer())
            throw Error(ErrorKind::InvalidData, "'s' and 'defect' must be integers");
        ExceptionEntry e;
        e.family = item["family"].get<std::string>();
        for (const auto& p : item["params"]) {
            if (!p.is_number_integer())
                throw Error(ErrorKind::InvalidData, "params must be integers");
            e.params.push_back(p.get<int>());
        }
        e.s = item["s"].get<int>();
        e.defect = item["defect"].get<int>();
        e.status = item["status"].get<std::string>();
        e.citation = item["citation"].get<std::string>();
        entries.push_back(std::move(e));
    }
    return ExceptionTable(std::move(entries));
}

inline nlohmann::json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidData, "cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidData, path.string() + ": " + e.what());
    }
}

inline ExceptionTable load_exception_table(const std::filesystem::path& path)
{
    return parse_exception_table(read_json_file(path));
}

// ---------------------------------------------------------------------------

struct SecantRecord {
    VarietyFamily family;
    int s = 0;
    std::int64_t N = 0;
    std::int64_t dimX = 0;
    std::int64_t expected_dim = 0;
    std::int64_t actual_dim = 0;
    std::int64_t defect = 0;
    bool hypersurface = false;
    DimSource source = DimSource::arithmetic;
    /// "theorem", "conjecture" (inherits the Grassmann defectivity conjecture)
    /// or "sampled" (Terracini lower bound, exact with high probability).
    std::string status;
};

inline std::int64_t expected_dim(const VarietyFamily& v, std::int64_t s)
{
    if (s < 1)
        throw Error(ErrorKind::PrecondViolated, "secant index must be >= 1");
    const AmbientInfo a = ambient(v);
    // s * (dimX + 1) - 1 capped at N, computed without overflow
    if (s > a.N / (a.dimX + 1) + 1)
        return a.N;
    return std::min(s * (a.dimX + 1) - 1, a.N);
}

enum class RankMode { exact, modular };

struct TerraciniOptions {
    int trials = 3;
    long bound = 50;
    std::uint64_t seed = 0;
    RankMode mode = RankMode::exact;
};

/// Ambient coordinate count above which exact Terracini ranks are refused.
inline constexpr std::size_t kExactTerraciniLimit = 5001;

/// Lower bound for dim sigma_s(X) from the span of s random tangent spaces
/// (Terracini); equals it with overwhelming probability. Each trial is seeded
/// from (seed, trial) only, and the result is the max over trials.
inline std::int64_t terracini_dim(const VarietyFamily& v, int s, const TerraciniOptions& opt = {})
{
    if (s < 1 || opt.trials < 1)
        throw Error(ErrorKind::PrecondViolated, "terracini_dim needs s >= 1 and trials >= 1");
    const std::int64_t cap = expected_dim(v, s);
    const std::size_t width = coord_len(v);
    if (opt.mode == RankMode::exact && width > kExactTerraciniLimit)
        throw Error(ErrorKind::PrecondViolated, "exact Terracini rank refused above ambient dimension 5000; "
                                                "use modular mode");
    std::int64_t best = -1;
    for (int t = 0; t < opt.trials && best < cap; ++t) {
        Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(t)));
        std::int64_t rank = 0;
        if (opt.mode == RankMode::exact) {
            Matrix stacked;
            for (int i = 0; i < s; ++i)
                stacked.append_rows(tangent_cone_basis(v, random_param(v, rng, opt.bound)));
            rank = static_cast<std::int64_t>(rank_exact(stacked));
        } else {
            ModpEchelon ech(width, random_prime_62(rng));
            for (int i = 0; i < s && static_cast<std::int64_t>(ech.rank()) <= cap; ++i) {
                const Matrix block = tangent_cone_basis(v, random_param(v, rng, opt.bound));
                for (std::size_t r = 0; r < block.rows(); ++r)
                    ech.add_row(block.row(r));
            }
            rank = static_cast<std::int64_t>(ech.rank());
        }
        best = std::max(best, rank - 1);
    }
    return best;
}

/// Coordinate count up to which unlisted Segre/flag cases fall back to sampling.
inline constexpr std::size_t kTerraciniFallbackWidth = 400;

namespace detail {

inline SecantRecord make_record(const VarietyFamily& v, int s, std::int64_t actual, DimSource source,
                                std::string status)
{
    const AmbientInfo a = ambient(v);
    SecantRecord r;
    r.family = v;
    r.s = s;
    r.N = a.N;
    r.dimX = a.dimX;
    r.expected_dim = expected_dim(v, s);
    r.actual_dim = actual;
    r.defect = r.expected_dim - actual;
    r.hypersurface = actual == a.N - 1;
    r.source = source;
    r.status = std::move(status);
    if (r.defect < 0 || actual < 0)
        throw Error(ErrorKind::InvalidData, "inconsistent secant dimension for " + describe(v));
    return r;
}

} // namespace detail

/// Actual dimension of sigma_s(X) from the exception-table policy:
/// Veronese by Alexander-Hirschowitz (quadrics by the closed rank formula),
/// Grassmann by the (conjectural) defect table, Segre/flag by explicit table
/// entries with a Terracini fallback for small ambient spaces.
inline SecantRecord actual_dim(const VarietyFamily& v, int s, const ExceptionTable& table,
                               const TerraciniOptions& fallback = {})
{
    const std::int64_t expected = expected_dim(v, s);
    if (s == 1)
        return detail::make_record(v, s, ambient(v).dimX, DimSource::arithmetic, "theorem");
    if (const auto* ver = std::get_if<Veronese>(&v); ver && ver->d == 2) {
        // quadrics of rank <= s: dim = C(n+2,2) - C(n-s+2,2) - 1
        const Integer dim = binomial(ver->n + 2, 2) - binomial(ver->n - s + 2, 2) - 1;
        const auto actual = dim.convert_to<std::int64_t>();
        return detail::make_record(v, s, actual, actual < expected ? DimSource::exception_table : DimSource::arithmetic,
                                   "theorem");
    }
    if (const ExceptionEntry* e = table.find(v, s))
        return detail::make_record(v, s, expected - e->defect, DimSource::exception_table, e->status);
    if (std::holds_alternative<Veronese>(v))
        return detail::make_record(v, s, expected, DimSource::arithmetic, "theorem");
    if (std::holds_alternative<Grassmann>(v))
        return detail::make_record(v, s, expected, DimSource::arithmetic, "conjecture");
    if (coord_len(v) <= kTerraciniFallbackWidth)
        return detail::make_record(v, s, terracini_dim(v, s, fallback), DimSource::terracini, "sampled");
    throw Error(ErrorKind::UnknownCase, "no table entry for sigma_" + std::to_string(s) + " of " + describe(v) +
                                            " and ambient too large for sampling");
}

/// Least s with sigma_s(X) = P^N.
inline int generic_rank(const VarietyFamily& v, const ExceptionTable& table, const TerraciniOptions& fallback = {})
{
    const AmbientInfo a = ambient(v);
    for (std::int64_t s = 1; s <= a.N + 1; ++s)
        if (actual_dim(v, static_cast<int>(s), table, fallback).actual_dim == a.N)
            return static_cast<int>(s);
    throw Error(ErrorKind::UnknownCase, "secant varieties of " + describe(v) + " never fill the ambient space");
}

} // namespace ranklab
