#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secant_dim.hpp"

namespace ranklab {

struct RankFact {
    std::string family;
    std::vector<int> params;
    std::optional<int> sigma; ///< nullopt: the value is the true r_max of X
    int value = 0;
    bool is_upper_bound_only = false;
    std::string citation;
};

/// Literature values for r_max,s and r_max, loaded from a data file.
class KnownRankFacts {
public:
    KnownRankFacts() = default;
    explicit KnownRankFacts(std::vector<RankFact> facts) : facts_(std::move(facts))
    {
        for (auto& f : facts_) {
            const VarietyFamily v = normalized(make_family(f.family, f.params));
            f.params = family_params(v);
            if (f.value < 1 || (f.sigma && *f.sigma < 1))
                throw Error(ErrorKind::InvalidData, "rank facts must be positive");
        }
        // r_max,s must be non-decreasing in s for each family
        for (const auto& a : facts_)
            for (const auto& b : facts_)
                if (a.family == b.family && a.params == b.params && a.sigma && b.sigma && *a.sigma < *b.sigma &&
                    !a.is_upper_bound_only && a.value > b.value)
                    throw Error(ErrorKind::InvalidData, "r_max,s must be non-decreasing in s");
    }

    const std::vector<RankFact>& facts() const noexcept { return facts_; }

    const RankFact* max_rank_on_secant(const VarietyFamily& v, int sigma) const { return find(v, sigma); }
    const RankFact* max_rank(const VarietyFamily& v) const { return find(v, std::nullopt); }

private:
    const RankFact* find(const VarietyFamily& v, std::optional<int> sigma) const
    {
        const VarietyFamily key = normalized(v);
        const auto kind = family_kind(key);
        const auto params = family_params(key);
        for (const auto& f : facts_)
            if (f.family == kind && f.params == params && f.sigma == sigma)
                return &f;
        return nullptr;
    }

    std::vector<RankFact> facts_;
};

inline KnownRankFacts parse_known_facts(const nlohmann::json& doc)
{
    if (!doc.is_array())
        throw Error(ErrorKind::InvalidData, "known-facts file must be a JSON array");
    static const std::set<std::string> allowed{"family", "params", "sigma", "value", "is_upper_bound_only",
                                               "citation"};
    std::vector<RankFact> facts;
    for (const auto& item : doc) {
        if (!item.is_object())
            throw Error(ErrorKind::InvalidData, "known-facts entries must be objects");
        for (const auto& [key, value] : item.items())
            if (!allowed.count(key))
                throw Error(ErrorKind::InvalidData, "unknown field '" + key + "' in known-facts file");
        for (const auto& key : allowed)
            if (!item.contains(key))
                throw Error(ErrorKind::InvalidData, "missing field '" + key + "' in known-facts file");
        RankFact f;
        f.family = item["family"].get<std::string>();
        for (const auto& p : item["params"])
            f.params.push_back(p.get<int>());
        if (!item["sigma"].is_null()) {
            if (!item["sigma"].is_number_integer())
                throw Error(ErrorKind::InvalidData, "'sigma' must be an integer or null");
            f.sigma = item["sigma"].get<int>();
        }
        if (!item["value"].is_number_integer() || !item["is_upper_bound_only"].is_boolean())
            throw Error(ErrorKind::InvalidData, "'value' must be an integer, 'is_upper_bound_only' a boolean");
        f.value = item["value"].get<int>();
        f.is_upper_bound_only = item["is_upper_bound_only"].get<bool>();
        f.citation = item["citation"].get<std::string>();
        facts.push_back(std::move(f));
    }
    return KnownRankFacts(std::move(facts));
}

inline KnownRankFacts load_known_facts(const std::filesystem::path& path)
{
    return parse_known_facts(read_json_file(path));
}

// ---------------------------------------------------------------------------
// Individual bound formulas.

inline std::int64_t codim_bound(const VarietyFamily& v)
{
    const AmbientInfo a = ambient(v);
    return a.N - a.dimX + 1;
}

struct BtBounds {
    std::int64_t general;                     ///< 2g, any X
    std::optional<std::int64_t> hypersurface; ///< 2g-1 when sigma_{g-1} is a hypersurface
};

inline BtBounds bt_bounds(std::int64_t g, bool sigma_prev_is_hypersurface)
{
    if (g < 1)
        throw Error(ErrorKind::PrecondViolated, "generic rank must be >= 1");
    BtBounds b{2 * g, std::nullopt};
    if (sigma_prev_is_hypersurface)
        b.hypersurface = 2 * g - 1;
    return b;
}

/// 2g-2; valid for curves and homogeneous varieties in the hypersurface case.
inline std::int64_t bhmt_bound(std::int64_t g)
{
    if (g < 1)
        throw Error(ErrorKind::PrecondViolated, "generic rank must be >= 1");
    return 2 * g - 2;
}

/// C(n+d-1, n) - C(n+d-5, n-2), from the open Waring rank.
inline std::int64_t jelisiejew_bound(int n, int d)
{
    if (n < 1 || d < 1)
        throw Error(ErrorKind::PrecondViolated, "n and d must be >= 1");
    return (binomial(n + d - 1, n) - binomial(n + d - 5, n - 2)).convert_to<std::int64_t>();
}

/// jelisiejew_bound(n, d) - C(n+d-6, n-2).
inline std::int64_t bdp_bound(int n, int d)
{
    return jelisiejew_bound(n, d) - binomial(n + d - 6, n - 2).convert_to<std::int64_t>();
}

/// floor((d^2 + 6d + 1) / 4), ternary forms of degree d.
inline std::int64_t deparis2_bound(int d)
{
    if (d < 1)
        throw Error(ErrorKind::PrecondViolated, "d must be >= 1");
    return (std::int64_t(d) * d + 6 * d + 1) / 4;
}

/// r_max <= r_max,g-1 + 1 when sigma_{g-1}(X) is a hypersurface.
inline std::int64_t main_bound(std::int64_t r_prev) { return r_prev + 1; }

/// A non-degenerate irreducible hypersurface X has r_max = 2.
inline std::int64_t hypersurface_X_max_rank(const VarietyFamily& v)
{
    const AmbientInfo a = ambient(v);
    if (a.dimX != a.N - 1)
        throw Error(ErrorKind::NotAHypersurface, describe(v) + " is not a hypersurface");
    return 2;
}

// ---------------------------------------------------------------------------

struct BoundsReport {
    VarietyFamily family;
    int g = 0;
    bool sigma_prev_hypersurface = false;
    bool x_is_hypersurface = false;
    std::int64_t codim_bound = 0;
    std::int64_t bt_general = 0;
    std::optional<std::int64_t> bt_hypersurface;
    std::optional<std::int64_t> bhmt;
    std::optional<std::int64_t> jelisiejew;
    std::optional<std::int64_t> bdp;
    std::optional<std::int64_t> deparis2;
    std::optional<std::int64_t> r_max_prev;   ///< r_max,g-1 used for main_bound
    bool r_max_prev_is_upper_bound = false;
    std::optional<std::int64_t> main_bound;
    std::optional<std::int64_t> x_hypersurface_max_rank;
    std::optional<std::int64_t> known_r_max;
    std::vector<std::string> notes;

    /// Every bound that is present, labelled.
    std::vector<std::pair<std::string, std::int64_t>> present_bounds() const
    {
        std::vector<std::pair<std::string, std::int64_t>> out{{"codim", codim_bound}, {"bt_general", bt_general}};
        auto add = [&](const char* name, const std::optional<std::int64_t>& v) {
            if (v)
                out.emplace_back(name, *v);
        };
        add("bt_hypersurface", bt_hypersurface);
        add("bhmt", bhmt);
        add("jelisiejew", jelisiejew);
        add("bdp", bdp);
        add("deparis2", deparis2);
        add("main", main_bound);
        add("x_hypersurface", x_hypersurface_max_rank);
        return out;
    }
};

namespace detail {

inline std::optional<std::string> bt_attribution_note(const VarietyFamily& v)
{
    const VarietyFamily key = normalized(v);
    if (key == VarietyFamily(Veronese{2, 2}))
        return "The comparison literature attributes 2g-2 = 4 to the 2g-1 hypersurface bound for this "
               "variety; this report lists 2g-1 and 2g-2 separately as defined.";
    if (key == VarietyFamily(Grassmann{3, 7}))
        return "A figure of 5 is quoted for the 2g-1 hypersurface bound on this Grassmannian, but 2g-1 = 7; "
               "this report computes 2g-1 from its definition.";
    if (key == VarietyFamily(Segre{{3, 3, 3}}))
        return "A figure of 8 is quoted for the 2g-1 hypersurface bound on this Segre variety, but 2g-1 = 9 "
               "(8 equals 2g-2); this report computes the bounds from their definitions.";
    return std::nullopt;
}

} // namespace detail

/// All bound formulas for one variety.
inline BoundsReport bounds_report(const VarietyFamily& v, const KnownRankFacts& facts, const ExceptionTable& table)
{
    validate(v);
    const AmbientInfo a = ambient(v);
    BoundsReport r;
    r.family = v;
    r.g = generic_rank(v, table);
    r.x_is_hypersurface = a.dimX == a.N - 1;
    r.sigma_prev_hypersurface = r.g >= 2 && actual_dim(v, r.g - 1, table).hypersurface;
    r.codim_bound = codim_bound(v);

    // The 2g-1 and 2g-2 refinements need sigma_{g-1} to be a hypersurface
    // while X itself is not one; all supported families are homogeneous.
    const bool refined = r.sigma_prev_hypersurface && !r.x_is_hypersurface;
    const BtBounds bt = bt_bounds(r.g, refined);
    r.bt_general = bt.general;
    r.bt_hypersurface = bt.hypersurface;
    if (refined)
        r.bhmt = bhmt_bound(r.g);

    if (const auto* ver = std::get_if<Veronese>(&v)) {
        r.jelisiejew = jelisiejew_bound(ver->n, ver->d);
        r.bdp = bdp_bound(ver->n, ver->d);
        if (ver->n == 2)
            r.deparis2 = deparis2_bound(ver->d);
    }

    if (r.sigma_prev_hypersurface) {
        if (r.g - 1 == 1) {
            r.r_max_prev = 1; // sigma_1 = X
        } else if (const RankFact* f = facts.max_rank_on_secant(v, r.g - 1)) {
            r.r_max_prev = f->value;
            r.r_max_prev_is_upper_bound = f->is_upper_bound_only;
        }
        if (r.r_max_prev)
            r.main_bound = main_bound(*r.r_max_prev);
    }
    if (r.x_is_hypersurface)
        r.x_hypersurface_max_rank = hypersurface_X_max_rank(v);

    if (const RankFact* f = facts.max_rank(v); f && !f->is_upper_bound_only)
        r.known_r_max = f->value;

    if (auto note = detail::bt_attribution_note(v))
        r.notes.push_back(*note);
    if (r.sigma_prev_hypersurface && !r.main_bound)
        r.notes.push_back("sigma_" + std::to_string(r.g - 1) +
                          " is a hypersurface but its maximum rank is unknown; the r_max,g-1 + 1 bound is not applied.");
    if (r.r_max_prev_is_upper_bound)
        r.notes.push_back("r_max,g-1 is only known as an upper bound; main bound uses that upper bound.");
    return r;
}

} // namespace ranklab
