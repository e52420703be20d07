#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "secant_dim.hpp"

namespace ranklab {

/// (C(n+d, n) - 1) divisible by n + 1.
inline bool veronese_applicable(int n, int d)
{
    return (binomial(n + d, n) - 1) % (n + 1) == 0;
}

/// (C(n, k) - 1) divisible by k(n-k) + 1.
inline bool grassmann_applicable(int k, int n)
{
    return (binomial(n, k) - 1) % (std::int64_t(k) * (n - k) + 1) == 0;
}

enum class VerifyMode { none, terracini_exact, terracini_modular };

struct CensusQuery {
    std::string family = "grassmann"; ///< "grassmann" | "veronese"
    int limit = 500;
    VerifyMode verify = VerifyMode::none;
    std::size_t verify_cap = 200; ///< verify only records whose ambient N is at most this
    std::uint64_t seed = 0;
};

struct CensusRecord {
    SecantRecord record;
    std::optional<std::int64_t> terracini_dim; ///< present when verified
};

inline bool verification_agrees(const CensusRecord& r)
{
    return !r.terracini_dim || *r.terracini_dim == r.record.actual_dim;
}

namespace detail {

inline void maybe_verify(CensusRecord& rec, VerifyMode mode, std::size_t cap, std::uint64_t seed)
{
    if (mode == VerifyMode::none || rec.record.N > static_cast<std::int64_t>(cap))
        return;
    TerraciniOptions opt;
    opt.seed = seed;
    opt.mode = mode == VerifyMode::terracini_exact ? RankMode::exact : RankMode::modular;
    rec.terracini_dim = terracini_dim(rec.record.family, rec.record.s, opt);
}

inline std::tuple<int, int, int> grassmann_sort_key(const SecantRecord& r)
{
    const auto& g = std::get<Grassmann>(r.family);
    return {g.n, g.k, r.s};
}

} // namespace detail

/// Grassmann(k, n) with n <= limit and hypersurface secant index s <= limit.
/// Families are enumerated in normal form k <= n-k; hits found by the
/// integrality predicate are emitted in both dual presentations, table hits
/// in the presentation the table lists. Output sorted by (n, k, s).
inline std::vector<CensusRecord> grassmann_census(int limit, const ExceptionTable& table, const CensusQuery& q = {})
{
    if (limit < 2)
        throw Error(ErrorKind::PrecondViolated, "census limit must be >= 2");
    std::vector<CensusRecord> out;
    for (int n = 2; n <= limit; ++n) {
        Integer binom = 1; // C(n, 0)
        for (int k = 1; 2 * k <= n; ++k) {
            binom = binom * (n - k + 1) / k;
            const std::int64_t cone = std::int64_t(k) * (n - k) + 1;
            std::vector<std::pair<int, bool>> candidates; // (s, from arithmetic)
            const Integer filled = binom - 1;
            if (filled % cone == 0) {
                const Integer s = filled / cone;
                if (s >= 1 && s <= limit)
                    candidates.emplace_back(s.convert_to<int>(), true);
            }
            for (const auto& e : table.entries())
                if (e.family == "grassmann" && e.params == std::vector<int>{k, n} && e.s <= limit)
                    candidates.emplace_back(e.s, false);
            for (auto [s, arithmetic] : candidates) {
                const VarietyFamily v = Grassmann{k, n};
                SecantRecord rec = actual_dim(v, s, table);
                if (!rec.hypersurface)
                    continue;
                out.push_back({rec, std::nullopt});
                if (arithmetic && rec.source == DimSource::arithmetic && 2 * k != n) {
                    SecantRecord dual = rec;
                    dual.family = Grassmann{n - k, n};
                    out.push_back({dual, std::nullopt});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) {
        return detail::grassmann_sort_key(a.record) < detail::grassmann_sort_key(b.record);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CensusRecord& a, const CensusRecord& b) {
                              return detail::grassmann_sort_key(a.record) == detail::grassmann_sort_key(b.record);
                          }),
              out.end());
    for (auto& r : out)
        detail::maybe_verify(r, q.verify, q.verify_cap, q.seed);
    return out;
}

/// All hypersurface secant varieties of Veronese(n, d), n <= n_max, d <= d_max.
inline std::vector<CensusRecord> veronese_census(int n_max, int d_max, const ExceptionTable& table,
                                                 const CensusQuery& q = {})
{
    if (n_max < 1 || d_max < 1)
        throw Error(ErrorKind::PrecondViolated, "veronese census ranges must be >= 1");
    std::vector<CensusRecord> out;
    for (int n = 1; n <= n_max; ++n)
        for (int d = 1; d <= d_max; ++d) {
            const VarietyFamily v = Veronese{n, d};
            const std::int64_t N = ambient(v).N;
            for (int s = 1;; ++s) {
                SecantRecord rec = actual_dim(v, s, table);
                if (rec.hypersurface)
                    out.push_back({rec, std::nullopt});
                if (rec.actual_dim == N)
                    break;
            }
        }
    for (auto& r : out)
        detail::maybe_verify(r, q.verify, q.verify_cap, q.seed);
    return out;
}

} // namespace ranklab
