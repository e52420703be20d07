#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "varieties.hpp"

namespace ranklab {

/// Coefficients of a (e1^e2(x)e1) + b (e1^e2(x)e2) + c (e1^e3(x)e1)
///                 + d (e2^e3(x)e1 - e1^e2(x)e3),
/// a general element of the affine tangent cone to F(0,1;2) at e1^e2(x)e1.
struct TangentCoeffs {
    Rational a, b, c, d;
    bool all_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
};

inline std::string to_string(const TangentCoeffs& t)
{
    return "(a,b,c,d)=(" + t.a.str() + "," + t.b.str() + "," + t.c.str() + "," + t.d.str() + ")";
}

namespace flag {

inline const Vector e1 = make_vector({1, 0, 0});
inline const Vector e2 = make_vector({0, 1, 0});
inline const Vector e3 = make_vector({0, 0, 1});

} // namespace flag

/// The traceless 3x3 matrix (row-major) of a tangent-cone element.
inline Vector tangent_element(const TangentCoeffs& t)
{
    using namespace flag;
    if (t.all_zero())
        throw Error(ErrorKind::AllZero, "tangent element needs a nonzero coefficient");
    const Vector fourth = wedge_tensor_matrix(e2, e3, e1) - wedge_tensor_matrix(e1, e2, e3);
    return t.a * wedge_tensor_matrix(e1, e2, e1) + t.b * wedge_tensor_matrix(e1, e2, e2) +
           t.c * wedge_tensor_matrix(e1, e3, e1) + t.d * fourth;
}

/// The point v1 ^ v2 (x) v1 of X.
struct FlagPoint {
    Vector v1, v2;
    Vector matrix() const { return wedge_tensor_matrix(v1, v2, v1); }
};

/// Rank one, trace zero and square zero: the membership test for X.
inline bool is_flag_matrix(const Vector& m)
{
    if (m.size() != 9 || is_zero(m))
        return false;
    if (!trace3(m).is_zero())
        return false;
    const Matrix mm = as_matrix3(m);
    if (rank_exact(mm) != 1)
        return false;
    const Matrix sq = mm * mm;
    return std::all_of(sq.entries().begin(), sq.entries().end(), [](const Rational& x) { return x.is_zero(); });
}

inline bool is_valid_flag_point(const FlagPoint& p)
{
    return p.v1.size() == 3 && p.v2.size() == 3 && !is_zero(cross(p.v1, p.v2)) && is_flag_matrix(p.matrix());
}

struct Summand {
    Rational coeff;
    FlagPoint point;
};

inline Vector weighted_sum(const std::vector<Summand>& summands)
{
    Vector total(9);
    for (const auto& s : summands)
        total = total + s.coeff * s.point.matrix();
    return total;
}

enum class Normalize { none, by_a, by_b };

/// One explicit decomposition: a guard selecting its stratum of (a,b,c,d), an
/// optional coefficient normalization, an optional free parameter k with
/// excluded values, and the summand formula in normalized coordinates.
struct DecompositionCase {
    int id;            ///< 0..17 for the numbered cases, 100..102 for single-coefficient rank-1 cases
    std::string label;
    std::function<bool(const TangentCoeffs&)> guard;
    Normalize normalize = Normalize::none;
    bool needs_k = false;
    std::vector<Rational> k_exclusions;
    std::function<std::vector<Summand>(const TangentCoeffs&, const Rational&)> summands;
    /// Draws random rational coefficients on this case's stratum.
    std::function<TangentCoeffs(Rng&)> sample;
};

namespace detail {

inline Rational rnd(Rng& rng) { return random_nonzero_rational(rng, 20, 9); }

inline bool nz(const Rational& x) { return !x.is_zero(); }

/// Resamples until the guard holds.
inline std::function<TangentCoeffs(Rng&)> rejection(std::function<TangentCoeffs(Rng&)> draw,
                                                    std::function<bool(const TangentCoeffs&)> guard)
{
    return [draw = std::move(draw), guard = std::move(guard)](Rng& rng) {
        for (int i = 0; i < 10000; ++i) {
            TangentCoeffs t = draw(rng);
            if (guard(t))
                return t;
        }
        throw Error(ErrorKind::SamplingFailed, "guard rejection sampling did not terminate");
    };
}

inline std::vector<DecompositionCase> build_cases()
{
    using namespace flag;
    using V = Vector;
    using R = Rational;
    std::vector<DecompositionCase> cs;
    auto add = [&](int id, std::string label, std::function<bool(const TangentCoeffs&)> guard, Normalize norm,
                   std::vector<R> excl, std::function<std::vector<Summand>(const TangentCoeffs&, const R&)> f,
                   std::function<TangentCoeffs(Rng&)> draw) {
        DecompositionCase c;
        c.id = id;
        c.label = std::move(label);
        c.guard = guard;
        c.normalize = norm;
        c.needs_k = !excl.empty();
        c.k_exclusions = std::move(excl);
        c.summands = std::move(f);
        c.sample = rejection(std::move(draw), guard);
        cs.push_back(std::move(c));
    };
    const R zero(0);
    const R half(1, 2);

    // Single nonzero coefficient among a, b, c: already a point of X.
    add(100, "a only", [](auto& t) { return nz(t.a) && !nz(t.b) && !nz(t.c) && !nz(t.d); }, Normalize::none, {},
        [](auto& t, auto&) { return std::vector<Summand>{{t.a, {e1, e2}}}; },
        [=](Rng& r) { return TangentCoeffs{rnd(r), zero, zero, zero}; });
    add(101, "b only", [](auto& t) { return !nz(t.a) && nz(t.b) && !nz(t.c) && !nz(t.d); }, Normalize::none, {},
        // e1^e2(x)e2 = -(e2^e1(x)e2)
        [](auto& t, auto&) { return std::vector<Summand>{{-t.b, {e2, e1}}}; },
        [=](Rng& r) { return TangentCoeffs{zero, rnd(r), zero, zero}; });
    add(102, "c only", [](auto& t) { return !nz(t.a) && !nz(t.b) && nz(t.c) && !nz(t.d); }, Normalize::none, {},
        [](auto& t, auto&) { return std::vector<Summand>{{t.c, {e1, e3}}}; },
        [=](Rng& r) { return TangentCoeffs{zero, zero, rnd(r), zero}; });

    add(0, "case 0 (a=b=c=0)", [](auto& t) { return !nz(t.a) && !nz(t.b) && !nz(t.c) && nz(t.d); }, Normalize::none,
        {},
        [=](auto& t, auto&) {
            return std::vector<Summand>{{t.d * half, {e1 - e3, e2}}, {-t.d * half, {e1 + e3, e2}}};
        },
        [=](Rng& r) { return TangentCoeffs{zero, zero, zero, rnd(r)}; });

    add(1, "case 1 (c=d=0)", [](auto& t) { return nz(t.a) && nz(t.b) && !nz(t.c) && !nz(t.d); }, Normalize::none, {},
        [](auto& t, auto&) { return std::vector<Summand>{{1 / t.a, {t.a * e1 + t.b * e2, e2}}}; },
        [=](Rng& r) { return TangentCoeffs{rnd(r), rnd(r), zero, zero}; });

    add(2, "case 2 (b=d=0)", [](auto& t) { return nz(t.a) && !nz(t.b) && nz(t.c) && !nz(t.d); }, Normalize::none, {},
        [](auto& t, auto&) { return std::vector<Summand>{{R(1), {e1, t.a * e2 + t.c * e3}}}; },
        [=](Rng& r) { return TangentCoeffs{rnd(r), zero, rnd(r), zero}; });

    add(3, "case 3 (a=d=0)", [](auto& t) { return !nz(t.a) && nz(t.b) && nz(t.c) && !nz(t.d); }, Normalize::none, {},
        [](auto& t, auto&) { return std::vector<Summand>{{-t.b, {e2, e1}}, {t.c, {e1, e3}}}; },
        [=](Rng& r) { return TangentCoeffs{zero, rnd(r), rnd(r), zero}; });

    add(4, "case 4 (b=c=0, a!=-2d)",
        [](auto& t) { return nz(t.a) && !nz(t.b) && !nz(t.c) && nz(t.d) && nz(t.a + 2 * t.d); }, Normalize::none, {},
        [](auto& t, auto&) {
            const R s = 1 / (t.a + 2 * t.d);
            const V u = (t.a + t.d) * e1 - t.d * e3;
            return std::vector<Summand>{{s, {u, e2}}, {-s * t.d * t.d, {e1 + e3, e2}}};
        },
        [=](Rng& r) { return TangentCoeffs{rnd(r), zero, zero, rnd(r)}; });

    add(5, "case 5 (b=c=0, a=-2d)",
        [](auto& t) { return nz(t.a) && !nz(t.b) && !nz(t.c) && nz(t.d) && !nz(t.a + 2 * t.d); }, Normalize::none,
        {R(0), R(1), half},
        [](auto& t, const R& k) {
            const R s = t.d / (2 * k * (k - 1));
            const V u = (2 * k - 1) * e1 + k * e3;
            const V w = e1 + k * e3;
            return std::vector<Summand>{{-s, {u, e2}}, {s, {w, e2}}};
        },
        [=](Rng& r) {
            const R d = rnd(r);
            return TangentCoeffs{-2 * d, zero, zero, d};
        });

    add(6, "case 6 (a=c=0)", [](auto& t) { return !nz(t.a) && nz(t.b) && !nz(t.c) && nz(t.d); }, Normalize::none, {},
        [](auto& t, auto&) {
            const R s = 1 / (2 * t.d);
            const V u = t.d * e1 + t.b * e2 - t.d * e3;
            const V w = t.d * e1 - t.b * e2 + t.d * e3;
            return std::vector<Summand>{{s, {u, e2}}, {-s, {w, e2}}};
        },
        [=](Rng& r) { return TangentCoeffs{zero, rnd(r), zero, rnd(r)}; });

    add(7, "case 7 (a=b=0)", [](auto& t) { return !nz(t.a) && !nz(t.b) && nz(t.c) && nz(t.d); }, Normalize::none, {},
        [=](auto& t, auto&) {
            const R q = t.c / t.d;
            return std::vector<Summand>{{t.d * half, {e1 - e3, e2 + q * e3}}, {-t.d * half, {e1 + e3, e2 - q * e3}}};
        },
        [=](Rng& r) { return TangentCoeffs{zero, zero, rnd(r), rnd(r)}; });

    add(8, "case 8 (a=0, b=1, c+2d^2!=0)",
        [](auto& t) {
            return !nz(t.a) && nz(t.b) && nz(t.c) && nz(t.d) && nz(t.b * t.c + 2 * t.d * t.d);
        },
        Normalize::by_b, {},
        [](auto& t, auto&) {
            const R s = 1 / (t.c + 2 * t.d * t.d);
            const V u = (t.c + t.d * t.d) * e1 + t.d * e2 - t.d * t.d * e3;
            const V w = t.d * e1 - e2 + t.d * e3;
            // (e3-e1)^u(x)u = -(u^(e3-e1)(x)u)
            return std::vector<Summand>{{s, {u, e3 - e1}}, {-s, {w, t.c * e1 + t.d * e2}}};
        },
        [=](Rng& r) { return TangentCoeffs{zero, rnd(r), rnd(r), rnd(r)}; });

    add(9, "case 9 (a=0, b=1, c=-2d^2)",
        [](auto& t) {
            return !nz(t.a) && nz(t.b) && nz(t.c) && nz(t.d) && !nz(t.b * t.c + 2 * t.d * t.d);
        },
        Normalize::by_b, {R(0), R(1), half},
        [](auto& t, const R& k) {
            const R s = 1 / (2 * t.d * k * (k - 1));
            const V u = t.d * (1 - 2 * k) * e1 + k * e2 - t.d * k * e3;
            const V w = t.d * e1 - k * e2 + k * t.d * e3;
            const V n = 2 * t.d * e1 - e2;
            return std::vector<Summand>{{s, {u, n}}, {-s, {w, n}}};
        },
        [=](Rng& r) {
            const R b = rnd(r), d = rnd(r);
            return TangentCoeffs{zero, b, -2 * d * d / b, d};
        });

    add(10, "case 10 (b=0, a=1, d!=-1/2)",
        [](auto& t) { return nz(t.a) && !nz(t.b) && nz(t.c) && nz(t.d) && nz(t.a + 2 * t.d); }, Normalize::by_a, {},
        [](auto& t, auto&) {
            const R s = 1 / (2 * t.d + 1);
            const V v = t.c * e1 + t.d * e2;
            const V u = (t.d + 1) * e1 - t.d * e3;
            return std::vector<Summand>{{s / t.d, {u, v}}, {-s * t.d, {e1 + e3, v}}};
        },
        [=](Rng& r) { return TangentCoeffs{rnd(r), zero, rnd(r), rnd(r)}; });

    add(11, "case 11 (b=0, a=1, d=-1/2)",
        [](auto& t) { return nz(t.a) && !nz(t.b) && nz(t.c) && nz(t.d) && !nz(t.a + 2 * t.d); }, Normalize::by_a,
        {R(0), R(1)},
        [](auto& t, const R& k) {
            const R s = 1 / (4 * k * (k - 1));
            const V v = -2 * t.c * e1 + e2;
            const V u = (2 * k - 1) * e1 + k * e3;
            const V w = e1 + k * e3;
            return std::vector<Summand>{{s, {u, v}}, {-s, {w, v}}};
        },
        [=](Rng& r) {
            const R a = rnd(r);
            return TangentCoeffs{a, zero, rnd(r), -a / 2};
        });

    add(12, "case 12 (d=0)", [](auto& t) { return nz(t.a) && nz(t.b) && nz(t.c) && !nz(t.d); }, Normalize::none, {},
        [](auto& t, auto&) {
            return std::vector<Summand>{{1 / t.a, {t.a * e1 + t.b * e2, e2}}, {t.c, {e1, e3}}};
        },
        [=](Rng& r) { return TangentCoeffs{rnd(r), rnd(r), rnd(r), zero}; });

    add(13, "case 13 (c=0, b=1, a+2d!=0)",
        [](auto& t) { return nz(t.a) && nz(t.b) && !nz(t.c) && nz(t.d) && nz(t.a + 2 * t.d); }, Normalize::by_b, {},
        [](auto& t, auto&) {
            const R s = 1 / (t.a + 2 * t.d);
            const V u = (t.a + t.d) * e1 + e2 - t.d * e3;
            const V w = t.d * e1 - e2 + t.d * e3;
            return std::vector<Summand>{{s, {u, e2}}, {-s, {w, e2}}};
        },
        [=](Rng& r) { return TangentCoeffs{rnd(r), rnd(r), zero, rnd(r)}; });

    add(14, "case 14 (c=0, b=1, a=-2d)",
        [](auto& t) { return nz(t.a) && nz(t.b) && !nz(t.c) && nz(t.d) && !nz(t.a + 2 * t.d); }, Normalize::by_b,
        {R(0), R(1)},
        [](auto& t, const R& k) {
            const R s = 1 / (2 * k * (k - 1) * t.d);
            const V u = t.d * (2 * k - 1) * e1 - k * e2 + t.d * k * e3;
            const V w = t.d * e1 - k * e2 + t.d * k * e3;
            return std::vector<Summand>{{-s, {u, e2}}, {s, {w, e2}}};
        },
        [=](Rng& r) {
            const R d = rnd(r);
            return TangentCoeffs{-2 * d, rnd(r), zero, d};
        });

    auto all_nonzero = [](const TangentCoeffs& t) { return nz(t.a) && nz(t.b) && nz(t.c) && nz(t.d); };
    // After scaling a to 1: d^2+d+bc and 2d^2+d+bc become d^2+ad+bc and 2d^2+ad+bc.
    auto q1 = [](const TangentCoeffs& t) { return t.d * t.d + t.a * t.d + t.b * t.c; };
    auto q2 = [](const TangentCoeffs& t) { return 2 * t.d * t.d + t.a * t.d + t.b * t.c; };

    add(15, "case 15 (all nonzero, a=1)", [=](auto& t) { return all_nonzero(t) && nz(q1(t)) && nz(q2(t)); },
        Normalize::by_a, {},
        [](auto& t, auto&) {
            const R D = 2 * t.d * t.d + t.d + t.b * t.c;
            const V v = t.c * e1 + t.d * e2;
            const V u = (t.d * t.d + t.d + t.b * t.c) * e1 + t.b * t.d * e2 - t.d * t.d * e3;
            const V w = t.d * e1 - t.b * e2 + t.d * e3;
            return std::vector<Summand>{{1 / (t.d * t.d * D), {u, v}}, {-1 / D, {w, v}}};
        },
        [=](Rng& r) { return TangentCoeffs{rnd(r), rnd(r), rnd(r), rnd(r)}; });

    add(16, "case 16 (all nonzero, a=1, 2d^2+d+bc=0)", [=](auto& t) { return all_nonzero(t) && !nz(q2(t)); },
        Normalize::by_a, {R(0), half, R(1)},
        [](auto& t, const R& k) {
            const R s = 1 / (2 * t.c * t.c * k * (k - 1));
            const V v = t.c * e1 + t.d * e2;
            const V u = t.c * (2 * k - 1) * e1 + k * (2 * t.d + 1) * e2 + t.c * k * e3;
            const V w = t.c * e1 + k * (2 * t.d + 1) * e2 + t.c * k * e3;
            return std::vector<Summand>{{-s, {u, v}}, {s, {w, v}}};
        },
        [=](Rng& r) {
            const R a = rnd(r), c = rnd(r), d = rnd(r);
            return TangentCoeffs{a, -(2 * d * d + a * d) / c, c, d};
        });

    add(17, "case 17 (all nonzero, a=1, d^2+d+bc=0)", [=](auto& t) { return all_nonzero(t) && !nz(q1(t)); },
        Normalize::by_a, {R(0), R(1), R(2)},
        [](auto& t, const R& k) {
            const R s = 1 / (t.c * t.c * k * (k - 2));
            const V v = t.c * e1 + t.d * e2;
            const V u = t.c * (k - 1) * e1 + k * (t.d + 1) * e2 + t.c * k * e3;
            const V w = t.c * e1 + k * (t.d + 1) * e2 + t.c * k * e3;
            return std::vector<Summand>{{-s, {u, v}}, {s, {w, v}}};
        },
        [=](Rng& r) {
            const R a = rnd(r), c = rnd(r), d = rnd(r);
            return TangentCoeffs{a, -(d * d + a * d) / c, c, d};
        });
    return cs;
}

} // namespace detail

/// The case table in precedence order: single-coefficient cases, case 0, then 1..17.
inline const std::vector<DecompositionCase>& decomposition_cases()
{
    static const std::vector<DecompositionCase> cases = detail::build_cases();
    return cases;
}

inline const DecompositionCase& find_case(std::span<const DecompositionCase> cases, int id)
{
    for (const auto& c : cases)
        if (c.id == id)
            return c;
    throw Error(ErrorKind::PrecondViolated, "no decomposition case with id " + std::to_string(id));
}

/// Smallest positive integer outside the exclusion set.
inline Rational default_k(const DecompositionCase& c)
{
    for (long k = 1;; ++k)
        if (std::find(c.k_exclusions.begin(), c.k_exclusions.end(), Rational(k)) == c.k_exclusions.end())
            return Rational(k);
}

inline Rational random_k(const DecompositionCase& c, Rng& rng)
{
    for (;;) {
        Rational k = random_nonzero_rational(rng, 30, 7);
        if (std::find(c.k_exclusions.begin(), c.k_exclusions.end(), k) == c.k_exclusions.end())
            return k;
    }
}

/// Summands of the case's display at t, rescaled back from the normalized
/// coordinates; throws GuardViolated or ExcludedParameter.
inline std::vector<Summand> apply_case(const DecompositionCase& c, const TangentCoeffs& t, const Rational& k)
{
    if (t.all_zero())
        throw Error(ErrorKind::AllZero, "all tangent coefficients are zero");
    if (!c.guard(t))
        throw Error(ErrorKind::GuardViolated, c.label + " does not apply to " + to_string(t));
    if (c.needs_k && std::find(c.k_exclusions.begin(), c.k_exclusions.end(), k) != c.k_exclusions.end())
        throw Error(ErrorKind::ExcludedParameter, "k = " + k.str() + " is excluded for " + c.label);
    Rational scale = 1;
    TangentCoeffs n = t;
    if (c.normalize == Normalize::by_a)
        scale = t.a;
    else if (c.normalize == Normalize::by_b)
        scale = t.b;
    if (scale != 1)
        n = TangentCoeffs{t.a / scale, t.b / scale, t.c / scale, t.d / scale};
    auto out = c.summands(n, k);
    for (auto& s : out)
        s.coeff *= scale;
    return out;
}

/// Exact check of one case: the weighted sum of the summands equals the
/// tangent element and every summand is a point of X.
inline bool verify_identity(const DecompositionCase& c, const TangentCoeffs& t, const Rational& k)
{
    const auto summands = apply_case(c, t, k);
    if (weighted_sum(summands) != tangent_element(t))
        return false;
    return std::all_of(summands.begin(), summands.end(), [](const Summand& s) {
        return !s.coeff.is_zero() && is_valid_flag_point(s.point);
    });
}

inline bool verify_identity(int case_id, const TangentCoeffs& t, std::optional<Rational> k = std::nullopt)
{
    const auto& c = find_case(decomposition_cases(), case_id);
    return verify_identity(c, t, k ? *k : default_k(c));
}

struct Decomposition {
    int case_id;
    std::string label;
    int rank;
    std::optional<Rational> k;
    std::vector<Summand> summands;
};

/// Selects the applicable case (first matching guard in precedence order) and
/// returns its summands; rank is the number of summands (1 or 2). If the case
/// needs k and none is supplied, k is drawn from `seed` when given, else the
/// default admissible value is used.
inline Decomposition classify_and_decompose(const TangentCoeffs& t, std::optional<Rational> k = std::nullopt,
                                            std::optional<std::uint64_t> seed = std::nullopt)
{
    if (t.all_zero())
        throw Error(ErrorKind::AllZero, "all tangent coefficients are zero");
    for (const auto& c : decomposition_cases()) {
        if (!c.guard(t))
            continue;
        std::optional<Rational> used;
        if (c.needs_k) {
            if (k)
                used = *k;
            else if (seed) {
                Rng rng(mix_seed(*seed));
                used = random_k(c, rng);
            } else
                used = default_k(c);
        }
        auto summands = apply_case(c, t, used.value_or(Rational(1)));
        return {c.id, c.label, static_cast<int>(summands.size()), used, std::move(summands)};
    }
    throw Error(ErrorKind::GuardViolated, "no decomposition case covers " + to_string(t));
}

// ---------------------------------------------------------------------------

struct FuzzFailure {
    TangentCoeffs params;
    std::optional<Rational> k;
    std::string reason;
};

struct CaseFuzzResult {
    int case_id;
    std::string label;
    int passed = 0;
    int failed = 0;
    std::vector<FuzzFailure> failures; ///< first few only
};

struct FuzzReport {
    std::uint64_t seed;
    int samples_per_case;
    std::vector<CaseFuzzResult> cases;

    bool all_passed() const
    {
        return std::all_of(cases.begin(), cases.end(), [](const CaseFuzzResult& c) { return c.failed == 0; });
    }
};

/// Random guard-satisfying rational parameters (and random admissible k) for
/// every case; each sample is an exact instance of the polynomial identity.
inline FuzzReport fuzz_cases(std::span<const DecompositionCase> cases, int samples_per_case, std::uint64_t seed)
{
    if (samples_per_case < 1)
        throw Error(ErrorKind::PrecondViolated, "samples_per_case must be >= 1");
    FuzzReport report{seed, samples_per_case, {}};
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const auto& c = cases[ci];
        CaseFuzzResult res{c.id, c.label, 0, 0, {}};
        for (int j = 0; j < samples_per_case; ++j) {
            Rng rng(mix_seed(seed, (static_cast<std::uint64_t>(c.id + 1000) << 32) | static_cast<std::uint64_t>(j)));
            const TangentCoeffs t = c.sample(rng);
            std::optional<Rational> k;
            if (c.needs_k)
                k = random_k(c, rng);
            std::string reason;
            bool ok = false;
            try {
                ok = verify_identity(c, t, k.value_or(Rational(1)));
                if (!ok)
                    reason = "identity or flag-point check failed";
            } catch (const Error& e) {
                reason = e.what();
            }
            if (ok) {
                ++res.passed;
            } else {
                ++res.failed;
                if (res.failures.size() < 5)
                    res.failures.push_back({t, k, reason});
            }
        }
        report.cases.push_back(std::move(res));
    }
    return report;
}

/// Fuzzes the 18 numbered cases (ids 0..17), or a single one.
inline FuzzReport fuzz_all(int samples_per_case, std::uint64_t seed, std::optional<int> only_case = std::nullopt)
{
    std::vector<DecompositionCase> selected;
    for (const auto& c : decomposition_cases())
        if (c.id <= 17 && (!only_case || *only_case == c.id))
            selected.push_back(c);
    if (selected.empty())
        throw Error(ErrorKind::PrecondViolated, "no decomposition case with id " + std::to_string(*only_case));
    return fuzz_cases(selected, samples_per_case, seed);
}

} // namespace ranklab
