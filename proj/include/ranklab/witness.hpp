#pragma once

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include "varieties.hpp"

namespace ranklab {

/// Binary form f(sP + tQ); coeffs[i] multiplies s^{d-i} t^i.
struct LineRestriction {
    std::vector<Rational> coeffs;
    unsigned degree() const { return static_cast<unsigned>(coeffs.size() - 1); }
};

inline LineRestriction restrict_to_line(const MultiPoly& f, const Vector& P, const Vector& Q)
{
    if (P.size() != f.num_vars() || Q.size() != f.num_vars())
        throw Error(ErrorKind::DimensionMismatch, "line endpoints do not match the polynomial's variable count");
    if (!f.is_homogeneous() || f.is_zero())
        throw Error(ErrorKind::PrecondViolated, "restrict_to_line needs a nonzero homogeneous polynomial");
    if (is_zero(P) || is_zero(Q) || proportional(P, Q))
        throw Error(ErrorKind::ProportionalPoints, "P and Q must be nonzero and non-proportional");
    const unsigned d = *f.degree();
    // Each coordinate is P_i + t Q_i with s = 1; homogeneity restores s.
    std::vector<Rational> acc(d + 1);
    for (const auto& [e, c] : f.terms()) {
        std::vector<Rational> term{c};
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) {
                std::vector<Rational> next(term.size() + 1);
                for (std::size_t j = 0; j < term.size(); ++j) {
                    next[j] += term[j] * P[i];
                    next[j + 1] += term[j] * Q[i];
                }
                term = std::move(next);
            }
        for (std::size_t j = 0; j < term.size(); ++j)
            acc[j] += term[j];
    }
    return {std::move(acc)};
}

/// A projective root [s:t] with s != 0. Exact roots carry s and t as coprime
/// integers; numeric ones carry tau = t/s as a double.
struct LineRoot {
    bool exact = true;
    Rational s, t;
    double tau_num = 0;
    unsigned multiplicity = 1;
    double residual = 0;
};

namespace detail {

inline std::vector<Integer> cleared(const std::vector<Rational>& c)
{
    Integer l = 1;
    for (const auto& x : c)
        l = boost::multiprecision::lcm(l, denominator_of(x));
    std::vector<Integer> out;
    for (const auto& x : c)
        out.push_back(numerator_of(x * l));
    return out;
}

/// Positive divisors of |n|, trial division; n must be nonzero.
inline std::vector<Integer> divisors(Integer n)
{
    if (n < 0)
        n = -n;
    if (n > Integer(1'000'000'000'000LL))
        throw Error(ErrorKind::PrecondViolated, "coefficient too large for divisor enumeration");
    std::vector<Integer> small, large;
    for (Integer k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            small.push_back(k);
            if (k * k != n)
                large.push_back(n / k);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Value of sum c_i tau^i.
inline Rational horner(const std::vector<Rational>& g, const Rational& tau)
{
    Rational v = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it)
        v = v * tau + *it;
    return v;
}

/// Divides sum c_i tau^i by (tau - r); r must be a root.
inline std::vector<Rational> deflate(const std::vector<Rational>& g, const Rational& r)
{
    const std::size_t n = g.size() - 1;
    std::vector<Rational> q(n);
    Rational carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        carry = g[i + 1] + carry * r;
        q[i] = carry;
    }
    return q;
}

inline double horner_num(const std::vector<double>& g, double tau)
{
    double v = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it)
        v = v * tau + *it;
    return v;
}

/// Real roots of a real polynomial (ascending coefficients, degree >= 2):
/// closed form for quadratics, Durand-Kerner plus Newton polishing otherwise.
inline std::vector<double> real_roots(const std::vector<double>& g)
{
    const std::size_t n = g.size() - 1;
    std::vector<double> out;
    if (n == 2) {
        const double a = g[2], b = g[1], c = g[0];
        const double disc = b * b - 4 * a * c;
        if (disc < 0)
            return out;
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (b + std::copysign(sq, b));
        out.push_back(q / a);
        out.push_back(c / q);
        return out;
    }
    using C = std::complex<double>;
    std::vector<C> z(n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = std::pow(C(0.4, 0.9), static_cast<double>(i));
    auto eval = [&](C x) {
        C v = 0;
        for (auto it = g.rbegin(); it != g.rend(); ++it)
            v = v * x + *it;
        return v / g[n];
    };
    for (int iter = 0; iter < 500; ++iter)
        for (std::size_t i = 0; i < n; ++i) {
            C den = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    den *= z[i] - z[j];
            z[i] -= eval(z[i]) / den;
        }
    for (const C& r : z) {
        if (std::abs(r.imag()) > 1e-8 * std::max(1.0, std::abs(r)))
            continue;
        double x = r.real();
        for (int k = 0; k < 5; ++k) {
            double d = 0;
            for (std::size_t i = n; i >= 1; --i)
                d = d * x + static_cast<double>(i) * g[i];
            if (d == 0)
                break;
            x -= horner_num(g, x) / d;
        }
        out.push_back(x);
    }
    return out;
}

} // namespace detail

/// Projective roots of the restricted form other than [0:1] (the point Q).
/// Rational roots are exact; the irrational remainder is solved numerically.
inline std::vector<LineRoot> secondary_intersections(const LineRestriction& lr)
{
    if (lr.coeffs.empty() || lr.coeffs[0].is_zero())
        throw Error(ErrorKind::PrecondViolated, "P lies on the hypersurface");
    // f(s,t) = s^m g(t/s) with g(tau) = sum c_i tau^i; [0:1] has multiplicity d - deg g.
    std::vector<Rational> g = lr.coeffs;
    while (g.back().is_zero())
        g.pop_back();
    if (g.size() == 1)
        throw Error(ErrorKind::NoSecondaryIntersection, "the line meets the hypersurface only at Q");

    std::vector<LineRoot> roots;
    auto record = [&](const Rational& tau) {
        for (auto& r : roots)
            if (r.exact && r.t / r.s == tau) {
                ++r.multiplicity;
                return;
            }
        LineRoot r;
        r.s = Rational(denominator_of(tau));
        r.t = Rational(numerator_of(tau));
        roots.push_back(r);
    };

    while (g.size() == 2) {
        record(-g[0] / g[1]);
        g = {g[1]};
    }
    if (g.size() > 2) {
        const auto ints = detail::cleared(g);
        const auto ps = detail::divisors(ints.front());
        const auto qs = detail::divisors(ints.back());
        bool found = true;
        while (found && g.size() > 2) {
            found = false;
            for (const auto& q : qs) {
                for (const auto& p : ps)
                    for (int sign : {1, -1}) {
                        const Rational tau = Rational(p * sign) / Rational(q);
                        if (g.size() > 1 && detail::horner(g, tau).is_zero()) {
                            record(tau);
                            g = detail::deflate(g, tau);
                            found = true;
                        }
                    }
            }
        }
        if (g.size() == 2) {
            record(-g[0] / g[1]);
            g = {g[1]};
        }
    }
    if (g.size() > 2) {
        std::vector<double> gn;
        for (const auto& c : g)
            gn.push_back(c.convert_to<double>());
        double scale = 0;
        for (double c : gn)
            scale = std::max(scale, std::abs(c));
        for (double x : detail::real_roots(gn)) {
            LineRoot r;
            r.exact = false;
            r.tau_num = x;
            r.residual = std::abs(detail::horner_num(gn, x)) / scale;
            if (r.residual <= 1e-12 * std::max(1.0, std::pow(std::abs(x), static_cast<double>(gn.size() - 1))))
                roots.push_back(r);
        }
    }
    if (roots.empty())
        throw Error(ErrorKind::NoSecondaryIntersection, "no real secondary intersection on this line");
    return roots;
}

// ---------------------------------------------------------------------------

/// The three hypersurfaces with shipped equations, by CLI name.
struct WitnessTarget {
    std::string name;
    VarietyFamily variety;
    int s_hyp;
};

inline WitnessTarget witness_target(const std::string& name)
{
    if (name == "flag")
        return {name, FlagAdjoint3{}, 2};
    if (name == "klein")
        return {name, Grassmann{2, 4}, 1};
    if (name == "sym2")
        return {name, Veronese{2, 2}, 2};
    throw Error(ErrorKind::UnknownCase, "witness variety must be flag, klein or sym2, got '" + name + "'");
}

/// Symmetric 3x3 matrix of a ternary quadric in the Veronese(2,2) coordinates.
inline Matrix sym2_matrix(const Vector& x)
{
    const Rational h(1, 2);
    return Matrix::from_rows({{x[0], h * x[1], h * x[2]}, {h * x[1], x[3], h * x[4]}, {h * x[2], h * x[4], x[5]}});
}

/// Membership of an ambient point in X for the three witness targets.
inline bool on_witness_variety(const VarietyFamily& v, const Vector& x)
{
    if (is_zero(x))
        return false;
    if (std::holds_alternative<FlagAdjoint3>(v)) {
        const Matrix m = as_matrix3(x);
        if (rank_exact(m) != 1 || !trace3(x).is_zero())
            return false;
        const Matrix sq = m * m;
        return std::all_of(sq.entries().begin(), sq.entries().end(), [](const Rational& c) { return c.is_zero(); });
    }
    if (const auto* ver = std::get_if<Veronese>(&v); ver && *ver == Veronese{2, 2})
        return rank_exact(sym2_matrix(x)) == 1;
    if (normalized(v) == VarietyFamily(Grassmann{2, 4}))
        return known_hypersurface_equation(v, 1).eval(x).is_zero();
    throw Error(ErrorKind::UnknownCase, "no membership test for " + describe(v));
}

/// Rank proxy of a point R on the hypersurface: matrix rank for the
/// determinantal cases, 1 for the Klein quadric (R lies on X itself).
inline std::size_t rank_estimate(const VarietyFamily& v, const Vector& R)
{
    if (std::holds_alternative<FlagAdjoint3>(v))
        return rank_exact(as_matrix3(R));
    if (std::holds_alternative<Veronese>(v))
        return rank_exact(sym2_matrix(R));
    if (!known_hypersurface_equation(v, 1).eval(R).is_zero())
        throw Error(ErrorKind::PrecondViolated, "R violates the Pluecker relation");
    return 1;
}

namespace detail {

/// Rank of a small double matrix with a relative pivot tolerance.
inline std::size_t numeric_rank(std::vector<std::vector<double>> a, double tol)
{
    double scale = 0;
    for (auto& row : a)
        for (double x : row)
            scale = std::max(scale, std::abs(x));
    if (scale == 0)
        return 0;
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        for (std::size_t r = rank; r < a.size(); ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c]))
                piv = r;
        if (std::abs(a[piv][c]) <= tol * scale)
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            const double f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<double>> to_rows3(const std::vector<double>& x, bool sym2)
{
    if (sym2)
        return {{x[0], x[1] / 2, x[2] / 2}, {x[1] / 2, x[3], x[4] / 2}, {x[2] / 2, x[4] / 2, x[5]}};
    return {{x[0], x[1], x[2]}, {x[3], x[4], x[5]}, {x[6], x[7], x[8]}};
}

} // namespace detail

/// P = alpha Q + beta R with Q on X and R on the hypersurface.
struct WitnessDecomposition {
    Vector P;
    Vector Q;
    ParamPoint q_param;
    bool exact = true;
    Rational root_s, root_t;    ///< exact regime: R = s P + t Q
    Vector R;                   ///< exact regime
    Rational alpha, beta;       ///< exact regime
    double tau = 0;             ///< numeric regime: R = P + tau Q
    std::vector<double> R_num;  ///< numeric regime
    double alpha_num = 0, beta_num = 0;
    double tolerance = 0;
    double residual = 0;
    std::size_t rank_estimate = 0;
    std::size_t rank_bound = 0;
    int tries = 0;
    int degenerate_skipped = 0;
};

/// True iff every reconstruction identity holds in the decomposition's regime.
inline bool verify_witness(const VarietyFamily& v, const MultiPoly& f, const WitnessDecomposition& w)
{
    if (!on_witness_variety(v, w.Q))
        return false;
    if (w.exact)
        return w.alpha * w.Q + w.beta * w.R == w.P && f.eval(w.R).is_zero() && !is_zero(w.R);
    double worst = 0;
    for (std::size_t i = 0; i < w.P.size(); ++i) {
        const double rec = w.alpha_num * w.Q[i].convert_to<double>() + w.beta_num * w.R_num[i];
        worst = std::max(worst, std::abs(rec - w.P[i].convert_to<double>()));
    }
    return worst <= w.tolerance;
}

/// Searches random points Q of X until the line PQ meets the hypersurface
/// f = 0 again at some R; then P = alpha Q + beta R and
/// rank_bound = 1 + rank_estimate(R). WitnessNotFound is inconclusive.
inline WitnessDecomposition rank_witness(const VarietyFamily& v, int s_hyp, const MultiPoly& f, const Vector& P,
                                         std::uint64_t seed, int max_tries)
{
    if (P.size() != coord_len(v) || f.num_vars() != P.size())
        throw Error(ErrorKind::DimensionMismatch, "P has the wrong number of coordinates for " + describe(v));
    if (f.eval(P).is_zero())
        throw Error(ErrorKind::PrecondViolated, "f(P) = 0: P already lies on the hypersurface");
    const bool klein = !std::holds_alternative<FlagAdjoint3>(v) && !std::holds_alternative<Veronese>(v);
    int skipped = 0;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        const ParamPoint qp = random_param(v, rng, 10);
        const Vector Q = embed(v, qp);
        std::vector<LineRoot> roots;
        try {
            roots = secondary_intersections(restrict_to_line(f, P, Q));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoSecondaryIntersection && e.kind() != ErrorKind::ProportionalPoints)
                throw;
            ++skipped;
            continue;
        }
        WitnessDecomposition w;
        w.P = P;
        w.Q = Q;
        w.q_param = qp;
        w.tries = attempt + 1;
        w.degenerate_skipped = skipped;
        const LineRoot& r = roots.front();
        if (r.exact) {
            w.root_s = r.s;
            w.root_t = r.t;
            w.R = r.s * P + r.t * Q;
            w.alpha = -r.t / r.s;
            w.beta = 1 / r.s;
            w.rank_estimate = rank_estimate(v, w.R);
        } else {
            w.exact = false;
            w.tau = r.tau_num;
            w.tolerance = 1e-9;
            w.residual = r.residual;
            for (std::size_t i = 0; i < P.size(); ++i)
                w.R_num.push_back(P[i].convert_to<double>() + r.tau_num * Q[i].convert_to<double>());
            w.alpha_num = -r.tau_num;
            w.beta_num = 1;
            w.rank_estimate = klein ? 1
                                    : detail::numeric_rank(
                                          detail::to_rows3(w.R_num, std::holds_alternative<Veronese>(v)), 1e-9);
        }
        w.rank_bound = 1 + w.rank_estimate;
        (void)s_hyp;
        if (!verify_witness(v, f, w))
            throw Error(ErrorKind::PrecondViolated, "internal: witness failed verification");
        return w;
    }
    throw Error(ErrorKind::WitnessNotFound, "no secondary intersection in " + std::to_string(max_tries) +
                                                " tries (" + std::to_string(skipped) +
                                                " degenerate lines); inconclusive");
}

inline WitnessDecomposition rank_witness(const WitnessTarget& target, const Vector& P, std::uint64_t seed,
                                         int max_tries)
{
    return rank_witness(target.variety, target.s_hyp, known_hypersurface_equation(target.variety, target.s_hyp), P,
                        seed, max_tries);
}

/// True iff the s^{d-1} t coefficient of f(sP + tQ) is nonzero for at least
/// one of `samples` random points Q of X.
inline bool check_eqbella_obstruction(const VarietyFamily& v, const MultiPoly& f, const Vector& P, int samples,
                                      std::uint64_t seed)
{
    if (f.eval(P).is_zero())
        throw Error(ErrorKind::PrecondViolated, "f(P) = 0");
    for (int i = 0; i < samples; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        const Vector Q = embed(v, random_param(v, rng, 10));
        if (proportional(P, Q))
            continue;
        const auto lr = restrict_to_line(f, P, Q);
        if (lr.coeffs.size() > 1 && !lr.coeffs[1].is_zero())
            return true;
    }
    return false;
}

/// Random integer point with f(P) != 0 (trace zero for the flag family).
inline Vector random_off_hypersurface(const WitnessTarget& target, Rng& rng, long bound = 20)
{
    const MultiPoly f = known_hypersurface_equation(target.variety, target.s_hyp);
    for (int i = 0; i < 10000; ++i) {
        Vector P = random_int_vector(rng, coord_len(target.variety), bound);
        if (std::holds_alternative<FlagAdjoint3>(target.variety))
            P[8] = -(P[0] + P[4]);
        if (!f.eval(P).is_zero())
            return P;
    }
    throw Error(ErrorKind::SamplingFailed, "could not sample a point off the hypersurface");
}

/// Whitespace-separated exact rationals in row-major order.
inline Vector parse_point(std::istream& in, std::size_t expected)
{
    Vector out;
    std::string tok;
    while (in >> tok)
        out.push_back(parse_rational(tok));
    if (out.size() != expected)
        throw Error(ErrorKind::InvalidData, "point file has " + std::to_string(out.size()) +
                                                " entries, expected " + std::to_string(expected));
    return out;
}

inline Vector read_point_file(const std::string& path, std::size_t expected)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidData, "cannot open point file " + path);
    return parse_point(in, expected);
}

} // namespace ranklab
