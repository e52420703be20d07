#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"
#include "random.hpp"
#include "tensor3.hpp"

namespace ranklab {

/// Degree-d Veronese embedding of P^n (n+1 homogeneous variables).
struct Veronese {
    int n;
    int d;
    bool operator==(const Veronese&) const = default;
};

/// Grassmannian of k-dimensional subspaces of an n-dimensional space,
/// i.e. Gr(P^{k-1}, P^{n-1}) in its Pluecker embedding.
struct Grassmann {
    int k;
    int n;
    bool operator==(const Grassmann&) const = default;
};

/// Segre product of projective spaces P^{dims[i]-1}.
struct Segre {
    std::vector<int> dims;
    bool operator==(const Segre&) const = default;
};

/// F(0,1;2) as the rank-one traceless 3x3 matrices inside sl_3.
struct FlagAdjoint3 {
    bool operator==(const FlagAdjoint3&) const = default;
};

using VarietyFamily = std::variant<Veronese, Grassmann, Segre, FlagAdjoint3>;

struct AmbientInfo {
    std::int64_t N;    ///< projective dimension of the ambient space
    std::int64_t dimX; ///< projective dimension of the variety
    bool operator==(const AmbientInfo&) const = default;
};

/// Family-specific parameter vectors: one linear form (Veronese), k spanning
/// vectors (Grassmann), one vector per factor (Segre), (v1, v2) (flag).
struct ParamPoint {
    std::vector<Vector> vectors;
};

inline void validate(const VarietyFamily& v)
{
    std::visit(
        [](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Veronese>) {
                if (f.n < 1 || f.d < 1)
                    throw Error(ErrorKind::PrecondViolated, "Veronese requires n >= 1 and d >= 1");
            } else if constexpr (std::is_same_v<F, Grassmann>) {
                if (f.k < 1 || f.k > f.n - 1)
                    throw Error(ErrorKind::PrecondViolated, "Grassmann requires 1 <= k <= n-1");
            } else if constexpr (std::is_same_v<F, Segre>) {
                if (f.dims.size() < 2)
                    throw Error(ErrorKind::PrecondViolated, "Segre requires at least two factors");
                for (int d : f.dims)
                    if (d < 2)
                        throw Error(ErrorKind::PrecondViolated, "Segre factor dimensions must be >= 2");
            }
        },
        v);
}

/// Hodge-dual normal form Grassmann(min(k, n-k), n); other families unchanged.
inline VarietyFamily normalized(const VarietyFamily& v)
{
    if (const auto* g = std::get_if<Grassmann>(&v))
        return Grassmann{std::min(g->k, g->n - g->k), g->n};
    return v;
}

inline std::string family_kind(const VarietyFamily& v)
{
    return std::visit(
        [](const auto& f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Veronese>)
                return "veronese";
            else if constexpr (std::is_same_v<F, Grassmann>)
                return "grassmann";
            else if constexpr (std::is_same_v<F, Segre>)
                return "segre";
            else
                return "flag_adjoint3";
        },
        v);
}

inline std::vector<int> family_params(const VarietyFamily& v)
{
    return std::visit(
        [](const auto& f) -> std::vector<int> {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Veronese>)
                return {f.n, f.d};
            else if constexpr (std::is_same_v<F, Grassmann>)
                return {f.k, f.n};
            else if constexpr (std::is_same_v<F, Segre>)
                return f.dims;
            else
                return {};
        },
        v);
}

inline VarietyFamily make_family(const std::string& kind, const std::vector<int>& params)
{
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw Error(ErrorKind::InvalidData, kind + " expects " + std::to_string(count) + " parameters");
    };
    VarietyFamily v;
    if (kind == "veronese") {
        need(2);
        v = Veronese{params[0], params[1]};
    } else if (kind == "grassmann") {
        need(2);
        v = Grassmann{params[0], params[1]};
    } else if (kind == "segre") {
        v = Segre{params};
    } else if (kind == "flag_adjoint3") {
        need(0);
        v = FlagAdjoint3{};
    } else {
        throw Error(ErrorKind::InvalidData, "unknown variety family '" + kind + "'");
    }
    validate(v);
    return v;
}

/// Human label, e.g. "Veronese(2,3)".
inline std::string describe(const VarietyFamily& v)
{
    return std::visit(
        [](const auto& f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Veronese>)
                return "Veronese(" + std::to_string(f.n) + "," + std::to_string(f.d) + ")";
            else if constexpr (std::is_same_v<F, Grassmann>)
                return "Grassmann(" + std::to_string(f.k) + "," + std::to_string(f.n) + ")";
            else if constexpr (std::is_same_v<F, Segre>) {
                std::string s = "Segre(";
                for (std::size_t i = 0; i < f.dims.size(); ++i)
                    s += (i ? "," : "") + std::to_string(f.dims[i]);
                return s + ")";
            } else
                return "FlagAdjoint3";
        },
        v);
}

inline AmbientInfo ambient(const VarietyFamily& v)
{
    validate(v);
    auto checked = [](const Integer& z) {
        if (z > Integer(std::numeric_limits<std::int64_t>::max() / 4))
            throw Error(ErrorKind::UnknownCase, "ambient dimension exceeds the 64-bit range");
        return z.convert_to<std::int64_t>();
    };
    return std::visit(
        [&](const auto& f) -> AmbientInfo {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Veronese>)
                return {checked(binomial(f.n + f.d, f.d) - 1), f.n};
            else if constexpr (std::is_same_v<F, Grassmann>)
                return {checked(binomial(f.n, f.k) - 1), std::int64_t(f.k) * (f.n - f.k)};
            else if constexpr (std::is_same_v<F, Segre>) {
                Integer prod = 1;
                std::int64_t dim = 0;
                for (int d : f.dims) {
                    prod *= d;
                    dim += d - 1;
                }
                return {checked(prod - 1), dim};
            } else
                return {7, 3};
        },
        v);
}

/// Length of the coordinate vectors produced by embed(): N+1, except the flag
/// family which uses the 9 entries of a 3x3 matrix (trace zero is checked, not
/// eliminated).
inline std::size_t coord_len(const VarietyFamily& v)
{
    if (std::holds_alternative<FlagAdjoint3>(v))
        return 9;
    return static_cast<std::size_t>(ambient(v).N + 1);
}

// ---------------------------------------------------------------------------
// Small helpers shared by the flag family, flag_decomp and witness.

inline Vector cross(const Vector& a, const Vector& b)
{
    if (a.size() != 3 || b.size() != 3)
        throw Error(ErrorKind::DimensionMismatch, "cross product needs 3-vectors");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Row-major 3x3 matrix w * phi^T, the image of (u ^ v) (x) w with phi = u x v,
/// i.e. x -> w * det(u | v | x).
inline Vector wedge_tensor_matrix(const Vector& u, const Vector& v, const Vector& w)
{
    const Vector phi = cross(u, v);
    Vector m(9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[3 * i + j] = w[i] * phi[j];
    return m;
}

inline Matrix as_matrix3(const Vector& coords)
{
    if (coords.size() != 9)
        throw Error(ErrorKind::DimensionMismatch, "expected 9 matrix entries");
    return Matrix(3, 3, coords);
}

inline Rational trace3(const Vector& m) { return m.at(0) + m.at(4) + m.at(8); }

inline Rational det3(const Vector& m)
{
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

// ---------------------------------------------------------------------------

namespace detail {

/// Degree-d exponent vectors in `vars` variables, graded-lex (x0 highest first).
inline std::vector<Exponent> monomials(std::size_t vars, int d)
{
    std::vector<Exponent> out;
    Exponent e(vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == vars) {
            e[pos] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[pos] = static_cast<std::uint16_t>(a);
            self(self, pos + 1, left - a);
        }
    };
    if (vars > 0)
        rec(rec, 0, d);
    return out;
}

inline Integer multinomial(const Exponent& e)
{
    Integer r = 1;
    std::int64_t total = 0;
    for (auto x : e) {
        total += x;
        r *= binomial(total, x);
    }
    return r;
}

/// Coefficients of l^deg indexed like monomials(l.size(), deg).
inline Vector power_coefficients(const Vector& l, int deg)
{
    const auto mons = monomials(l.size(), deg);
    Vector out(mons.size());
    for (std::size_t m = 0; m < mons.size(); ++m) {
        Rational c(multinomial(mons[m]));
        for (std::size_t i = 0; i < l.size() && !c.is_zero(); ++i)
            for (unsigned k = 0; k < mons[m][i]; ++k)
                c *= l[i];
        out[m] = c;
    }
    return out;
}

inline std::map<Exponent, std::size_t> monomial_index(std::size_t vars, int d)
{
    std::map<Exponent, std::size_t> idx;
    const auto mons = monomials(vars, d);
    for (std::size_t i = 0; i < mons.size(); ++i)
        idx.emplace(mons[i], i);
    return idx;
}

/// k-subsets of {0..n-1} in lexicographic order, as bitmasks.
inline std::vector<std::uint64_t> subsets_lex(int n, int k)
{
    std::vector<std::uint64_t> out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = i;
    if (n > 64)
        throw Error(ErrorKind::UnknownCase, "Grassmann coordinates limited to n <= 64");
    while (true) {
        std::uint64_t mask = 0;
        for (int x : c)
            mask |= std::uint64_t{1} << x;
        out.push_back(mask);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline Rational minor_of(const std::vector<Vector>& cols, std::uint64_t rows, std::uint64_t col_mask)
{
    std::vector<std::size_t> r, c;
    for (std::size_t i = 0; i < 64; ++i) {
        if (rows >> i & 1)
            r.push_back(i);
        if (col_mask >> i & 1)
            c.push_back(i);
    }
    if (r.size() != c.size())
        throw Error(ErrorKind::DimensionMismatch, "non-square minor");
    if (r.empty())
        return Rational(1);
    Matrix m(r.size(), r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            m(i, j) = cols[c[j]][r[i]];
    return determinant(std::move(m));
}

inline void require_param_shape(const ParamPoint& p, std::size_t count, std::size_t len, const char* what)
{
    if (p.vectors.size() != count)
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": wrong number of parameter vectors");
    for (const auto& v : p.vectors)
        if (v.size() != len)
            throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": wrong parameter vector length");
}

inline void require_segre_shape(const Segre& s, const ParamPoint& p)
{
    if (p.vectors.size() != s.dims.size())
        throw Error(ErrorKind::DimensionMismatch, "Segre: one vector per factor required");
    for (std::size_t i = 0; i < s.dims.size(); ++i)
        if (p.vectors[i].size() != static_cast<std::size_t>(s.dims[i]))
            throw Error(ErrorKind::DimensionMismatch, "Segre: factor vector length mismatch");
}

inline Vector outer_flatten(const std::vector<Vector>& factors)
{
    Vector out{Rational(1)};
    for (const auto& f : factors) {
        Vector next;
        next.reserve(out.size() * f.size());
        for (const auto& a : out)
            for (const auto& b : f)
                next.push_back(a * b);
        out = std::move(next);
    }
    return out;
}

} // namespace detail

/// Homogeneous coordinates of the point of X parametrized by p.
inline Vector embed(const VarietyFamily& v, const ParamPoint& p)
{
    validate(v);
    return std::visit(
        [&](const auto& f) -> Vector {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Veronese>) {
                detail::require_param_shape(p, 1, static_cast<std::size_t>(f.n + 1), "Veronese");
                if (is_zero(p.vectors[0]))
                    throw Error(ErrorKind::DegenerateParams, "Veronese: zero linear form");
                return detail::power_coefficients(p.vectors[0], f.d);
            } else if constexpr (std::is_same_v<F, Grassmann>) {
                detail::require_param_shape(p, static_cast<std::size_t>(f.k), static_cast<std::size_t>(f.n),
                                            "Grassmann");
                const std::uint64_t all_cols = (std::uint64_t{1} << f.k) - 1;
                Vector out;
                for (auto rows : detail::subsets_lex(f.n, f.k))
                    out.push_back(detail::minor_of(p.vectors, rows, all_cols));
                if (is_zero(out))
                    throw Error(ErrorKind::DegenerateParams, "Grassmann: spanning vectors are dependent");
                return out;
            } else if constexpr (std::is_same_v<F, Segre>) {
                detail::require_segre_shape(f, p);
                for (const auto& x : p.vectors)
                    if (is_zero(x))
                        throw Error(ErrorKind::DegenerateParams, "Segre: zero factor");
                return detail::outer_flatten(p.vectors);
            } else {
                detail::require_param_shape(p, 2, 3, "FlagAdjoint3");
                if (is_zero(cross(p.vectors[0], p.vectors[1])))
                    throw Error(ErrorKind::DegenerateParams, "FlagAdjoint3: v1 and v2 are dependent");
                return wedge_tensor_matrix(p.vectors[0], p.vectors[1], p.vectors[0]);
            }
        },
        v);
}

/// Rows spanning the affine cone over the tangent space of X at embed(v, p).
inline Matrix tangent_cone_basis(const VarietyFamily& v, const ParamPoint& p)
{
    validate(v);
    return std::visit(
        [&](const auto& f) -> Matrix {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Veronese>) {
                detail::require_param_shape(p, 1, static_cast<std::size_t>(f.n + 1), "Veronese");
                const Vector& l = p.vectors[0];
                if (is_zero(l))
                    throw Error(ErrorKind::DegenerateParams, "Veronese: zero linear form");
                const auto vars = l.size();
                const auto lower = detail::monomials(vars, f.d - 1);
                const Vector lower_coef = detail::power_coefficients(l, f.d - 1);
                const auto index = detail::monomial_index(vars, f.d);
                Matrix m(vars, index.size());
                for (std::size_t i = 0; i < vars; ++i)
                    for (std::size_t b = 0; b < lower.size(); ++b) {
                        Exponent e = lower[b];
                        ++e[i];
                        m(i, index.at(e)) = lower_coef[b];
                    }
                return m;
            } else if constexpr (std::is_same_v<F, Grassmann>) {
                detail::require_param_shape(p, static_cast<std::size_t>(f.k), static_cast<std::size_t>(f.n),
                                            "Grassmann");
                const auto subsets = detail::subsets_lex(f.n, f.k);
                const std::uint64_t all_cols = (std::uint64_t{1} << f.k) - 1;
                // Replacing column i by e_j: the minor on S is, by Laplace along
                // column i, (-1)^{pos(j in S) + i} * minor(S \ {j}, cols \ {i}).
                std::map<std::pair<std::uint64_t, int>, Rational> lower;
                Matrix m(static_cast<std::size_t>(f.k * f.n), subsets.size());
                for (std::size_t s = 0; s < subsets.size(); ++s) {
                    const std::uint64_t S = subsets[s];
                    int pos = 0;
                    for (int j = 0; j < f.n; ++j) {
                        if (!(S >> j & 1))
                            continue;
                        const std::uint64_t rest = S & ~(std::uint64_t{1} << j);
                        for (int i = 0; i < f.k; ++i) {
                            const std::uint64_t cols = all_cols & ~(std::uint64_t{1} << i);
                            auto it = lower.find({rest, i});
                            if (it == lower.end())
                                it = lower.emplace(std::pair{rest, i}, detail::minor_of(p.vectors, rest, cols)).first;
                            Rational val = it->second;
                            if ((pos + i) % 2)
                                val = -val;
                            m(static_cast<std::size_t>(i * f.n + j), s) = val;
                        }
                        ++pos;
                    }
                }
                // Degeneracy check on the point itself.
                Vector pt;
                for (auto rows : subsets)
                    pt.push_back(detail::minor_of(p.vectors, rows, all_cols));
                if (is_zero(pt))
                    throw Error(ErrorKind::DegenerateParams, "Grassmann: spanning vectors are dependent");
                return m;
            } else if constexpr (std::is_same_v<F, Segre>) {
                detail::require_segre_shape(f, p);
                for (const auto& x : p.vectors)
                    if (is_zero(x))
                        throw Error(ErrorKind::DegenerateParams, "Segre: zero factor");
                Matrix m;
                for (std::size_t slot = 0; slot < f.dims.size(); ++slot)
                    for (int j = 0; j < f.dims[slot]; ++j) {
                        auto factors = p.vectors;
                        factors[slot] = unit_vector(static_cast<std::size_t>(f.dims[slot]), static_cast<std::size_t>(j));
                        m.append_row(detail::outer_flatten(factors));
                    }
                return m;
            } else {
                detail::require_param_shape(p, 2, 3, "FlagAdjoint3");
                const Vector& v1 = p.vectors[0];
                const Vector& v2 = p.vectors[1];
                const Vector phi = cross(v1, v2);
                if (is_zero(phi))
                    throw Error(ErrorKind::DegenerateParams, "FlagAdjoint3: v1 and v2 are dependent");
                Matrix m;
                for (std::size_t j = 0; j < 3; ++j) {
                    const Vector u = unit_vector(3, j);
                    // d/de of (v1 + e u) phi(v1 + e u, v2)^T
                    Vector row = wedge_tensor_matrix(v1, v2, u) + wedge_tensor_matrix(u, v2, v1);
                    m.append_row(row);
                }
                for (std::size_t j = 0; j < 3; ++j)
                    m.append_row(wedge_tensor_matrix(v1, unit_vector(3, j), v1));
                return m;
            }
        },
        v);
}

/// Random parameter point with integer entries in [-bound, bound]; resampled
/// until embed() and tangent_cone_basis() accept it.
inline ParamPoint random_param(const VarietyFamily& v, Rng& rng, long bound = 50)
{
    validate(v);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ParamPoint p;
        std::visit(
            [&](const auto& f) {
                using F = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<F, Veronese>)
                    p.vectors.push_back(random_int_vector(rng, static_cast<std::size_t>(f.n + 1), bound));
                else if constexpr (std::is_same_v<F, Grassmann>)
                    for (int i = 0; i < f.k; ++i)
                        p.vectors.push_back(random_int_vector(rng, static_cast<std::size_t>(f.n), bound));
                else if constexpr (std::is_same_v<F, Segre>)
                    for (int d : f.dims)
                        p.vectors.push_back(random_int_vector(rng, static_cast<std::size_t>(d), bound));
                else
                    for (int i = 0; i < 2; ++i)
                        p.vectors.push_back(random_int_vector(rng, 3, bound));
            },
            v);
        try {
            (void)embed(v, p);
            return p;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateParams)
                throw;
        }
    }
    throw Error(ErrorKind::SamplingFailed, "could not sample a nondegenerate point of " + describe(v));
}

/// Defining equations of the three hypersurfaces with known equations:
/// sigma_2 of Veronese(2,2) (symmetric 3x3 determinant), Grassmann(2,4) itself
/// (Klein quadric), sigma_2 of the flag family (3x3 determinant on the 9
/// matrix coordinates; on the trace-zero space this is the restriction).
inline MultiPoly known_hypersurface_equation(const VarietyFamily& v, int s)
{
    if (const auto* ver = std::get_if<Veronese>(&v); ver && *ver == Veronese{2, 2} && s == 2) {
        // coordinates: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2
        auto x = [](std::size_t i) { return MultiPoly::variable(6, i); };
        const Rational half(1, 2);
        std::array<std::array<MultiPoly, 3>, 3> m{{{x(0), half * x(1), half * x(2)},
                                                   {half * x(1), x(3), half * x(4)},
                                                   {half * x(2), half * x(4), x(5)}}};
        return det3(m);
    }
    if (const auto* g = std::get_if<Grassmann>(&v); g && normalized(v) == VarietyFamily(Grassmann{2, 4}) && s == 1) {
        // p12 p34 - p13 p24 + p14 p23 with lex order p12 p13 p14 p23 p24 p34
        auto p = [](std::size_t i) { return MultiPoly::variable(6, i); };
        return p(0) * p(5) - p(1) * p(4) + p(2) * p(3);
    }
    if (std::holds_alternative<FlagAdjoint3>(v) && s == 2) {
        auto x = [](std::size_t i) { return MultiPoly::variable(9, i); };
        std::array<std::array<MultiPoly, 3>, 3> m{{{x(0), x(1), x(2)}, {x(3), x(4), x(5)}, {x(6), x(7), x(8)}}};
        return det3(m);
    }
    throw Error(ErrorKind::NoKnownEquation,
                "no defining equation shipped for sigma_" + std::to_string(s) + " of " + describe(v));
}

/// e1(x)e1(x)e1 + e1(x)e3(x)e3 + e2(x)e2(x)(e1+e2) + e3(x)e3(x)e2 + e3(x)e2(x)e3
inline Tensor3 allums13()
{
    const Vector e1 = make_vector({1, 0, 0}), e2 = make_vector({0, 1, 0}), e3 = make_vector({0, 0, 1});
    Tensor3 t = Tensor3::outer(e1, e1, e1);
    t += Tensor3::outer(e1, e3, e3);
    t += Tensor3::outer(e2, e2, e1 + e2);
    t += Tensor3::outer(e3, e3, e2);
    t += Tensor3::outer(e3, e2, e3);
    return t;
}

} // namespace ranklab
