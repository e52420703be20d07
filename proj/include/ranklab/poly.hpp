#pragma once

#include <cstdint>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "scalar.hpp"

namespace ranklab {

using Exponent = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial over Q with dense exponent vectors.
/// No zero coefficient is ever stored.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const Rational& c)
    {
        MultiPoly p(num_vars);
        p.add_term(Exponent(num_vars, 0), c);
        return p;
    }

    static MultiPoly variable(std::size_t num_vars, std::size_t i)
    {
        if (i >= num_vars)
            throw Error(ErrorKind::DimensionMismatch, "variable index out of range");
        Exponent e(num_vars, 0);
        e[i] = 1;
        MultiPoly p(num_vars);
        p.add_term(e, Rational(1));
        return p;
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c)
    {
        if (e.size() != num_vars_)
            throw Error(ErrorKind::DimensionMismatch, "exponent vector length differs from num_vars");
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Total degree of the highest term; nullopt for the zero polynomial.
    std::optional<unsigned> degree() const
    {
        std::optional<unsigned> best;
        for (const auto& [e, c] : terms_) {
            unsigned d = 0;
            for (auto x : e)
                d += x;
            if (!best || d > *best)
                best = d;
        }
        return best;
    }

    bool is_homogeneous() const
    {
        std::optional<unsigned> d0;
        for (const auto& [e, c] : terms_) {
            unsigned d = 0;
            for (auto x : e)
                d += x;
            if (d0 && *d0 != d)
                return false;
            d0 = d;
        }
        return true;
    }

    Rational eval(std::span<const Rational> x) const
    {
        if (x.size() != num_vars_)
            throw Error(ErrorKind::DimensionMismatch,
                        "point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                            std::to_string(num_vars_) + " variables");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < num_vars_ && !term.is_zero(); ++i)
                for (unsigned k = 0; k < e[i]; ++k)
                    term *= x[i];
            total += term;
        }
        return total;
    }

    MultiPoly& operator+=(const MultiPoly& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    MultiPoly& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        a.check_compatible(b);
        MultiPoly r(a.num_vars_);
        Exponent e(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                r.add_term(e, ca * cb);
            }
        return r;
    }

    bool operator==(const MultiPoly&) const = default;

private:
    void check_compatible(const MultiPoly& o) const
    {
        if (o.num_vars_ != num_vars_)
            throw Error(ErrorKind::DimensionMismatch, "polynomials over different variable counts");
    }

    std::size_t num_vars_;
    std::map<Exponent, Rational> terms_;
};

/// Determinant of a 3x3 matrix of polynomials (cofactor expansion).
inline MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace ranklab
