#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "error.hpp"

namespace ranklab {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

/// Accepts "7", "-3", "5/6", "+2/4" (reduced on construction); surrounding
/// whitespace is ignored.
inline Rational parse_rational(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    const auto last = text.find_last_not_of(" \t\r\n");
    std::string s(first == std::string_view::npos ? std::string_view{} : text.substr(first, last - first + 1));
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    if (s.empty())
        throw Error(ErrorKind::InvalidData, "empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](std::string_view part) {
        if (part.empty())
            return false;
        std::size_t i = (part.front() == '-') ? 1 : 0;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s))
            throw Error(ErrorKind::InvalidData, "bad rational literal '" + s + "'");
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-')
        throw Error(ErrorKind::InvalidData, "bad rational literal '" + s + "'");
    Integer d(den);
    if (d == 0)
        throw Error(ErrorKind::InvalidData, "zero denominator in '" + s + "'");
    return Rational(Integer(num), d);
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

/// Binomial coefficient with C(m,k) = 0 for m < 0, k < 0 or k > m.
inline Integer binomial(std::int64_t m, std::int64_t k)
{
    if (m < 0 || k < 0 || k > m)
        return Integer(0);
    if (k > m - k)
        k = m - k;
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (m - k + i);
        r /= i;
    }
    return r;
}

/// Same convention, for callers that know the value fits.
inline std::int64_t binomial_i64(std::int64_t m, std::int64_t k)
{
    return binomial(m, k).convert_to<std::int64_t>();
}

inline Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "vector sum of different lengths");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "vector difference of different lengths");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline Vector operator*(const Rational& s, const Vector& v)
{
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

inline Vector make_vector(std::initializer_list<long> xs)
{
    Vector v;
    v.reserve(xs.size());
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

/// e_i in dimension n (0-based index).
inline Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = 1;
    return v;
}

/// True if some scalar multiple of one vector equals the other (zero vectors included).
inline bool proportional(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i])
                return false;
    return true;
}

} // namespace ranklab
