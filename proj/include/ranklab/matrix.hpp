#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>

#include "random.hpp"
#include "scalar.hpp"

namespace ranklab {

/// Row-major dense matrix; entries.size() == rows * cols always.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_)
            throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
    }

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        DenseMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw Error(ErrorKind::DimensionMismatch, "ragged row list");
            std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    const std::vector<T>& entries() const noexcept { return entries_; }

    void append_row(std::span<const T> r)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = r.size();
        if (r.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "appended row has wrong length");
        entries_.insert(entries_.end(), r.begin(), r.end());
        ++rows_;
    }

    void append_rows(const DenseMatrix& other)
    {
        for (std::size_t i = 0; i < other.rows(); ++i)
            append_row(other.row(i));
    }

    DenseMatrix transpose() const
    {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using Matrix = DenseMatrix<Rational>;

inline Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace detail {

inline void divexact(Integer& x, const Integer& d)
{
    mpz_divexact(x.backend().data(), x.backend().data(), d.backend().data());
}

/// Scales every row by the lcm of its denominators.
inline DenseMatrix<Integer> clear_denominators(const Matrix& m)
{
    DenseMatrix<Integer> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& q : m.row(i))
            l = boost::multiprecision::lcm(l, denominator_of(q));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            out(i, j) = numerator_of(q) * (l / denominator_of(q));
        }
    }
    return out;
}

} // namespace detail

/// Rank over Z (equivalently Q) by fraction-free Bareiss elimination; the
/// matrix is consumed. Pivot columns may be skipped; every stored entry stays
/// a minor of the input, so each division below is exact.
inline std::size_t bareiss_rank(DenseMatrix<Integer> a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    Integer tmp;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a(pivot, j), a(rank, j));
        const Integer& p = a(rank, col);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Integer lead = a(r, col);
            for (std::size_t j = col + 1; j < cols; ++j) {
                tmp = p * a(r, j);
                tmp -= lead * a(rank, j);
                detail::divexact(tmp, prev);
                a(r, j) = tmp;
            }
            a(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

inline std::size_t rank_exact(const Matrix& m) { return bareiss_rank(detail::clear_denominators(m)); }

// ---------------------------------------------------------------------------
// Arithmetic modulo a word-size prime (p < 2^63).

struct ModField {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const
    {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

    std::uint64_t reduce(const Integer& z) const
    {
        Integer r = z % Integer(p);
        if (r < 0)
            r += p;
        return r.convert_to<std::uint64_t>();
    }

    /// Throws NonInvertibleDenominator when p divides the denominator.
    std::uint64_t reduce(const Rational& q) const
    {
        const std::uint64_t den = reduce(denominator_of(q));
        if (den == 0)
            throw Error(ErrorKind::NonInvertibleDenominator,
                        "denominator " + denominator_of(q).str() + " vanishes mod " + std::to_string(p));
        return mul(reduce(numerator_of(q)), inv(den));
    }
};

inline bool is_probable_prime(std::uint64_t n)
{
    std::mt19937_64 gen(n);
    return boost::multiprecision::miller_rabin_test(boost::multiprecision::cpp_int(n), 25, gen);
}

/// Uniform random prime in [2^61, 2^62).
inline std::uint64_t random_prime_62(Rng& rng)
{
    std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 61, (std::uint64_t{1} << 62) - 1);
    for (;;) {
        const std::uint64_t c = dist(rng) | 1;
        if (is_probable_prime(c))
            return c;
    }
}

inline std::size_t rank_mod(DenseMatrix<std::uint64_t> a, const ModField& f)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a(pivot, j), a(rank, j));
        const std::uint64_t inv = f.inv(a(rank, col));
        for (std::size_t j = col; j < cols; ++j)
            a(rank, j) = f.mul(a(rank, j), inv);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t lead = a(r, col);
            if (lead == 0)
                continue;
            for (std::size_t j = col; j < cols; ++j)
                a(r, j) = f.sub(a(r, j), f.mul(lead, a(rank, j)));
        }
        ++rank;
    }
    return rank;
}

/// Rank of m reduced modulo the prime p; never exceeds rank_exact(m).
inline std::size_t rank_modp(const Matrix& m, std::uint64_t p)
{
    const ModField f{p};
    DenseMatrix<std::uint64_t> a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a(i, j) = f.reduce(m(i, j));
    return rank_mod(std::move(a), f);
}

/// Streaming row echelon form over F_p. Memory is rank * cols words, so
/// tall matrices never need to be materialized.
class ModpEchelon {
public:
    ModpEchelon(std::size_t cols, std::uint64_t p) : cols_(cols), field_{p} {}

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    /// Returns true if the row increased the rank.
    bool add_row(std::vector<std::uint64_t> r)
    {
        if (r.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "row length differs from echelon width");
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const std::uint64_t lead = r[pivots_[i]];
            if (lead == 0)
                continue;
            const auto& basis = basis_[i];
            for (std::size_t j = pivots_[i]; j < cols_; ++j)
                if (basis[j] != 0)
                    r[j] = field_.sub(r[j], field_.mul(lead, basis[j]));
        }
        const auto it = std::find_if(r.begin(), r.end(), [](std::uint64_t x) { return x != 0; });
        if (it == r.end())
            return false;
        const auto col = static_cast<std::size_t>(it - r.begin());
        const std::uint64_t inv = field_.inv(r[col]);
        for (std::size_t j = col; j < cols_; ++j)
            r[j] = field_.mul(r[j], inv);
        pivots_.push_back(col);
        basis_.push_back(std::move(r));
        return true;
    }

    bool add_row(std::span<const Rational> r)
    {
        std::vector<std::uint64_t> red(r.size());
        for (std::size_t j = 0; j < r.size(); ++j)
            red[j] = field_.reduce(r[j]);
        return add_row(std::move(red));
    }

private:
    std::size_t cols_;
    ModField field_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::uint64_t>> basis_;
};

/// Determinant by Gaussian elimination over Q (small matrices).
inline Rational determinant(Matrix a)
{
    if (a.rows() != a.cols())
        throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            const Rational factor = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j)
                a(r, j) -= factor * a(col, j);
        }
    }
    return det;
}

} // namespace ranklab
