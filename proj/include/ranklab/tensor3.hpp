#pragma once

#include <array>

#include "matrix.hpp"

namespace ranklab {

/// Element of V1 (x) V2 (x) V3, indexed (i, j, k) with i fastest-varying last.
class Tensor3 {
public:
    Tensor3(std::size_t d1, std::size_t d2, std::size_t d3) : dims_{d1, d2, d3}, entries_(d1 * d2 * d3) {}

    static Tensor3 outer(const Vector& u, const Vector& v, const Vector& w)
    {
        Tensor3 t(u.size(), v.size(), w.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                for (std::size_t k = 0; k < w.size(); ++k)
                    t(i, j, k) = u[i] * v[j] * w[k];
        return t;
    }

    const std::array<std::size_t, 3>& dims() const noexcept { return dims_; }
    const std::vector<Rational>& entries() const noexcept { return entries_; }

    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return entries_[index(i, j, k)]; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return entries_[index(i, j, k)]; }

    Tensor3& operator+=(const Tensor3& o)
    {
        if (o.dims_ != dims_)
            throw Error(ErrorKind::DimensionMismatch, "tensor sum with different shapes");
        for (std::size_t i = 0; i < entries_.size(); ++i)
            entries_[i] += o.entries_[i];
        return *this;
    }

    /// Mode-m flattening: d_m rows, product of the other two dims as columns.
    Matrix flattening(int mode) const
    {
        if (mode < 1 || mode > 3)
            throw Error(ErrorKind::PrecondViolated, "flattening mode must be 1, 2 or 3");
        const auto m = static_cast<std::size_t>(mode - 1);
        const std::size_t a = (m + 1) % 3, b = (m + 2) % 3;
        Matrix out(dims_[m], dims_[a] * dims_[b]);
        std::array<std::size_t, 3> idx{};
        for (idx[0] = 0; idx[0] < dims_[0]; ++idx[0])
            for (idx[1] = 0; idx[1] < dims_[1]; ++idx[1])
                for (idx[2] = 0; idx[2] < dims_[2]; ++idx[2])
                    out(idx[m], idx[a] * dims_[b] + idx[b]) = (*this)(idx[0], idx[1], idx[2]);
        return out;
    }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const
    {
        return (i * dims_[1] + j) * dims_[2] + k;
    }

    std::array<std::size_t, 3> dims_;
    std::vector<Rational> entries_;
};

/// Rank of the mode flattening; the max over modes lower-bounds tensor rank.
inline std::size_t flattening_rank(const Tensor3& t, int mode) { return rank_exact(t.flattening(mode)); }

} // namespace ranklab
