#pragma once

#include <cstdint>
#include <random>

#include "scalar.hpp"

namespace ranklab {

/// splitmix64 finalizer; used to derive independent per-task seeds from
/// (seed, index) pairs so results do not depend on execution order.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index = 0)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline Rational random_int(Rng& rng, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    return Rational(dist(rng));
}

/// Nonzero integer in [-bound, bound].
inline Rational random_nonzero_int(Rng& rng, long bound)
{
    std::uniform_int_distribution<long> dist(1, bound);
    std::bernoulli_distribution sign(0.5);
    const long v = dist(rng);
    return Rational(sign(rng) ? v : -v);
}

/// Uniform integers in [-bound, bound], resampled until not the zero vector.
inline Vector random_int_vector(Rng& rng, std::size_t len, long bound)
{
    if (bound < 1)
        throw Error(ErrorKind::PrecondViolated, "random_int_vector bound must be >= 1");
    Vector v(len);
    do {
        for (auto& x : v)
            x = random_int(rng, bound);
    } while (len > 0 && is_zero(v));
    return v;
}

inline Vector random_int_vector(std::size_t len, long bound, std::uint64_t seed)
{
    Rng rng(mix_seed(seed));
    return random_int_vector(rng, len, bound);
}

/// Nonzero rational num/den with |num| <= num_bound, 1 <= den <= den_bound.
inline Rational random_nonzero_rational(Rng& rng, long num_bound, long den_bound)
{
    std::uniform_int_distribution<long> den(1, den_bound);
    return random_nonzero_int(rng, num_bound) / Rational(den(rng));
}

} // namespace ranklab
