#pragma once

#include <cstdint>
#include <vector>

#include "disord/mvp.hpp"

namespace disord {

// splitmix64 finalizer; good avalanche for combining seeds and counters.
std::uint64_t mix64(std::uint64_t x);

// Uniform 0-based permutation of {0..n-1}, deterministic in seed.
std::vector<std::size_t> random_perm(std::size_t n, std::uint64_t seed);

// Permutation of 1..n, the values behind `rdis(n, seed)`.
std::vector<double> rdis_values(std::size_t n, std::uint64_t seed);

// Seven-term random polynomial: each term has 2-6 distinct variables from
// a..f with exponents 1..14; the coefficients are a permutation of 1..7.
Mvp rmvp_poly(std::uint64_t seed);

}  // namespace disord
