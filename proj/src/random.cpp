#include "disord/random.hpp"

#include <random>

namespace disord {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

// Explicit draw instead of std::uniform_int_distribution, whose output is
// implementation-defined; seeds must replay identically everywhere.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace

std::vector<std::size_t> random_perm(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(mix64(seed));
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(p[i - 1], p[draw(rng, i)]);
    return p;
}

std::vector<double> rdis_values(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> p = random_perm(n, mix64(seed ^ 0x7d15ULL));
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(p[i] + 1);
    return out;
}

Mvp rmvp_poly(std::uint64_t seed) {
    std::mt19937_64 rng(mix64(seed ^ 0x33b5ULL));
    const char symbols[] = {'a', 'b', 'c', 'd', 'e', 'f'};
    std::vector<std::size_t> coeff_order = random_perm(7, rng());
    std::vector<Term> ts;
    ts.reserve(7);
    for (std::size_t t = 0; t < 7; ++t) {
        std::size_t nvars = 2 + draw(rng, 5);
        std::size_t picks[6] = {0, 1, 2, 3, 4, 5};
        for (std::size_t i = 6; i > 1; --i) std::swap(picks[i - 1], picks[draw(rng, i)]);
        std::vector<std::pair<std::string, int>> factors;
        factors.reserve(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            factors.emplace_back(std::string(1, symbols[picks[i]]),
                                 static_cast<int>(1 + draw(rng, 14)));
        ts.push_back({Monomial::from_factors(factors),
                      static_cast<double>(coeff_order[t] + 1)});
    }
    return Mvp::from_terms(std::move(ts));
}

}  // namespace disord
