#ifndef BIVEK_RNG_HPP
#define BIVEK_RNG_HPP

#include "bivek/bicomplex.hpp"
#include "bivek/bipoly.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace bivek::rng {

/// SplitMix64 step; used to derive well-separated stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// FNV-1a hash of a scope label (suite or test name).
inline std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/**
 * @brief Independent deterministic stream for (seed, scope, case index).
 *
 * Every suite case derives its own engine, so inserting or reordering cases
 * never shifts the numbers drawn by the others — a requirement for the
 * byte-identical report guarantee.
 */
inline std::mt19937_64 make_stream(std::uint64_t seed, std::string_view scope,
                                   std::uint64_t case_index = 0) {
    std::uint64_t state = seed;
    state ^= splitmix64(state) ^ hash_label(scope);
    state ^= splitmix64(state) ^ (0x632BE59BD9B4E019ULL * (case_index + 1));
    return std::mt19937_64{splitmix64(state)};
}

/// Uniform double in [lo, hi) from the top 53 bits (identical on every
/// platform, unlike std::uniform_real_distribution).
inline double uniform(std::mt19937_64& gen, double lo = 0.0, double hi = 1.0) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

/// Uniform integer in [lo, hi] by rejection-free modulo (bias negligible and
/// determinism exact for the small ranges used here).
inline int uniform_int(std::mt19937_64& gen, int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(gen() % span);
}

inline Complex complex_in(std::mt19937_64& gen, double amp = 1.0) {
    return {uniform(gen, -amp, amp), uniform(gen, -amp, amp)};
}

/// Uniform point of the disk |z| ≤ rmax (area-uniform).
inline Complex disk_point(std::mt19937_64& gen, double rmax = 0.9) {
    const double r = rmax * std::sqrt(uniform(gen));
    const double theta = uniform(gen, 0.0, 6.283185307179586);
    return std::polar(r, theta);
}

inline Bicomplex bicomplex_in(std::mt19937_64& gen, double amp = 1.0) {
    return {uniform(gen, -amp, amp), uniform(gen, -amp, amp), uniform(gen, -amp, amp),
            uniform(gen, -amp, amp)};
}

/// Dense random BiPoly of bidegree ≤ (max_m, max_n) in the ẑ-basis.
inline BiPoly bipoly_in(std::mt19937_64& gen, int max_m, int max_n, double amp = 1.0) {
    BiPoly f;
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= max_n; ++n)
            f = f + BiPoly::zhat_monomial(m, n, bicomplex_in(gen, amp));
    return f;
}

/// Random B-holomorphic polynomial: plus part in z* only, minus in z only.
inline BiPoly holomorphic_in(std::mt19937_64& gen, int degree, double amp = 1.0) {
    ComplexPoly plus, minus;
    for (int k = 0; k <= degree; ++k) {
        plus.add_term(0, k, complex_in(gen, amp));
        minus.add_term(k, 0, complex_in(gen, amp));
    }
    return {plus, minus};
}

/// Random BiPoly with integer coefficients in [-bound, bound] (exactly
/// representable, for tests that assert identities with zero tolerance).
inline BiPoly integer_bipoly_in(std::mt19937_64& gen, int max_m, int max_n, int bound = 3) {
    BiPoly f;
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= max_n; ++n) {
            const Bicomplex c{static_cast<double>(uniform_int(gen, -bound, bound)),
                              static_cast<double>(uniform_int(gen, -bound, bound)),
                              static_cast<double>(uniform_int(gen, -bound, bound)),
                              static_cast<double>(uniform_int(gen, -bound, bound))};
            f = f + BiPoly::zhat_monomial(m, n, c);
        }
    return f;
}

/// Random B-holomorphic polynomial with integer coefficients.
inline BiPoly integer_holomorphic_in(std::mt19937_64& gen, int degree, int bound = 3) {
    ComplexPoly plus, minus;
    for (int k = 0; k <= degree; ++k) {
        plus.add_term(0, k,
                      Complex(uniform_int(gen, -bound, bound), uniform_int(gen, -bound, bound)));
        minus.add_term(k, 0,
                       Complex(uniform_int(gen, -bound, bound), uniform_int(gen, -bound, bound)));
    }
    return {plus, minus};
}

} // namespace bivek::rng

#endif // BIVEK_RNG_HPP
