#pragma once

// Seeded generators and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's own algorithms: plain mpq_class
// arithmetic, plain modular arithmetic, seen-sets instead of cycle detection.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ohasse/finite/finite_map.hpp"
#include "ohasse/global/height.hpp"
#include "ohasse/map/parser.hpp"

namespace support {

using namespace ohasse;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed2024);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long max_abs) {
    long num = uniform(-max_abs, max_abs);
    long den = uniform(1, max_abs);
    return Rational(Integer(num), Integer(den));
}

inline Rational random_nonzero_rational(long max_abs) {
    while (true) {
        Rational r = random_rational(max_abs);
        if (!r.is_zero()) return r;
    }
}

inline FqPoly random_fq_poly(const FiniteField& k, int max_deg) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(uniform(0, max_deg)) + 1);
    for (auto& x : c) x = static_cast<std::uint64_t>(uniform(0, static_cast<long>(k.size()) - 1));
    return FqPoly(k, c);
}

inline RatFunc random_ratfunc(const RationalFunctionField& K, int max_deg) {
    while (true) {
        FqPoly a = random_fq_poly(K.constants(), max_deg), b = random_fq_poly(K.constants(), max_deg);
        if (!a.is_zero() && !b.is_zero()) return K.make(a, b);
    }
}

// Points with H <= n over Q, listed by brute force over all pairs.
inline std::set<std::pair<Integer, Integer>> brute_points_q(long n) {
    std::set<std::pair<Integer, Integer>> out;
    for (long a = -n; a <= n; ++a)
        for (long b = 0; b <= n; ++b) {
            if (a == 0 && b == 0) continue;
            mpq_class v;
            if (b == 0) {
                out.insert({1, 0});
                continue;
            }
            v = mpq_class(a, b);
            v.canonicalize();
            out.insert({v.get_num(), v.get_den()});
        }
    return out;
}

// Naive orbit over Q: polynomial map given by integer-free rational
// coefficients, affine start. Returns (tail, period) when a repeat happens
// within `steps`, else nullopt.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> naive_orbit_q(const std::vector<mpq_class>& coeffs_low,
                                                                           const std::optional<mpq_class>& start,
                                                                           std::uint64_t steps) {
    std::map<std::optional<mpq_class>, std::uint64_t> seen;
    std::optional<mpq_class> x = start;
    for (std::uint64_t n = 0; n <= steps; ++n) {
        auto [it, fresh] = seen.emplace(x, n);
        if (!fresh) return std::make_pair(it->second, n - it->second);
        if (x) {
            mpq_class acc = 0;
            for (auto c = coeffs_low.rbegin(); c != coeffs_low.rend(); ++c) acc = acc * *x + *c;
            // Cap the size so a wandering orbit cannot explode memory.
            if (mpz_sizeinbase(acc.get_num_mpz_t(), 2) > 4096 || mpz_sizeinbase(acc.get_den_mpz_t(), 2) > 4096)
                return std::nullopt;
            x = acc;
        }
    }
    return std::nullopt;
}

// Naive rho over P^1(F_p) for x -> (sum a_i x^i) / (sum b_i x^i), p prime,
// infinity encoded as p: the start's tail and cycle from a seen-list.
inline std::pair<std::uint64_t, std::uint64_t> naive_rho_fp(std::uint64_t p, const std::vector<std::uint64_t>& a,
                                                            const std::vector<std::uint64_t>& b, std::uint64_t x0) {
    auto powmod = [p](std::uint64_t base, std::uint64_t e) {
        std::uint64_t r = 1;
        base %= p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    auto step = [&](std::uint64_t x) -> std::uint64_t {
        const std::size_t d = a.size() - 1;
        std::uint64_t fa = 0, fb = 0;
        if (x == p) {
            fa = a[d] % p;
            fb = b[d] % p;
        } else {
            for (std::size_t i = 0; i <= d; ++i) {
                fa = (fa + a[i] % p * powmod(x, i)) % p;
                fb = (fb + b[i] % p * powmod(x, i)) % p;
            }
        }
        if (fb == 0) return p;
        return fa * powmod(fb, p - 2) % p;
    };
    std::vector<std::int64_t> seen(p + 1, -1);
    std::uint64_t x = x0;
    for (std::uint64_t n = 0;; ++n) {
        if (seen[x] >= 0) return {static_cast<std::uint64_t>(seen[x]), n - static_cast<std::uint64_t>(seen[x])};
        seen[x] = static_cast<std::int64_t>(n);
        x = step(x);
    }
}

}  // namespace support
