#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ohasse {

using Integer = mpz_class;

// Primes <= limit, ascending.
std::vector<std::uint64_t> prime_sieve(std::uint64_t limit);

bool is_prime_u64(std::uint64_t n);

// Prime factorisation by trial division, ascending primes with exponents.
// Throws Unsupported when a cofactor larger than 10^24 survives trial division
// to 10^7; callers only factor cross terms and coefficients of small fixtures.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

// Removes every factor of p from n, returning the multiplicity.
unsigned remove_factor(Integer& n, const Integer& p);

// Largest r with r^k <= n (n >= 0, k >= 1).
Integer floor_root(const Integer& n, unsigned long k);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t to_u64(const Integer& n);

inline std::size_t bit_length(const Integer& n) {
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace ohasse
