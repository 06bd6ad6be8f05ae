#include "ohasse/algebra/integer.hpp"

#include <algorithm>
#include <limits>

#include "ohasse/errors.hpp"

namespace ohasse {

std::vector<std::uint64_t> prime_sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i > limit / i) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % d == 0) return n == d;
    }
    if (n < 289) return true;
    Integer z(static_cast<unsigned long>(n));
    // GMP runs BPSW first; it has no known counterexample below 2^64.
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

unsigned remove_factor(Integer& n, const Integer& p) {
    if (n == 0) return 0;
    return static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
    std::vector<std::pair<Integer, unsigned>> out;
    Integer m = abs(n);
    if (m <= 1) return out;
    auto take = [&](const Integer& p) {
        unsigned e = remove_factor(m, p);
        if (e > 0) out.emplace_back(p, e);
    };
    take(2);
    take(3);
    constexpr unsigned long kTrialLimit = 10'000'000UL;
    for (unsigned long d = 5; d <= kTrialLimit && Integer(d) * d <= m; d += 6) {
        take(Integer(d));
        take(Integer(d + 2));
    }
    if (m > 1) {
        if (Integer(kTrialLimit) * kTrialLimit < m &&
            mpz_probab_prime_p(m.get_mpz_t(), 40) == 0) {
            throw Unsupported("factor_integer: composite cofactor " + m.get_str() +
                              " has no prime factor below 10^7");
        }
        out.emplace_back(m, 1);
    }
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Integer floor_root(const Integer& n, unsigned long k) {
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::uint64_t to_u64(const Integer& n) {
    if (n < 0 || bit_length(n) > 64) throw std::out_of_range("to_u64: " + n.get_str());
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
    return v;
}

}  // namespace ohasse
