#include "ohasse/algebra/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "ohasse/errors.hpp"

namespace ohasse {

FqPoly fq_poly(const FiniteField& field, const std::vector<std::uint64_t>& coeffs_low_first) {
    std::vector<FiniteField::Element> v;
    v.reserve(coeffs_low_first.size());
    for (auto c : coeffs_low_first) v.push_back(field.from_int(static_cast<long long>(c % field.characteristic())));
    if (field.degree() != 1) {
        // Interpret the integers as element encodings rather than residues.
        v.assign(coeffs_low_first.begin(), coeffs_low_first.end());
    }
    return FqPoly(field, std::move(v));
}

std::vector<std::uint64_t> fq_coeffs(const FqPoly& f) { return f.coeffs(); }

namespace {

std::vector<std::uint64_t> prime_divisors(unsigned n) {
    std::vector<std::uint64_t> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible(const FqPoly& f) {
    if (f.degree() < 1 || !f.is_monic()) throw NormalizationError("is_irreducible: input must be monic of degree >= 1");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    const FiniteField& field = f.field();
    const Integer q(static_cast<unsigned long>(field.size()));
    const FqPoly x = FqPoly::x(field);

    // frob[i] = x^(q^i) mod f
    std::vector<FqPoly> frob{x % f};
    for (unsigned i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), q, f));
    if (!((frob[n] - x) % f).is_zero()) return false;
    for (auto l : prime_divisors(n)) {
        FqPoly g = poly_gcd(frob[n / l] - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<FqPoly> enumerate_monic(const FiniteField& field, unsigned degree) {
    const std::uint64_t q = field.size();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        if (count > (1ULL << 40) / q) throw Unsupported("enumerate_monic: too many polynomials");
        count *= q;
    }
    std::vector<FqPoly> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<FiniteField::Element> c(degree + 1);
        std::uint64_t rest = idx;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = rest % q;
            rest /= q;
        }
        c[degree] = field.one();
        out.emplace_back(field, std::move(c));
    }
    return out;
}

std::vector<FqPoly> enumerate_monic_irreducibles(std::uint64_t p, unsigned max_degree) {
    if (max_degree < 1) throw std::invalid_argument("enumerate_monic_irreducibles: max_degree must be >= 1");
    FiniteField field = FiniteField::prime(p);
    std::vector<FqPoly> out;
    for (unsigned n = 1; n <= max_degree; ++n) {
        for (auto& m : enumerate_monic(field, n)) {
            if (is_irreducible(m)) out.push_back(std::move(m));
        }
    }
    return out;
}

Integer count_monic_irreducibles(std::uint64_t q, unsigned n) {
    auto mobius = [](unsigned m) {
        int mu = 1;
        for (unsigned d = 2; d * d <= m; ++d) {
            if (m % d != 0) continue;
            m /= d;
            if (m % d == 0) return 0;
            mu = -mu;
        }
        if (m > 1) mu = -mu;
        return mu;
    };
    Integer total = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), q, n / d);
        total += mobius(d) * term;
    }
    return total / n;
}

std::vector<std::pair<FqPoly, unsigned>> factor_by_trial_division(const FqPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_by_trial_division: zero polynomial");
    const FiniteField& field = f.field();
    FqPoly rest = f.monic();
    std::vector<std::pair<FqPoly, unsigned>> out;
    for (unsigned n = 1; 2 * n <= static_cast<unsigned>(std::max(rest.degree(), 0)); ++n) {
        for (const auto& m : enumerate_monic(field, n)) {
            if (2 * n > static_cast<unsigned>(rest.degree())) break;
            if (!is_irreducible(m)) continue;
            unsigned e = 0;
            while (true) {
                auto [quo, rem] = divmod(rest, m);
                if (!rem.is_zero()) break;
                rest = std::move(quo);
                ++e;
            }
            if (e > 0) out.emplace_back(m, e);
        }
    }
    if (rest.degree() >= 1) out.emplace_back(rest, 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge a leftover factor equal to one found by trial division.
    std::vector<std::pair<FqPoly, unsigned>> merged;
    for (auto& [g, e] : out) {
        if (!merged.empty() && merged.back().first == g) merged.back().second += e;
        else merged.emplace_back(g, e);
    }
    return merged;
}

std::vector<unsigned> irreducible_factor_degrees_squarefree(const FqPoly& f) {
    const FiniteField& field = f.field();
    const Integer q(static_cast<unsigned long>(field.size()));
    const FqPoly x = FqPoly::x(field);
    std::vector<unsigned> out;
    FqPoly rest = f.monic();
    FqPoly frob = x;
    for (unsigned i = 1; rest.degree() >= static_cast<int>(2 * i); ++i) {
        frob = poly_powmod(frob, q, rest);
        FqPoly g = poly_gcd(frob - x, rest);
        if (g.degree() > 0) {
            for (int j = 0; j < g.degree() / static_cast<int>(i); ++j) out.push_back(i);
            rest = rest / g;
            frob = frob % rest;
        }
    }
    if (rest.degree() > 0) out.push_back(static_cast<unsigned>(rest.degree()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ohasse
