#pragma once

#include <cstdint>
#include <vector>

#include "ohasse/map/rational_map.hpp"

namespace ohasse {

using ResiduePoint = ProjPoint<FiniteField>;

// A morphism of P^1(F_q) on point indices: 0..q-1 are field elements in the
// field's encoding and q is infinity. Prime fields use Barrett arithmetic on
// precomputed coefficients; polynomials skip the division.
class FiniteMap {
public:
    explicit FiniteMap(const RationalMap<FiniteField>& m);

    const FiniteField& field() const { return field_; }
    std::uint64_t point_count() const { return q_ + 1; }
    std::uint64_t infinity() const { return q_; }

    std::uint64_t index(const ResiduePoint& p) const { return p.is_infinity() ? q_ : p.value(); }
    ResiduePoint point(std::uint64_t i) const {
        return i == q_ ? ResiduePoint::infinity(field_) : ResiduePoint::affine(field_, i);
    }

    std::uint64_t step(std::uint64_t x) const { return prime_ ? step_prime(x) : step_generic(x); }

private:
    std::uint64_t step_prime(std::uint64_t x) const;
    std::uint64_t step_generic(std::uint64_t x) const;

    FiniteField field_;
    std::uint64_t q_;
    bool prime_;
    bool polynomial_;
    BarrettReducer red_;
    // Low-first coefficients of phi(x, 1); for polynomials a is pre-divided by
    // the constant denominator.
    std::vector<std::uint64_t> a_;
    std::vector<std::uint64_t> b_;
    // Nonzero terms (exponent, coefficient) of a polynomial, highest first.
    std::vector<std::pair<unsigned, std::uint64_t>> terms_;
    // Image of infinity.
    std::uint64_t at_infinity_;
};

struct RhoShape {
    std::uint64_t tail;
    std::uint64_t cycle;

    bool periodic() const { return tail == 0; }
    friend bool operator==(const RhoShape&, const RhoShape&) = default;
};

// Brent's cycle detection, then a second pass to measure the tail. The hare
// walks f^1(x0), f^2(x0), ... in order, so a return to x0 settles a periodic
// start without the second pass.
template <class Step>
RhoShape brent_rho(Step&& f, std::uint64_t x0) {
    std::uint64_t power = 1, lam = 1, steps = 1;
    std::uint64_t tortoise = x0, hare = f(x0);
    while (tortoise != hare) {
        if (hare == x0) return {0, steps};
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = f(hare);
        ++lam;
        ++steps;
    }
    if (hare == x0) return {0, steps};
    tortoise = hare = x0;
    for (std::uint64_t i = 0; i < lam; ++i) hare = f(hare);
    std::uint64_t mu = 0;
    while (tortoise != hare) {
        tortoise = f(tortoise);
        hare = f(hare);
        ++mu;
    }
    return {mu, lam};
}

inline RhoShape rho_shape(const FiniteMap& m, std::uint64_t start) {
    return brent_rho([&m](std::uint64_t x) { return m.step(x); }, start);
}
RhoShape rho_shape(const RationalMap<FiniteField>& m, const ResiduePoint& p);

// Bijectivity on all q + 1 points.
bool is_permutation(const FiniteMap& m);
bool is_permutation(const RationalMap<FiniteField>& m);

struct GraphStats {
    std::uint64_t periodic_points;
    std::uint64_t components;
};

inline constexpr std::uint64_t kDefaultGraphCap = std::uint64_t{1} << 24;

// Exhaustive functional graph walk; Unsupported above the cap on q + 1.
GraphStats functional_graph_stats(const FiniteMap& m, std::uint64_t cap = kDefaultGraphCap);
GraphStats functional_graph_stats(const RationalMap<FiniteField>& m, std::uint64_t cap = kDefaultGraphCap);

}  // namespace ohasse
