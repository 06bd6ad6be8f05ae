#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ohasse/algebra/roots.hpp"
#include "ohasse/map/rational_map.hpp"

namespace ohasse {

// g f' - g' f for the affine representation f/g of the map.
template <Field F>
Poly<F> wronskian(const RationalMap<F>& m) {
    Poly<F> f = m.numerator(), g = m.denominator();
    return g * poly_derivative(f) - poly_derivative(g) * f;
}

// phi(x) = h(x^r) with h separable.
template <Field F>
struct SeparabilityProfile {
    int separable_degree;
    std::uint64_t inseparable_degree;
    RationalMap<F> separable_part;
};

namespace detail {
// f(x) = G(x^p) -> G, assuming every exponent of f is divisible by p.
template <Field F>
Poly<F> frobenius_peel(const Poly<F>& f, std::uint64_t p) {
    std::vector<typename F::Element> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
    return Poly<F>(f.field(), std::move(c));
}
}  // namespace detail

template <Field F>
SeparabilityProfile<F> separability_degree(const RationalMap<F>& m) {
    const std::uint64_t p = m.field().characteristic();
    RationalMap<F> h = m;
    std::uint64_t r = 1;
    // Coprime f, g with g f' = g' f force f' = g' = 0, so every exponent is
    // divisible by p and the peel is exact.
    while (p != 0 && wronskian(h).is_zero()) {
        h = RationalMap<F>::from_affine(detail::frobenius_peel(h.numerator(), p),
                                        detail::frobenius_peel(h.denominator(), p));
        r *= p;
    }
    return {h.degree(), r, h};
}

template <Field F>
bool is_separable(const RationalMap<F>& m) {
    return !wronskian(m).is_zero();
}

// Finite backward orbit test: p lies on a cycle of length <= 2 all of whose
// points are totally ramified (the fibre over the successor is a single point).
template <Field F>
bool is_exceptional(const RationalMap<F>& m, const ProjPoint<F>& p) {
    if (m.degree() < 2) throw Unsupported("exceptionality is defined for degree >= 2");
    std::vector<ProjPoint<F>> cycle{p};
    ProjPoint<F> q = m.eval(p);
    if (!(q == p)) {
        cycle.push_back(q);
        if (!(m.eval(q) == p)) return false;
    }
    const F& k = m.field();
    const int d = m.degree();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const ProjPoint<F>& gamma = cycle[i];
        const ProjPoint<F>& next = cycle[(i + 1) % cycle.size()];
        // Fibre over next: phi1 - next * phi2, or phi2 when next is infinity.
        std::vector<typename F::Element> fibre(d + 1, k.zero());
        for (int j = 0; j <= d; ++j)
            fibre[j] = next.is_infinity() ? m.phi2()[j] : k.sub(m.phi1()[j], k.mul(next.value(), m.phi2()[j]));
        Poly<F> fx(k, fibre);
        if (gamma.is_infinity()) {
            // Must be c * Y^d: no X at all.
            if (fx.degree() != 0) return false;
        } else {
            if (fx.degree() != d) return false;
            Poly<F> lin(k, {k.neg(gamma.value()), k.one()});
            if (!(fx == poly_pow(lin, static_cast<unsigned>(d)).scaled(fx.lead()))) return false;
        }
    }
    return true;
}

template <Field F>
struct CriticalPoints {
    std::vector<std::pair<ProjPoint<F>, unsigned>> points;
    std::vector<unsigned> residual_degrees;
};

// Roots of the Wronskian in the base field with multiplicity, then infinity
// (read off at 0 in the swapped chart), then the degrees of the factors with no
// root in the base field.
template <Field F>
CriticalPoints<F> critical_points(const RationalMap<F>& m) {
    Poly<F> w = wronskian(m);
    if (w.is_zero()) throw InseparableMap("critical points need a separable map");
    const F& k = m.field();
    CriticalPoints<F> out;
    auto rep = find_roots(w);
    for (auto& [r, mult] : rep.roots) out.points.emplace_back(ProjPoint<F>::affine(k, r), mult);
    Poly<F> ws = wronskian(m.swapped());
    unsigned at_inf = 0;
    while (at_inf < ws.coeffs().size() && k.is_zero(ws.coeffs()[at_inf])) ++at_inf;
    if (at_inf > 0) out.points.emplace_back(ProjPoint<F>::infinity(k), at_inf);
    out.residual_degrees = std::move(rep.residual_degrees);
    return out;
}

}  // namespace ohasse
