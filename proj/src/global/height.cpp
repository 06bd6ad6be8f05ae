#include "ohasse/global/height.hpp"

#include <algorithm>

namespace ohasse {

std::pair<Integer, Integer> integral_coords(const ProjPoint<RationalField>& p) {
    if (p.is_infinity()) return {1, 0};
    return {p.value().num(), p.value().den()};
}

std::pair<FqPoly, FqPoly> integral_coords(const ProjPoint<RationalFunctionField>& p) {
    const FiniteField& k = p.field().constants();
    if (p.is_infinity()) return {FqPoly::constant(k, k.one()), FqPoly(k)};
    return {p.value().num, p.value().den};
}

double Height::log() const { return std::log(norm.get_d()); }

Height weil_height(const ProjPoint<RationalField>& p) {
    auto [a, b] = integral_coords(p);
    Integer aa = abs(a);
    return {aa > b ? aa : b};
}

Height weil_height(const ProjPoint<RationalFunctionField>& p) {
    auto [a, b] = integral_coords(p);
    Integer n;
    mpz_ui_pow_ui(n.get_mpz_t(), p.field().characteristic(),
                  static_cast<unsigned long>(std::max(a.degree(), b.degree())));
    return {n};
}

double HeightMachineConstants::c_up() const { return std::log(upper.to_double()); }
double HeightMachineConstants::c_low() const { return std::log(lower.to_double()); }

HeightMachineConstants height_machine_constants(const RationalMap<RationalField>& m) {
    // Upper: |phi_i(a, b)| <= (sum of |coefficients|) * max(|a|, |b|)^d.
    Rational upper(0);
    for (const auto* form : {&m.phi1(), &m.phi2()}) {
        Rational s(0);
        for (const auto& c : *form) s += c.abs();
        if (upper < s) upper = s;
    }
    // Lower: from G1 phi1 + G2 phi2 = X^(2d-1) and = Y^(2d-1),
    // H^(2d-1) <= K H^(d-1) max|phi_i(a, b)| and the cancelled common factor
    // divides Res, so H^d <= K |Res| H(phi(P)).
    Rational k(0);
    for (bool to_x : {false, true}) {
        auto [g1, g2] = bezout_cofactors(m, to_x);
        Rational s(0);
        for (const auto& c : g1) s += c.abs();
        for (const auto& c : g2) s += c.abs();
        if (k < s) k = s;
    }
    Rational lower = k * m.resultant().abs();
    if (lower < Rational(1)) lower = Rational(1);
    return {upper, lower};
}

HeightMachineConstants height_machine_constants(const RationalMap<RationalFunctionField>& m) {
    const std::uint64_t p = m.field().characteristic();
    long up = 0;
    for (const auto* form : {&m.phi1(), &m.phi2()})
        for (const auto& c : *form) up = std::max<long>(up, c.num.degree());
    long kappa = 0;
    bool any = false;
    for (bool to_x : {false, true}) {
        auto [g1, g2] = bezout_cofactors(m, to_x);
        for (const auto* v : {&g1, &g2})
            for (const auto& c : *v) {
                if (c.num.is_zero()) continue;
                long e = c.num.degree() - c.den.degree();
                kappa = any ? std::max(kappa, e) : e;
                any = true;
            }
    }
    long low = std::max<long>(0, kappa + m.resultant().num.degree());
    Integer u, l;
    mpz_ui_pow_ui(u.get_mpz_t(), p, static_cast<unsigned long>(up));
    mpz_ui_pow_ui(l.get_mpz_t(), p, static_cast<unsigned long>(low));
    return {Rational(u), Rational(l)};
}

}  // namespace ohasse
