#pragma once

#include <cmath>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ohasse/algebra/function_field.hpp"
#include "ohasse/algebra/rational_field.hpp"
#include "ohasse/map/rational_map.hpp"

namespace ohasse {

// Coprime integral coordinates [a : b]: over Q with b >= 0 (and a = 1 at
// infinity); over F_p(t) with b monic (a = 1 at infinity).
std::pair<Integer, Integer> integral_coords(const ProjPoint<RationalField>& p);
std::pair<FqPoly, FqPoly> integral_coords(const ProjPoint<RationalFunctionField>& p);

// Multiplicative height H = exp(h), stored exactly: max(|a|, |b|) over Q and
// p^max(deg a, deg b) over F_p(t).
struct Height {
    Integer norm;

    double log() const;
    std::string to_string() const { return norm.get_str(); }
    friend bool operator==(const Height& a, const Height& b) { return a.norm == b.norm; }
    friend std::strong_ordering operator<=>(const Height& a, const Height& b) {
        int c = cmp(a.norm, b.norm);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
};

Height weil_height(const ProjPoint<RationalField>& p);
Height weil_height(const ProjPoint<RationalFunctionField>& p);

// H(phi(P)) <= upper * H(P)^d and H(P)^d <= lower * H(phi(P)) for every P;
// C_up = log(upper), C_low = log(lower), both >= 0.
struct HeightMachineConstants {
    Rational upper;
    Rational lower;

    double c_up() const;
    double c_low() const;
};

HeightMachineConstants height_machine_constants(const RationalMap<RationalField>& m);
HeightMachineConstants height_machine_constants(const RationalMap<RationalFunctionField>& m);

// Cofactor forms (G1, G2) of degree d - 1 with G1 phi1 + G2 phi2 = X^(2d-1)
// (to_x) or Y^(2d-1); coefficient i multiplies X^i Y^(d-1-i).
template <Field F>
std::pair<std::vector<typename F::Element>, std::vector<typename F::Element>> bezout_cofactors(
    const RationalMap<F>& m, bool to_x) {
    const F& k = m.field();
    const std::size_t d = static_cast<std::size_t>(m.degree());
    const std::size_t n = 2 * d;
    Matrix<F> sys(n, std::vector<typename F::Element>(n, k.zero()));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            sys[i + j][i] = m.phi1()[j];
            sys[i + j][d + i] = m.phi2()[j];
        }
    std::vector<typename F::Element> rhs(n, k.zero());
    rhs[to_x ? n - 1 : 0] = k.one();
    auto sol = solve_linear(k, std::move(sys), std::move(rhs));
    if (!sol) throw DegenerateMap("Sylvester system is singular");
    std::vector<typename F::Element> g1(sol->begin(), sol->begin() + d), g2(sol->begin() + d, sol->end());
    return {std::move(g1), std::move(g2)};
}

}  // namespace ohasse
