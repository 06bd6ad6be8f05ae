#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ohasse/global/height.hpp"
#include "ohasse/places/place.hpp"

namespace ohasse {

// Normalised absolute values: |x|_p = p^(-v_p(x)); the usual |x| at the
// archimedean place; |f|_pi = (p^deg pi)^(-v_pi(f)); |f/g| = p^(deg f - deg g)
// at the place of 1/t. |0|_v = 0.
Rational abs_value(const Rational& x, const Place& v);
Rational abs_value(const RatFunc& x, const Place& v);

// Order of vanishing at a non-archimedean place (x != 0).
long valuation(const Rational& x, const Place& v);
long valuation(const RatFunc& x, const Place& v);

// Places where |x|_v != 1 (x != 0), in place order.
std::vector<Place> support(const Rational& x);
std::vector<Place> support(const RatFunc& x);

// |x1 y2 - x2 y1|_v / (max(|x1|_v, |y1|_v) max(|x2|_v, |y2|_v)). At finite
// places the value lies in [0, 1]; at the archimedean place of Q the max-norm
// form reaches up to 2.
template <Field F>
Rational chordal_distance(const ProjPoint<F>& p, const ProjPoint<F>& q, const Place& v);

template <Field F>
struct IntegralityWitness {
    ProjPoint<F> d;
    // A place outside S with delta_v(b, d) < 1, when one was isolated; else the
    // cofactor is a non-unit product of such places that was not split.
    std::optional<Place> place;
    Rational delta;
    typename F::Integral cofactor;
};

template <Field F>
struct IntegralityCertificate {
    bool integral = true;
    std::optional<IntegralityWitness<F>> witness;
};

// delta_v(b, d) = 1 for every d in D and every finite v not in S. For coprime
// integral coordinates delta_v(b, d) = |cross term|_v, so the candidates are
// the places dividing the cross terms and the check is exact. S must contain
// the infinite place (PreconditionError).
IntegralityCertificate<RationalField> is_DS_integral(const ProjPoint<RationalField>& b,
                                                     const std::vector<ProjPoint<RationalField>>& D,
                                                     const std::vector<Place>& S);
IntegralityCertificate<RationalFunctionField> is_DS_integral(const ProjPoint<RationalFunctionField>& b,
                                                             const std::vector<ProjPoint<RationalFunctionField>>& D,
                                                             const std::vector<Place>& S);

// The verdict alone, without isolating a witness place.
bool ds_integral(const ProjPoint<RationalField>& b, const std::vector<ProjPoint<RationalField>>& D,
                 const std::vector<Place>& S);
bool ds_integral(const ProjPoint<RationalFunctionField>& b, const std::vector<ProjPoint<RationalFunctionField>>& D,
                 const std::vector<Place>& S);

struct OrbitIntegrality {
    std::vector<std::uint64_t> indices;
    std::uint64_t n_max = 0;
    // No hit in the second half of [0, n_max].
    bool tail_hit_free = true;
};

// Indices n in [0, n_max] with phi^n(alpha) S-integral to {beta}. Requires
// beta periodic and not exceptional (PreconditionError naming the failed
// hypothesis).
template <Field F>
OrbitIntegrality orbit_integral_elements(const RationalMap<F>& m, const ProjPoint<F>& alpha, const ProjPoint<F>& beta,
                                         const std::vector<Place>& S, std::uint64_t n_max);

// A polynomial that splits over the base field, with its roots and multiplicities.
template <Field F>
struct SplitFactor {
    Poly<F> f;
    std::vector<std::pair<typename F::Element, unsigned>> roots;
};

// Unsupported when f does not split into linear factors over the base field.
template <Field F>
SplitFactor<F> split_factor(const Poly<F>& f);

// (1/2)^d * prod_i min(|a_i|_v, 1) * prod min(|beta - gamma|_v, 1), the last
// product over roots beta, gamma (with multiplicity) of each unordered pair of
// distinct factors; d the largest factor degree.
template <Field F>
Rational runge_constant_Cv(const std::vector<SplitFactor<F>>& factors, const Place& v);

struct RungeBound {
    std::vector<std::pair<Place, Rational>> cv;
    // prod over S of 1/C_v: bounds H(f_k(alpha)) for the good factor f_k.
    Rational reciprocal_product;
    // H(alpha)^(d_k) <= lower_k * H(f_k(alpha)).
    std::vector<Rational> lower;
    // Every S-integral point has H <= norm_bound.
    Integer norm_bound;
    // Over F_p(t): every S-integral point has max degree <= degree_bound.
    std::optional<unsigned> degree_bound;

    double height_bound() const { return std::log(norm_bound.get_d()); }
};

// Requires t > |S| factors, pairwise disjoint root sets, no repeated factor,
// and S containing the infinite place and every pole of a coefficient
// (HypothesisNotMet otherwise).
template <Field F>
RungeBound runge_height_bound(const std::vector<SplitFactor<F>>& factors, const std::vector<Place>& S);

// All points of P^1 with H <= N over Q, or with max degree <= D over F_p(t),
// infinity included; sorted.
std::vector<ProjPoint<RationalField>> enumerate_bounded_height(const RationalField& field, const Integer& max_norm);
std::vector<ProjPoint<RationalFunctionField>> enumerate_bounded_height(const RationalFunctionField& field,
                                                                       unsigned max_degree);

// Points below the Runge bound that are S-integral to the union of the roots.
template <Field F>
std::vector<ProjPoint<F>> runge_integral_points(const std::vector<SplitFactor<F>>& factors,
                                                const std::vector<Place>& S, const RungeBound& bound);

}  // namespace ohasse
