#include "ohasse/places/reduction.hpp"

#include <algorithm>

#include "ohasse/global/height.hpp"

namespace ohasse {
namespace {

void require_q_finite(const Place& v) {
    if (v.kind() == Place::Kind::QInfinite) throw Unsupported("no reduction at the archimedean place");
    if (v.kind() != Place::Kind::QFinite) throw DomainMismatch("place " + v.to_string() + " is not a place of Q");
}

void require_ff(const Place& v, std::uint64_t p) {
    if (!v.over_function_field() || v.prime() != p)
        throw DomainMismatch("place " + v.to_string() + " is not a place of F" + std::to_string(p) + "(t)");
}

// Reduction F_p[t] -> residue field at a finite place pi.
struct PolyReducer {
    const Place& v;
    FiniteField k;

    FiniteField::Element operator()(const FqPoly& c) const {
        FqPoly r = c % v.pi();
        if (k.degree() == 1) return r.coeff(0);
        std::vector<std::uint64_t> digits(k.degree(), 0);
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) digits[i] = r.coeffs()[i];
        return k.from_digits(digits);
    }
};

MapReduction finish(FiniteField k, std::vector<FiniteField::Element> a, std::vector<FiniteField::Element> b) {
    auto res = RationalMap<FiniteField>::form_resultant(k, a, b);
    MapReduction out{k, a, b, k.is_zero(res), std::nullopt};
    if (!out.bad) out.map = RationalMap<FiniteField>::from_forms(k, std::move(a), std::move(b));
    return out;
}

}  // namespace

ResiduePoint reduce_point(const ProjPoint<RationalField>& p, const Place& v) {
    require_q_finite(v);
    FiniteField k = v.residue_field();
    auto [a, b] = integral_coords(p);
    return ResiduePoint::from_coords(k, k.from_integer(a), k.from_integer(b));
}

ResiduePoint reduce_point(const ProjPoint<RationalFunctionField>& p, const Place& v) {
    require_ff(v, p.field().characteristic());
    FiniteField k = v.residue_field();
    auto [a, b] = integral_coords(p);
    if (v.kind() == Place::Kind::FFInfinite) {
        std::size_t top = static_cast<std::size_t>(std::max(a.degree(), b.degree()));
        return ResiduePoint::from_coords(k, a.coeff(top), b.coeff(top));
    }
    PolyReducer red{v, k};
    return ResiduePoint::from_coords(k, red(a), red(b));
}

MapReduction reduce_map(const RationalMap<RationalField>& m, const Place& v) {
    require_q_finite(v);
    FiniteField k = v.residue_field();
    std::vector<FiniteField::Element> a, b;
    for (const auto& c : m.phi1()) a.push_back(k.from_integer(c.num()));
    for (const auto& c : m.phi2()) b.push_back(k.from_integer(c.num()));
    return finish(k, std::move(a), std::move(b));
}

MapReduction reduce_map(const RationalMap<RationalFunctionField>& m, const Place& v) {
    require_ff(v, m.field().characteristic());
    FiniteField k = v.residue_field();
    std::vector<FiniteField::Element> a, b;
    if (v.kind() == Place::Kind::FFInfinite) {
        int top = 0;
        for (const auto* form : {&m.phi1(), &m.phi2()})
            for (const auto& c : *form) top = std::max(top, c.num.degree());
        for (const auto& c : m.phi1()) a.push_back(c.num.coeff(top));
        for (const auto& c : m.phi2()) b.push_back(c.num.coeff(top));
    } else {
        PolyReducer red{v, k};
        for (const auto& c : m.phi1()) a.push_back(red(c.num));
        for (const auto& c : m.phi2()) b.push_back(red(c.num));
    }
    return finish(k, std::move(a), std::move(b));
}

std::vector<Place> bad_places(const RationalMap<RationalField>& m) {
    std::vector<Place> out;
    for (const auto& [p, e] : factor_integer(m.resultant().num())) out.push_back(Place::q_finite(to_u64(p)));
    return out;
}

std::vector<Place> bad_places(const RationalMap<RationalFunctionField>& m, bool include_infinite) {
    std::vector<Place> out;
    for (const auto& [pi, e] : factor_by_trial_division(m.resultant().num)) out.push_back(Place::ff_finite(pi));
    if (include_infinite) {
        Place inf = Place::ff_infinite(m.field().characteristic());
        if (reduce_map(m, inf).bad) out.push_back(inf);
    }
    std::stable_sort(out.begin(), out.end());
    return out;
}

}  // namespace ohasse
