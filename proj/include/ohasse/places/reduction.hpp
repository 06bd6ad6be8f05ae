#pragma once

#include <optional>
#include <vector>

#include "ohasse/algebra/function_field.hpp"
#include "ohasse/algebra/rational_field.hpp"
#include "ohasse/map/analysis.hpp"
#include "ohasse/places/place.hpp"

namespace ohasse {

using ResiduePoint = ProjPoint<FiniteField>;

// Reduction of a normalised map at a finite place: the reduced forms always,
// and the reduced morphism when the reduced resultant is nonzero.
struct MapReduction {
    FiniteField residue_field;
    std::vector<FiniteField::Element> phi1;
    std::vector<FiniteField::Element> phi2;
    bool bad;
    std::optional<RationalMap<FiniteField>> map;
};

// The place must belong to the map's field and be finite (Unsupported for the
// archimedean place, DomainMismatch for a place of another field). The 1/t
// place of F_p(t) counts as finite here.
ResiduePoint reduce_point(const ProjPoint<RationalField>& p, const Place& v);
ResiduePoint reduce_point(const ProjPoint<RationalFunctionField>& p, const Place& v);

MapReduction reduce_map(const RationalMap<RationalField>& m, const Place& v);
MapReduction reduce_map(const RationalMap<RationalFunctionField>& m, const Place& v);

template <Field F>
bool has_good_reduction(const RationalMap<F>& m, const Place& v) {
    return !reduce_map(m, v).bad;
}

template <Field F>
bool has_separable_reduction(const RationalMap<F>& m, const Place& v) {
    auto r = reduce_map(m, v);
    if (r.bad) throw PreconditionError("separable reduction is asked of a place of bad reduction: " + v.to_string());
    return is_separable(*r.map);
}

// Finite places of bad reduction are exactly those dividing the normalised
// resultant; over Q these are its prime factors.
std::vector<Place> bad_places(const RationalMap<RationalField>& m);
std::vector<Place> bad_places(const RationalMap<RationalFunctionField>& m, bool include_infinite);

}  // namespace ohasse
