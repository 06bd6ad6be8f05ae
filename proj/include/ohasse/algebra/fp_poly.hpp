#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ohasse/algebra/finite_field.hpp"
#include "ohasse/algebra/poly.hpp"

namespace ohasse {

// Polynomials over a finite field; with a prime field this is the ring F_p[t].
using FqPoly = Poly<FiniteField>;

FqPoly fq_poly(const FiniteField& field, const std::vector<std::uint64_t>& coeffs_low_first);
std::vector<std::uint64_t> fq_coeffs(const FqPoly& f);

// Rabin's test over F_q: x^(q^n) = x mod f and gcd(x^(q^(n/l)) - x, f) = 1 for
// every prime l | n. Requires f monic of degree >= 1 (NormalizationError otherwise).
bool is_irreducible(const FqPoly& f);

// All monic polynomials of the given degree over F_q, ordered lexicographically
// on coefficients from the top down.
std::vector<FqPoly> enumerate_monic(const FiniteField& field, unsigned degree);

// Monic irreducibles over F_p of degree 1..max_degree, sorted by (degree,
// coefficients from the top down). Throws std::invalid_argument for composite p.
std::vector<FqPoly> enumerate_monic_irreducibles(std::uint64_t p, unsigned max_degree);

// Number of monic irreducibles of degree n over F_q by Gauss's formula.
Integer count_monic_irreducibles(std::uint64_t q, unsigned n);

// Monic irreducible factorisation of a nonzero polynomial over F_q by trial
// division with the enumerated irreducibles; factors ascending. The unit
// (leading coefficient) is dropped.
std::vector<std::pair<FqPoly, unsigned>> factor_by_trial_division(const FqPoly& f);

// Degrees of the irreducible factors of a squarefree monic f over F_q
// (distinct-degree factorisation), ascending with repetition.
std::vector<unsigned> irreducible_factor_degrees_squarefree(const FqPoly& f);

}  // namespace ohasse
