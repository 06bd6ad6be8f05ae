#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ohasse/algebra/fp_poly.hpp"

namespace ohasse {

class RationalField;
class RationalFunctionField;

// A place of Q (a prime or the archimedean place) or of F_p(t) (a monic
// irreducible pi in F_p[t] or the place of 1/t).
class Place {
public:
    enum class Kind { QFinite, QInfinite, FFFinite, FFInfinite };

    // The archimedean place of Q; lets report rows be default-constructed.
    Place() : Place(Kind::QInfinite, 0, std::nullopt) {}

    static Place q_finite(std::uint64_t p);
    static Place q_infinite();
    static Place ff_finite(const FqPoly& pi);
    static Place ff_infinite(std::uint64_t p);

    // "5", "inf", "t^2+t+2@F3", "inf@F3".
    static Place parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::QFinite || kind_ == Kind::FFFinite; }
    bool over_function_field() const { return kind_ == Kind::FFFinite || kind_ == Kind::FFInfinite; }
    // Residue characteristic (Q-finite), or the constant field size of F_p(t).
    std::uint64_t prime() const { return p_; }
    const FqPoly& pi() const { return *pi_; }

    // Size of the residue field; the archimedean place reports 0.
    Integer norm() const;
    unsigned local_degree() const { return 1; }

    // Residue field: F_p for primes, degree-one pi and 1/t, else F_p[t]/(pi).
    FiniteField residue_field() const;

    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b);
    // By norm, then finite before infinite, then pi.
    friend bool operator<(const Place& a, const Place& b);

private:
    Place(Kind k, std::uint64_t p, std::optional<FqPoly> pi) : kind_(k), p_(p), pi_(std::move(pi)) {}

    Kind kind_;
    std::uint64_t p_;
    std::optional<FqPoly> pi_;
};

// Finite places of norm <= bound, ascending by norm; over F_p(t) the place of
// 1/t joins when include_infinite is set.
std::vector<Place> enumerate_places(const RationalField& field, const Integer& bound);
std::vector<Place> enumerate_places(const RationalFunctionField& field, const Integer& bound, bool include_infinite);

}  // namespace ohasse
