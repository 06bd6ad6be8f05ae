#pragma once

#include <cstdint>
#include <string>

#include "ohasse/algebra/fp_poly.hpp"

namespace ohasse {

// Element of F_p(t): num/den with den monic and gcd(num, den) = 1; zero is 0/1.
struct RatFunc {
    FqPoly num;
    FqPoly den;

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.num == b.num) return a.den < b.den;
        return a.num < b.num;
    }
};

// The rational function field F_p(t) over a prime field.
class RationalFunctionField {
public:
    using Element = RatFunc;
    using Integral = FqPoly;

    explicit RationalFunctionField(std::uint64_t p) : base_(FiniteField::prime(p)) {}

    const FiniteField& constants() const { return base_; }
    std::uint64_t characteristic() const { return base_.characteristic(); }

    Element zero() const { return {FqPoly(base_), one_poly()}; }
    Element one() const { return {one_poly(), one_poly()}; }
    Element from_int(long long n) const { return {FqPoly::constant(base_, base_.from_int(n)), one_poly()}; }
    Element from_integer(const Integer& n) const {
        return {FqPoly::constant(base_, base_.from_integer(n)), one_poly()};
    }
    Element from_poly(const FqPoly& f) const { return {f, one_poly()}; }
    Element t() const { return from_poly(FqPoly::x(base_)); }

    // Builds num/den in lowest terms with a monic denominator.
    Element make(const FqPoly& num, const FqPoly& den) const;

    bool is_zero(const Element& a) const { return a.num.is_zero(); }
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
    Element neg(const Element& a) const { return {-a.num, a.den}; }
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    std::string to_string(const Element& a) const;
    std::string name() const { return "F" + std::to_string(characteristic()) + "(t)"; }

    friend bool operator==(const RationalFunctionField& a, const RationalFunctionField& b) {
        return a.characteristic() == b.characteristic();
    }

private:
    FqPoly one_poly() const { return FqPoly::constant(base_, base_.one()); }

    FiniteField base_;
};

}  // namespace ohasse
