#pragma once

#include <cstdint>
#include <string>

#include "ohasse/algebra/rational.hpp"

namespace ohasse {

// The field of rational numbers as a Poly/RationalMap coefficient field.
class RationalField {
public:
    using Element = Rational;
    using Integral = Integer;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(long long n) const { return Rational(static_cast<long>(n)); }
    Element from_integer(const Integer& n) const { return Rational(n); }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element div(const Element& a, const Element& b) const { return a / b; }
    Element inv(const Element& a) const { return a.inverse(); }

    std::uint64_t characteristic() const { return 0; }
    std::string to_string(const Element& a) const { return a.to_string(); }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace ohasse
