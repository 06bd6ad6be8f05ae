#include "ohasse/algebra/function_field.hpp"

#include <stdexcept>

namespace ohasse {

RationalFunctionField::Element RationalFunctionField::make(const FqPoly& num, const FqPoly& den) const {
    if (den.is_zero()) throw std::domain_error("F_p(t): zero denominator");
    if (num.is_zero()) return zero();
    FqPoly g = poly_gcd(num, den);
    FqPoly n = num / g;
    FqPoly d = den / g;
    auto inv_lead = base_.inv(d.lead());
    return {n.scaled(inv_lead), d.scaled(inv_lead)};
}

RationalFunctionField::Element RationalFunctionField::add(const Element& a, const Element& b) const {
    if (a.den == b.den) return make(a.num + b.num, a.den);
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunctionField::Element RationalFunctionField::mul(const Element& a, const Element& b) const {
    if (a.num.is_zero() || b.num.is_zero()) return zero();
    return make(a.num * b.num, a.den * b.den);
}

RationalFunctionField::Element RationalFunctionField::inv(const Element& a) const {
    if (a.num.is_zero()) throw std::domain_error("F_p(t): inverse of zero");
    return make(a.den, a.num);
}

std::string RationalFunctionField::to_string(const Element& a) const {
    std::string n = a.num.to_string('t');
    if (a.den.degree() == 0) return n;
    std::string d = a.den.to_string('t');
    if (a.num.degree() > 0 && n.find('+') != std::string::npos) n = "(" + n + ")";
    return n + "/(" + d + ")";
}

}  // namespace ohasse
