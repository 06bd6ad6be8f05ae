#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "ohasse/algebra/poly.hpp"

namespace ohasse {

// A point of P^1 over F in canonical chart form: [x : 1] or [1 : 0].
template <Field F>
class ProjPoint {
public:
    using Element = typename F::Element;

    static ProjPoint affine(F field, Element x) {
        Element one = field.one();
        return ProjPoint(std::move(field), std::move(x), std::move(one));
    }
    static ProjPoint infinity(F field) {
        Element one = field.one(), zero = field.zero();
        return ProjPoint(std::move(field), std::move(one), std::move(zero));
    }
    // [x : y] for any representative; (0, 0) is rejected.
    static ProjPoint from_coords(F field, const Element& x, const Element& y) {
        if (field.is_zero(y)) {
            if (field.is_zero(x)) throw std::invalid_argument("ProjPoint: [0 : 0] is not a point");
            return infinity(std::move(field));
        }
        Element v = field.div(x, y);
        return affine(std::move(field), std::move(v));
    }

    const F& field() const { return field_; }
    const Element& x() const { return x_; }
    const Element& y() const { return y_; }
    bool is_infinity() const { return field_.is_zero(y_); }

    const Element& value() const {
        if (is_infinity()) throw std::domain_error("ProjPoint: the point at infinity has no affine value");
        return x_;
    }

    std::string to_string() const { return is_infinity() ? "inf" : field_.to_string(x_); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.field_ == b.field_;
    }
    // Affine points ordered by value, infinity last.
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        bool ai = a.is_infinity(), bi = b.is_infinity();
        if (ai || bi) return !ai && bi;
        return a.x_ < b.x_;
    }

private:
    ProjPoint(F field, Element x, Element y) : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)) {}

    F field_;
    Element x_;
    Element y_;
};

}  // namespace ohasse
