#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "ohasse/map/rational_map.hpp"

namespace ohasse {

// Value of the coefficient symbol `t`, where the field has one.
inline std::optional<RatFunc> coefficient_symbol(const RationalFunctionField& f) { return f.t(); }
template <Field F>
std::optional<typename F::Element> coefficient_symbol(const F&) { return std::nullopt; }

namespace detail {

// A quotient of polynomials in x, kept with a monic denominator and never
// cancelled, so that a written common factor survives to the degeneracy check.
template <Field F>
struct Fraction {
    Poly<F> num;
    Poly<F> den;
};

// Recursive descent over
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' digits)?
//   atom  := digits | 'x' | 't' | '(' expr ')'
template <Field F>
class ExpressionParser {
public:
    ExpressionParser(F field, std::string_view text) : field_(std::move(field)), text_(text) {}

    Fraction<F> parse_all() {
        Fraction<F> v = expr();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return v;
    }

private:
    using Element = typename F::Element;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Fraction<F> constant(const Element& c) const {
        return {Poly<F>::constant(field_, c), Poly<F>::constant(field_, field_.one())};
    }
    Fraction<F> make(Poly<F> num, Poly<F> den) const {
        if (den.is_zero()) throw std::domain_error("division by zero");
        auto il = field_.inv(den.lead());
        return {num.scaled(il), den.scaled(il)};
    }

    Fraction<F> add(const Fraction<F>& a, const Fraction<F>& b, bool subtract) const {
        Poly<F> nb = subtract ? -b.num : b.num;
        if (a.den == b.den) return {a.num + nb, a.den};
        Poly<F> g = poly_gcd(a.den, b.den);
        Poly<F> l = a.den / g * b.den;
        return make(a.num * (l / a.den) + nb * (l / b.den), l);
    }

    Fraction<F> expr() {
        Fraction<F> v = term();
        while (true) {
            if (accept('+')) v = add(v, term(), false);
            else if (accept('-')) v = add(v, term(), true);
            else return v;
        }
    }

    Fraction<F> term() {
        Fraction<F> v = unary();
        while (true) {
            if (accept('*')) {
                Fraction<F> r = unary();
                v = make(v.num * r.num, v.den * r.den);
            } else if (accept('/')) {
                std::size_t at = pos_;
                Fraction<F> r = unary();
                if (r.num.is_zero()) throw ParseError("division by zero", at);
                v = make(v.num * r.den, v.den * r.num);
            } else {
                return v;
            }
        }
    }

    Fraction<F> unary() {
        if (accept('-')) {
            Fraction<F> v = unary();
            return {-v.num, v.den};
        }
        if (accept('+')) return unary();
        return power();
    }

    Fraction<F> power() {
        Fraction<F> base = atom();
        if (!accept('^')) return base;
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        if (pos_ - start > 4) throw ParseError("exponent too large", start);
        unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
        return {poly_pow(base.num, e), poly_pow(base.den, e)};
    }

    Fraction<F> atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Fraction<F> v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return {Poly<F>::x(field_), Poly<F>::constant(field_, field_.one())};
        }
        if (c == 't') {
            auto sym = coefficient_symbol(field_);
            if (!sym) fail("symbol 't' is only available over Fp(t)");
            ++pos_;
            return constant(*sym);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Integer n(std::string(text_.substr(start, pos_ - start)));
            if constexpr (std::is_same_v<F, RationalField>) {
                return constant(Rational(n));
            } else {
                return constant(field_.from_integer(n));
            }
        }
        fail(std::string("unexpected '") + c + "'");
    }

    F field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses "poly" or "poly/poly" in x into a normalised map.
template <Field F>
RationalMap<F> parse_map(const F& field, std::string_view text) {
    auto frac = detail::ExpressionParser<F>(field, text).parse_all();
    return RationalMap<F>::from_affine(frac.num, frac.den);
}

// A polynomial in x; a nonconstant denominator is a ParseError.
template <Field F>
Poly<F> parse_polynomial(const F& field, std::string_view text) {
    auto frac = detail::ExpressionParser<F>(field, text).parse_all();
    if (frac.den.degree() > 0) throw ParseError("expected a polynomial in x", 0);
    return frac.num.scaled(field.inv(frac.den.coeff(0)));
}

// A field element written without x ("-3/2", "t^2+1").
template <Field F>
typename F::Element parse_element(const F& field, std::string_view text) {
    auto frac = detail::ExpressionParser<F>(field, text).parse_all();
    if (frac.num.degree() > 0 || frac.den.degree() > 0) throw ParseError("expected a constant, found x", 0);
    return field.div(frac.num.coeff(0), frac.den.coeff(0));
}

// A point: "inf" or a field element.
template <Field F>
ProjPoint<F> parse_point(const F& field, std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s == "inf" || s == "oo" || s == "infinity") return ProjPoint<F>::infinity(field);
    return ProjPoint<F>::affine(field, parse_element(field, s));
}

}  // namespace ohasse
