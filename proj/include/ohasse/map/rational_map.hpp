#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "ohasse/algebra/finite_field.hpp"
#include "ohasse/algebra/function_field.hpp"
#include "ohasse/algebra/linear.hpp"
#include "ohasse/algebra/rational_field.hpp"
#include "ohasse/map/proj_point.hpp"

namespace ohasse {

// Index of the coefficient that is scaled to a unit in canonical form: the
// top nonzero coefficient of the second form, else of the first.
template <class E, class IsZero>
std::pair<int, int> canonical_anchor(const std::vector<E>& a, const std::vector<E>& b, IsZero is_zero) {
    for (std::size_t i = b.size(); i-- > 0;)
        if (!is_zero(b[i])) return {1, static_cast<int>(i)};
    for (std::size_t i = a.size(); i-- > 0;)
        if (!is_zero(a[i])) return {0, static_cast<int>(i)};
    return {-1, -1};
}

// Joint scaling of a form pair to its canonical representative.
// Q: coprime integers, anchor positive.
inline void canonicalize_forms(const RationalField&, std::vector<Rational>& a, std::vector<Rational>& b) {
    Integer l = 1, g = 0;
    for (const auto* v : {&a, &b})
        for (const auto& c : *v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    for (const auto* v : {&a, &b})
        for (const auto& c : *v) {
            Integer n = c.num() * (l / c.den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
    if (g == 0) return;
    auto [which, idx] = canonical_anchor(a, b, [](const Rational& r) { return r.is_zero(); });
    const Rational& anchor = which == 1 ? b[idx] : a[idx];
    Rational s = Rational(l, g);
    if (anchor.sign() < 0) s = -s;
    for (auto* v : {&a, &b})
        for (auto& c : *v) c *= s;
}

// F_q: anchor scaled to 1.
inline void canonicalize_forms(const FiniteField& f, std::vector<FiniteField::Element>& a,
                               std::vector<FiniteField::Element>& b) {
    auto [which, idx] = canonical_anchor(a, b, [](std::uint64_t e) { return e == 0; });
    if (which < 0) return;
    auto s = f.inv(which == 1 ? b[idx] : a[idx]);
    for (auto* v : {&a, &b})
        for (auto& c : *v) c = f.mul(c, s);
}

// F_p(t): coefficients in F_p[t] with trivial joint gcd, anchor monic in t.
inline void canonicalize_forms(const RationalFunctionField& f, std::vector<RatFunc>& a, std::vector<RatFunc>& b) {
    const FiniteField& k = f.constants();
    FqPoly l = FqPoly::constant(k, k.one());
    for (const auto* v : {&a, &b})
        for (const auto& c : *v) l = l / poly_gcd(l, c.den) * c.den;
    FqPoly g(k);
    for (const auto* v : {&a, &b})
        for (const auto& c : *v) g = poly_gcd(g, c.num * (l / c.den));
    if (g.is_zero()) return;
    for (auto* v : {&a, &b})
        for (auto& c : *v) c = f.make(c.num * (l / c.den) / g, FqPoly::constant(k, k.one()));
    auto [which, idx] = canonical_anchor(a, b, [](const RatFunc& r) { return r.num.is_zero(); });
    auto s = k.inv((which == 1 ? b[idx] : a[idx]).num.lead());
    for (auto* v : {&a, &b})
        for (auto& c : *v) c = f.from_poly(c.num.scaled(s));
}

// A morphism of P^1 of degree d >= 1 given by two binary forms of degree d
// with nonzero resultant. phi1()[i] and phi2()[i] are the coefficients of
// X^i Y^(d-i); the pair is stored in the field's canonical scaling.
template <Field F>
class RationalMap {
public:
    using Element = typename F::Element;
    using Point = ProjPoint<F>;

    static RationalMap from_forms(F field, std::vector<Element> a, std::vector<Element> b) {
        if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("RationalMap: forms must share a degree >= 1");
        canonicalize_forms(field, a, b);
        Element res = form_resultant(field, a, b);
        if (field.is_zero(res))
            throw DegenerateMap("the forms share a common factor (resultant 0), not a morphism of degree " +
                                std::to_string(a.size() - 1));
        return RationalMap(std::move(field), std::move(a), std::move(b), std::move(res));
    }

    // f/g homogenised to degree max(deg f, deg g).
    static RationalMap from_affine(const Poly<F>& f, const Poly<F>& g) {
        f.check_same(g);
        if (g.is_zero()) throw DegenerateMap("zero denominator");
        int d = std::max(f.degree(), g.degree());
        if (d < 1) throw DegenerateMap("constant map has degree 0");
        std::vector<Element> a(d + 1, f.field().zero()), b(d + 1, f.field().zero());
        for (int i = 0; i <= d; ++i) {
            a[i] = f.coeff(i);
            b[i] = g.coeff(i);
        }
        return from_forms(f.field(), std::move(a), std::move(b));
    }

    // Coefficient pair (highest degree first) of a form of degree d.
    static Element form_resultant(const F& f, const std::vector<Element>& a, const std::vector<Element>& b) {
        return sylvester_resultant(f, std::vector<Element>(a.rbegin(), a.rend()),
                                   std::vector<Element>(b.rbegin(), b.rend()));
    }

    const F& field() const { return field_; }
    int degree() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<Element>& phi1() const { return a_; }
    const std::vector<Element>& phi2() const { return b_; }
    const Element& resultant() const { return res_; }

    Poly<F> numerator() const { return Poly<F>(field_, a_); }
    Poly<F> denominator() const { return Poly<F>(field_, b_); }
    bool is_polynomial() const { return denominator().degree() == 0; }

    // Conjugate by x -> 1/x: [phi2(Y, X) : phi1(Y, X)].
    RationalMap swapped() const {
        return from_forms(field_, std::vector<Element>(b_.rbegin(), b_.rend()),
                          std::vector<Element>(a_.rbegin(), a_.rend()));
    }

    // Values of both forms at a point, before projective normalisation.
    std::pair<Element, Element> eval_forms(const Point& p) const {
        if (p.is_infinity()) return {a_.back(), b_.back()};
        const Element& x = p.value();
        Element fa = field_.zero(), fb = field_.zero();
        for (std::size_t i = a_.size(); i-- > 0;) {
            fa = field_.add(field_.mul(fa, x), a_[i]);
            fb = field_.add(field_.mul(fb, x), b_[i]);
        }
        return {fa, fb};
    }

    Point eval(const Point& p) const {
        if (!(p.field() == field_)) throw DomainMismatch("point and map live over different fields");
        if constexpr (std::is_same_v<F, RationalField>) {
            return eval_rational(p);
        } else {
            auto [fa, fb] = eval_forms(p);
            return Point::from_coords(field_, fa, fb);
        }
    }

    // n-fold pointwise evaluation.
    Point iterate(Point p, std::uint64_t n) const {
        for (std::uint64_t i = 0; i < n; ++i) p = eval(p);
        return p;
    }

    std::string to_string() const {
        Poly<F> f = numerator(), g = denominator();
        if (g.degree() == 0) {
            return f.scaled(field_.inv(g.lead())).to_string('x');
        }
        return "(" + f.to_string('x') + ")/(" + g.to_string('x') + ")";
    }

    friend bool operator==(const RationalMap& m, const RationalMap& n) {
        return m.field_ == n.field_ && m.a_ == n.a_ && m.b_ == n.b_;
    }

private:
    RationalMap(F field, std::vector<Element> a, std::vector<Element> b, Element res)
        : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), res_(std::move(res)) {}

    // Integer Horner on coprime coordinates. gcd(phi1(a,b), phi2(a,b)) divides
    // the resultant, so the common factor is found without a full-size gcd.
    Point eval_rational(const Point& p) const {
        Integer u, w;
        if (p.is_infinity()) {
            u = 1;
            w = 0;
        } else {
            u = p.value().num();
            w = p.value().den();
        }
        const std::size_t d = a_.size() - 1;
        Integer fa = a_[d].num(), fb = b_[d].num(), wk = 1;
        for (std::size_t i = d; i-- > 0;) {
            wk *= w;
            fa = fa * u + a_[i].num() * wk;
            fb = fb * u + b_[i].num() * wk;
        }
        Integer g;
        const Integer& r = res_.num();
        mpz_gcd(g.get_mpz_t(), fa.get_mpz_t(), r.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), fb.get_mpz_t());
        if (g != 1) {
            mpz_divexact(fa.get_mpz_t(), fa.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(fb.get_mpz_t(), fb.get_mpz_t(), g.get_mpz_t());
        }
        if (fb == 0) return Point::infinity(field_);
        if (fb < 0) {
            fa = -fa;
            fb = -fb;
        }
        return Point::affine(field_, Rational::from_coprime(fa, fb));
    }

    F field_;
    std::vector<Element> a_;
    std::vector<Element> b_;
    Element res_;
};

}  // namespace ohasse
