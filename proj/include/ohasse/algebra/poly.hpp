#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ohasse/algebra/integer.hpp"
#include "ohasse/errors.hpp"

namespace ohasse {

// What Poly and the map code need from a coefficient field. Field objects are
// cheap handles; elements are plain canonical values, so == is equality.
template <class F>
concept Field = requires(const F f, const typename F::Element a, long long n) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.from_int(n) } -> std::convertible_to<typename F::Element>;
    { f.add(a, a) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
    { f.div(a, a) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f == f } -> std::convertible_to<bool>;
    { a == a } -> std::convertible_to<bool>;
    { a < a } -> std::convertible_to<bool>;
};

// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
// No trailing zeros are stored, so the zero polynomial is empty.
template <Field F>
class Poly {
public:
    using Element = typename F::Element;

    explicit Poly(F field) : field_(std::move(field)) {}
    Poly(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly constant(const F& field, const Element& c) { return Poly(field, {c}); }
    static Poly monomial(const F& field, const Element& c, std::size_t k) {
        std::vector<Element> v(k + 1, field.zero());
        v[k] = c;
        return Poly(field, std::move(v));
    }
    static Poly x(const F& field) { return monomial(field, field.one(), 1); }

    const F& field() const { return field_; }
    const std::vector<Element>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Element lead() const { return c_.empty() ? field_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

    Poly monic() const {
        if (c_.empty()) return *this;
        return scaled(field_.inv(c_.back()));
    }

    Poly scaled(const Element& s) const {
        std::vector<Element> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(field_.mul(a, s));
        return Poly(field_, std::move(v));
    }

    Element eval(const Element& at) const {
        Element acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, at), *it);
        return acc;
    }

    Poly operator-() const {
        std::vector<Element> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(field_.neg(a));
        return Poly(field_, std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same(b);
        std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coeff(i), b.coeff(i));
        return Poly(a.field_, std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_same(b);
        std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.sub(a.coeff(i), b.coeff(i));
        return Poly(a.field_, std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        const F& f = a.field_;
        std::vector<Element> v(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (f.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
            }
        }
        return Poly(f, std::move(v));
    }

    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (b.is_zero()) throw std::domain_error("Poly: division by the zero polynomial");
        const F& f = a.field_;
        if (a.degree() < b.degree()) return {Poly(f), a};
        std::vector<Element> r = a.c_;
        std::vector<Element> q(a.c_.size() - b.c_.size() + 1, f.zero());
        Element inv_lead = f.inv(b.lead());
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t i = r.size(); i-- > db;) {
            if (f.is_zero(r[i])) continue;
            Element c = f.mul(r[i], inv_lead);
            q[i - db] = c;
            for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b.c_[j]));
        }
        return {Poly(f, std::move(q)), Poly(f, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    // Total order: by degree, then coefficients from the top down.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    std::string to_string(char var = 'x') const;

    void check_same(const Poly& o) const {
        if (!(field_ == o.field_)) throw DomainMismatch("polynomials over different coefficient fields");
    }

private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Element> c_;
};

// Monic gcd; gcd(0, 0) = 0.
template <Field F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    a.check_same(b);
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g monic (or all zero for a = b = 0).
template <Field F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
    a.check_same(b);
    const F& f = a.field();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(f, f.one()), s1(f);
    Poly<F> t0(f), t1 = Poly<F>::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto il = f.inv(r0.lead());
    return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

// Formal derivative; integer multipliers are taken in the field, so they
// vanish modulo the characteristic.
template <Field F>
Poly<F> poly_derivative(const Poly<F>& a) {
    const F& f = a.field();
    std::vector<typename F::Element> v;
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        v.push_back(f.mul(f.from_int(static_cast<long long>(i)), a.coeffs()[i]));
    }
    return Poly<F>(f, std::move(v));
}

template <Field F>
Poly<F> poly_powmod(const Poly<F>& base, Integer e, const Poly<F>& mod) {
    Poly<F> result = Poly<F>::constant(base.field(), base.field().one()) % mod;
    Poly<F> b = base % mod;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = (result * b) % mod;
        e >>= 1;
        if (e > 0) b = (b * b) % mod;
    }
    return result;
}

template <Field F>
Poly<F> poly_pow(const Poly<F>& base, unsigned e) {
    Poly<F> result = Poly<F>::constant(base.field(), base.field().one());
    Poly<F> b = base;
    while (e > 0) {
        if (e & 1U) result = result * b;
        e >>= 1U;
        if (e > 0) b = b * b;
    }
    return result;
}

template <Field F>
std::string Poly<F>::to_string(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (field_.is_zero(c_[i])) continue;
        std::string c = field_.to_string(c_[i]);
        bool needs_parens = c.find_first_of("+-", 1) != std::string::npos;
        bool negative = !needs_parens && !c.empty() && c[0] == '-';
        if (negative) c.erase(0, 1);
        if (!out.empty()) out += negative ? "-" : "+";
        else if (negative) out += "-";
        if (needs_parens) c = "(" + c + ")";
        if (i == 0) {
            out += c;
            continue;
        }
        if (c != "1") out += c + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace ohasse
