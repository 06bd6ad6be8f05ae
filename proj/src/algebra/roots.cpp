#include "ohasse/algebra/roots.hpp"

#include <algorithm>
#include <type_traits>

namespace ohasse {
namespace {

template <Field F>
void squarefree_into(Poly<F> f, unsigned mult, std::vector<std::pair<Poly<F>, unsigned>>& out) {
    if (f.degree() <= 0) return;
    f = f.monic();
    Poly<F> df = poly_derivative(f);
    if (df.is_zero()) {
        if constexpr (std::is_same_v<F, FiniteField>) {
            // f = G(x^p); the p-th root of a is a^(q/p).
            const FiniteField& k = f.field();
            const std::uint64_t p = k.characteristic();
            std::vector<FiniteField::Element> g;
            for (std::size_t i = 0; i < f.coeffs().size(); i += p) g.push_back(k.pow(f.coeffs()[i], k.size() / p));
            squarefree_into(FqPoly(k, std::move(g)), mult * static_cast<unsigned>(p), out);
        } else {
            out.emplace_back(f, mult);
        }
        return;
    }
    Poly<F> c = poly_gcd(f, df);
    Poly<F> w = f / c;
    for (unsigned i = 1; w.degree() > 0; ++i) {
        Poly<F> y = poly_gcd(w, c);
        Poly<F> z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        w = y;
        c = c / y;
    }
    // Whatever survives has multiplicity divisible by the characteristic.
    squarefree_into(c, mult, out);
}

// Divides every factor (x - r) out of f, returning the multiplicity.
template <Field F>
unsigned divide_out_root(Poly<F>& f, const typename F::Element& r) {
    const F& k = f.field();
    Poly<F> lin(k, {k.neg(r), k.one()});
    unsigned m = 0;
    while (f.degree() >= 1 && k.is_zero(f.eval(r))) {
        f = f / lin;
        ++m;
    }
    return m;
}

template <Field F>
std::vector<unsigned> block_degrees(const Poly<F>& rest) {
    std::vector<unsigned> out;
    for (const auto& [g, m] : squarefree_decomposition(rest))
        for (unsigned i = 0; i < m; ++i) out.push_back(static_cast<unsigned>(g.degree()));
    std::sort(out.begin(), out.end());
    return out;
}

// Distinct roots of a monic product of distinct linear factors over F_q.
void split_linear(const FqPoly& s, std::vector<FiniteField::Element>& out) {
    const FiniteField& k = s.field();
    if (s.degree() <= 0) return;
    if (s.degree() == 1) {
        out.push_back(k.neg(s.coeff(0)));
        return;
    }
    const std::uint64_t q = k.size();
    if (q <= (1u << 20)) {
        const std::size_t want = out.size() + static_cast<std::size_t>(s.degree());
        for (std::uint64_t e = 0; e < q && out.size() < want; ++e)
            if (k.is_zero(s.eval(e))) out.push_back(e);
        return;
    }
    if (k.characteristic() == 2) throw Unsupported("root splitting over large fields of characteristic 2");
    // Cantor-Zassenhaus with deterministic shifts: gcd(s, (x+a)^((q-1)/2) - 1).
    for (std::uint64_t a = 0;; ++a) {
        FqPoly base(k, {a % q, k.one()});
        FqPoly h = poly_powmod(base, Integer(static_cast<unsigned long>((q - 1) / 2)), s) -
                   FqPoly::constant(k, k.one());
        FqPoly g = poly_gcd(s, h);
        if (g.degree() > 0 && g.degree() < s.degree()) {
            split_linear(g, out);
            split_linear(s / g, out);
            return;
        }
    }
}

}  // namespace

template <Field F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& f) {
    std::vector<std::pair<Poly<F>, unsigned>> out;
    squarefree_into(f, 1, out);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

template std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly&);
template std::vector<std::pair<Poly<RationalField>, unsigned>> squarefree_decomposition(const Poly<RationalField>&);
template std::vector<std::pair<Poly<RationalFunctionField>, unsigned>> squarefree_decomposition(
    const Poly<RationalFunctionField>&);

RootReport<FiniteField> find_roots(const FqPoly& f) {
    RootReport<FiniteField> rep;
    if (f.degree() <= 0) return rep;
    const FiniteField& k = f.field();
    FqPoly g = f.monic();
    FqPoly x = FqPoly::x(k);
    FqPoly split = poly_gcd(g, poly_powmod(x, Integer(static_cast<unsigned long>(k.size())), g) - x);
    std::vector<FiniteField::Element> rs;
    split_linear(split, rs);
    std::sort(rs.begin(), rs.end());
    for (auto r : rs) rep.roots.emplace_back(r, divide_out_root(g, r));
    for (const auto& [h, m] : squarefree_decomposition(g))
        for (unsigned d : irreducible_factor_degrees_squarefree(h))
            for (unsigned i = 0; i < m; ++i) rep.residual_degrees.push_back(d);
    std::sort(rep.residual_degrees.begin(), rep.residual_degrees.end());
    return rep;
}

RootReport<RationalField> find_roots(const Poly<RationalField>& f) {
    RootReport<RationalField> rep;
    if (f.degree() <= 0) return rep;
    const RationalField& Q = f.field();
    Poly<RationalField> g = f.monic();
    unsigned zero_mult = divide_out_root(g, Rational(0));
    if (zero_mult > 0) rep.roots.emplace_back(Rational(0), zero_mult);
    if (g.degree() >= 1) {
        // Rational root theorem on the primitive integer multiple of g.
        Integer l = 1;
        for (const auto& c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        Integer a0 = g.coeff(0).num() * (l / g.coeff(0).den());
        Integer an = l;
        auto us = positive_divisors(a0), vs = positive_divisors(an);
        for (const auto& u : us)
            for (const auto& v : vs) {
                if (gcd(u, v) != 1) continue;
                for (int s : {1, -1}) {
                    if (g.degree() < 1) break;
                    Rational r(s * u, v);
                    if (!Q.is_zero(g.eval(r))) continue;
                    rep.roots.emplace_back(r, divide_out_root(g, r));
                }
            }
    }
    std::sort(rep.roots.begin(), rep.roots.end());
    rep.residual_degrees = block_degrees(g);
    return rep;
}

namespace {

std::vector<FqPoly> monic_divisors(const FqPoly& a) {
    const FiniteField& k = a.field();
    std::vector<FqPoly> divs{FqPoly::constant(k, k.one())};
    for (const auto& [pi, e] : factor_by_trial_division(a)) {
        std::size_t n = divs.size();
        FqPoly pw = pi;
        for (unsigned j = 1; j <= e; ++j, pw = pw * pi)
            for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * pw);
    }
    return divs;
}

}  // namespace

RootReport<RationalFunctionField> find_roots(const Poly<RationalFunctionField>& f) {
    RootReport<RationalFunctionField> rep;
    if (f.degree() <= 0) return rep;
    const RationalFunctionField& K = f.field();
    const FiniteField& k = K.constants();
    Poly<RationalFunctionField> g = f.monic();
    unsigned zero_mult = divide_out_root(g, K.zero());
    if (zero_mult > 0) rep.roots.emplace_back(K.zero(), zero_mult);
    if (g.degree() >= 1) {
        FqPoly l = FqPoly::constant(k, k.one());
        for (const auto& c : g.coeffs()) l = l / poly_gcd(l, c.den) * c.den;
        FqPoly a0 = g.coeff(0).num * (l / g.coeff(0).den);
        auto us = monic_divisors(a0), vs = monic_divisors(l);
        for (const auto& u : us)
            for (const auto& v : vs) {
                if (poly_gcd(u, v).degree() != 0) continue;
                for (std::uint64_t c = 1; c < k.characteristic(); ++c) {
                    if (g.degree() < 1) break;
                    auto r = K.make(u.scaled(c), v);
                    if (!K.is_zero(g.eval(r))) continue;
                    rep.roots.emplace_back(r, divide_out_root(g, r));
                }
            }
    }
    std::sort(rep.roots.begin(), rep.roots.end());
    rep.residual_degrees = block_degrees(g);
    return rep;
}

}  // namespace ohasse
