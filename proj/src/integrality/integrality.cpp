#include "ohasse/integrality/integrality.hpp"

#include <algorithm>
#include <numeric>

#include "ohasse/algebra/roots.hpp"
#include "ohasse/global/orbit.hpp"
#include "ohasse/map/analysis.hpp"

namespace ohasse {
namespace {

Rational power(const Integer& base, long e) {
    Integer b;
    mpz_pow_ui(b.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), b) : Rational(b);
}

void require_q_place(const Place& v) {
    if (v.over_function_field()) throw DomainMismatch("place " + v.to_string() + " is not a place of Q");
}

void require_ff_place(const Place& v, std::uint64_t p) {
    if (!v.over_function_field() || v.prime() != p)
        throw DomainMismatch("place " + v.to_string() + " is not a place of F" + std::to_string(p) + "(t)");
}

unsigned poly_valuation(FqPoly f, const FqPoly& pi) {
    unsigned e = 0;
    while (true) {
        auto [q, r] = divmod(f, pi);
        if (!r.is_zero()) return e;
        f = std::move(q);
        ++e;
    }
}

Rational to_elem(const RationalField&, const Integer& a) { return Rational(a); }
RatFunc to_elem(const RationalFunctionField& k, const FqPoly& a) { return k.from_poly(a); }

bool contains(const std::vector<Place>& S, const Place& v) { return std::find(S.begin(), S.end(), v) != S.end(); }

void check_S(const std::vector<Place>& S, const RationalField&) {
    for (const auto& v : S) require_q_place(v);
    if (!contains(S, Place::q_infinite()))
        throw PreconditionError("S must contain the infinite place of Q");
}

void check_S(const std::vector<Place>& S, const RationalFunctionField& k) {
    for (const auto& v : S) require_ff_place(v, k.characteristic());
    if (!contains(S, Place::ff_infinite(k.characteristic())))
        throw PreconditionError("S must contain the infinite place inf@F" + std::to_string(k.characteristic()));
}

// Removes every place of S from c.
Integer strip(Integer c, const std::vector<Place>& S) {
    c = abs(c);
    for (const auto& v : S)
        if (v.kind() == Place::Kind::QFinite) remove_factor(c, Integer(static_cast<unsigned long>(v.prime())));
    return c;
}

FqPoly strip(FqPoly c, const std::vector<Place>& S) {
    for (const auto& v : S)
        if (v.kind() == Place::Kind::FFFinite)
            if (unsigned e = poly_valuation(c, v.pi()); e > 0) c = c / poly_pow(v.pi(), e);
    return c.is_zero() ? c : c.monic();
}

bool is_unit(const Integer& c) { return c == 1; }
bool is_unit(const FqPoly& c) { return c.degree() == 0; }
bool is_zero_integral(const Integer& c) { return c == 0; }
bool is_zero_integral(const FqPoly& c) { return c.is_zero(); }

constexpr std::uint64_t kSmallPrimeLimit = 100000;

const Integer& small_primorial() {
    static const Integer value = [] {
        Integer v = 1;
        for (auto p : prime_sieve(kSmallPrimeLimit)) v *= static_cast<unsigned long>(p);
        return v;
    }();
    return value;
}

// Some prime factor of c > 1, when one is cheap to isolate.
std::optional<Place> find_place(const Integer& c, const RationalField&) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), small_primorial().get_mpz_t());
    if (g > 1)
        for (auto p : prime_sieve(kSmallPrimeLimit))
            if (mpz_divisible_ui_p(g.get_mpz_t(), p)) return Place::q_finite(p);
    if (c.fits_ulong_p() && is_prime_u64(c.get_ui())) return Place::q_finite(c.get_ui());
    if (bit_length(c) <= 128) {
        try {
            auto f = factor_integer(c);
            if (!f.empty() && f.front().first.fits_ulong_p()) return Place::q_finite(f.front().first.get_ui());
        } catch (const Unsupported&) {
        }
    }
    return std::nullopt;
}

std::optional<Place> find_place(const FqPoly& c, const RationalFunctionField& k) {
    if (c.degree() <= 16) return Place::ff_finite(factor_by_trial_division(c).front().first);
    const FiniteField& base = k.constants();
    if (base.size() <= 1000000)
        for (std::uint64_t e = 0; e < base.size(); ++e)
            if (base.is_zero(c.eval(e))) return Place::ff_finite(FqPoly(base, {base.neg(e), base.one()}));
    return std::nullopt;
}

// A finite place not in S (for the case delta = 0 everywhere).
Place place_outside(const std::vector<Place>& S, const RationalField&) {
    for (std::uint64_t p = 2;; ++p)
        if (is_prime_u64(p) && !contains(S, Place::q_finite(p))) return Place::q_finite(p);
}

Place place_outside(const std::vector<Place>& S, const RationalFunctionField& k) {
    for (unsigned deg = 1;; ++deg)
        for (const auto& pi : enumerate_monic_irreducibles(k.characteristic(), deg))
            if (pi.degree() == static_cast<int>(deg) && !contains(S, Place::ff_finite(pi))) return Place::ff_finite(pi);
}

template <Field F>
IntegralityCertificate<F> check_integral(const ProjPoint<F>& b, const std::vector<ProjPoint<F>>& D,
                                         const std::vector<Place>& S, bool want_witness) {
    const F& k = b.field();
    check_S(S, k);
    auto [xb, yb] = integral_coords(b);
    IntegralityCertificate<F> cert;
    for (const auto& d : D) {
        auto [xd, yd] = integral_coords(d);
        typename F::Integral cross = xb * yd - xd * yb;
        if (is_zero_integral(cross)) {
            cert.integral = false;
            if (want_witness) cert.witness = IntegralityWitness<F>{d, place_outside(S, k), Rational(0), cross};
            return cert;
        }
        auto rest = strip(cross, S);
        if (is_unit(rest)) continue;
        cert.integral = false;
        if (want_witness) {
            IntegralityWitness<F> w{d, find_place(rest, k), Rational(0), rest};
            if (w.place) w.delta = chordal_distance(b, d, *w.place);
            cert.witness = std::move(w);
        }
        return cert;
    }
    return cert;
}

}  // namespace

Rational abs_value(const Rational& x, const Place& v) {
    require_q_place(v);
    if (x.is_zero()) return Rational(0);
    if (v.kind() == Place::Kind::QInfinite) return x.abs();
    return power(Integer(static_cast<unsigned long>(v.prime())), -valuation(x, v));
}

Rational abs_value(const RatFunc& x, const Place& v) {
    require_ff_place(v, x.num.field().characteristic());
    if (x.num.is_zero()) return Rational(0);
    if (v.kind() == Place::Kind::FFInfinite)
        return power(Integer(static_cast<unsigned long>(v.prime())), x.num.degree() - x.den.degree());
    return power(v.norm(), -valuation(x, v));
}

long valuation(const Rational& x, const Place& v) {
    require_q_place(v);
    if (v.kind() != Place::Kind::QFinite) throw Unsupported("no valuation at the archimedean place");
    if (x.is_zero()) throw std::domain_error("valuation of 0");
    Integer n = x.num(), d = x.den(), p = static_cast<unsigned long>(v.prime());
    return static_cast<long>(remove_factor(n, p)) - static_cast<long>(remove_factor(d, p));
}

long valuation(const RatFunc& x, const Place& v) {
    require_ff_place(v, x.num.field().characteristic());
    if (x.num.is_zero()) throw std::domain_error("valuation of 0");
    if (v.kind() == Place::Kind::FFInfinite) return x.den.degree() - x.num.degree();
    return static_cast<long>(poly_valuation(x.num, v.pi())) - static_cast<long>(poly_valuation(x.den, v.pi()));
}

std::vector<Place> support(const Rational& x) {
    if (x.is_zero()) throw std::domain_error("support of 0");
    std::vector<Place> out;
    if (x.abs() != Rational(1)) out.push_back(Place::q_infinite());
    for (const auto* part : {&x.num(), &x.den()})
        for (const auto& [p, e] : factor_integer(*part)) out.push_back(Place::q_finite(to_u64(p)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Place> support(const RatFunc& x) {
    if (x.num.is_zero()) throw std::domain_error("support of 0");
    std::vector<Place> out;
    for (const auto* part : {&x.num, &x.den})
        if (part->degree() > 0)
            for (const auto& [pi, e] : factor_by_trial_division(*part)) out.push_back(Place::ff_finite(pi));
    if (x.num.degree() != x.den.degree()) out.push_back(Place::ff_infinite(x.num.field().characteristic()));
    std::sort(out.begin(), out.end());
    return out;
}

template <Field F>
Rational chordal_distance(const ProjPoint<F>& p, const ProjPoint<F>& q, const Place& v) {
    const F& k = p.field();
    if (!(q.field() == k)) throw DomainMismatch("points live over different fields");
    auto [a1, b1] = integral_coords(p);
    auto [a2, b2] = integral_coords(q);
    auto x1 = to_elem(k, a1), y1 = to_elem(k, b1), x2 = to_elem(k, a2), y2 = to_elem(k, b2);
    Rational num = abs_value(k.sub(k.mul(x1, y2), k.mul(x2, y1)), v);
    Rational m1 = std::max(abs_value(x1, v), abs_value(y1, v));
    Rational m2 = std::max(abs_value(x2, v), abs_value(y2, v));
    return num / (m1 * m2);
}

IntegralityCertificate<RationalField> is_DS_integral(const ProjPoint<RationalField>& b,
                                                     const std::vector<ProjPoint<RationalField>>& D,
                                                     const std::vector<Place>& S) {
    return check_integral(b, D, S, true);
}

IntegralityCertificate<RationalFunctionField> is_DS_integral(const ProjPoint<RationalFunctionField>& b,
                                                             const std::vector<ProjPoint<RationalFunctionField>>& D,
                                                             const std::vector<Place>& S) {
    return check_integral(b, D, S, true);
}

bool ds_integral(const ProjPoint<RationalField>& b, const std::vector<ProjPoint<RationalField>>& D,
                 const std::vector<Place>& S) {
    return check_integral(b, D, S, false).integral;
}

bool ds_integral(const ProjPoint<RationalFunctionField>& b, const std::vector<ProjPoint<RationalFunctionField>>& D,
                 const std::vector<Place>& S) {
    return check_integral(b, D, S, false).integral;
}

template <Field F>
OrbitIntegrality orbit_integral_elements(const RationalMap<F>& m, const ProjPoint<F>& alpha, const ProjPoint<F>& beta,
                                         const std::vector<Place>& S, std::uint64_t n_max) {
    if (m.degree() < 2) throw Unsupported("orbit integrality needs degree >= 2");
    OrbitClass cls = classify_orbit(m, beta);
    if (!cls.is_periodic())
        throw PreconditionError("beta = " + beta.to_string() + " is " + cls.to_string() + " under " + m.to_string() +
                                ", but the finiteness theorem for S-integral orbit points needs a periodic beta");
    if (is_exceptional(m, beta))
        throw PreconditionError("beta = " + beta.to_string() + " is exceptional for " + m.to_string() +
                                " (totally ramified cycle, finite backward orbit), but the finiteness theorem needs "
                                "a non-exceptional beta");
    check_S(S, m.field());
    OrbitIntegrality out;
    out.n_max = n_max;
    ProjPoint<F> p = alpha;
    for (std::uint64_t n = 0;; ++n) {
        if (ds_integral(p, {beta}, S)) {
            out.indices.push_back(n);
            if (2 * n > n_max) out.tail_hit_free = false;
        }
        if (n == n_max) break;
        p = m.eval(p);
    }
    return out;
}

template <Field F>
SplitFactor<F> split_factor(const Poly<F>& f) {
    if (f.degree() < 1) throw std::invalid_argument("a factor must have degree >= 1");
    auto rep = find_roots(f);
    unsigned total = 0;
    for (const auto& [r, m] : rep.roots) total += m;
    if (total != static_cast<unsigned>(f.degree()))
        throw Unsupported("factor " + f.to_string('x') + " does not split over " + f.field().name() +
                          "; only split factors are supported");
    return {f, rep.roots};
}

template <Field F>
Rational runge_constant_Cv(const std::vector<SplitFactor<F>>& factors, const Place& v) {
    const F& k = factors.at(0).f.field();
    int d = 0;
    for (const auto& s : factors) d = std::max(d, s.f.degree());
    Rational c = power(Integer(2), -d);
    const Rational one(1);
    for (const auto& s : factors) c *= std::min(abs_value(s.f.lead(), v), one);
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            for (const auto& [beta, mb] : factors[i].roots)
                for (const auto& [gamma, mg] : factors[j].roots) {
                    if (beta == gamma)
                        throw HypothesisNotMet("factors " + factors[i].f.to_string('x') + " and " +
                                               factors[j].f.to_string('x') + " share the root " + k.to_string(beta) +
                                               "; the factors must be distinct with disjoint roots");
                    Rational a = std::min(abs_value(k.sub(beta, gamma), v), one);
                    c *= a.pow(static_cast<long>(mb * mg));
                }
    return c;
}

namespace {

void check_poles(const Poly<RationalField>& f, const std::vector<Place>& S) {
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        for (const auto& [p, e] : factor_integer(c.den()))
            if (!contains(S, Place::q_finite(to_u64(p))))
                throw HypothesisNotMet("S must contain the place " + p.get_str() + ", a pole of a coefficient of " +
                                       f.to_string('x'));
    }
}

void check_poles(const Poly<RationalFunctionField>& f, const std::vector<Place>& S) {
    for (const auto& c : f.coeffs()) {
        if (c.num.is_zero() || c.den.degree() == 0) continue;
        for (const auto& [pi, e] : factor_by_trial_division(c.den))
            if (!contains(S, Place::ff_finite(pi)))
                throw HypothesisNotMet("S must contain the place " + Place::ff_finite(pi).to_string() +
                                       ", a pole of a coefficient of " + f.to_string('x'));
    }
}

std::optional<unsigned> degree_bound(const RationalField&, const Integer&) { return std::nullopt; }
std::optional<unsigned> degree_bound(const RationalFunctionField& k, const Integer& n) {
    unsigned d = 0;
    const unsigned long p = k.characteristic();
    for (Integer pw = p; pw <= n; pw *= p) ++d;
    return d;
}

}  // namespace

template <Field F>
RungeBound runge_height_bound(const std::vector<SplitFactor<F>>& factors, const std::vector<Place>& S) {
    if (factors.size() <= S.size())
        throw HypothesisNotMet("Runge's method needs more factors than places in S: t = " +
                               std::to_string(factors.size()) + ", |S| = " + std::to_string(S.size()));
    const F& k = factors.front().f.field();
    try {
        check_S(S, k);
    } catch (const PreconditionError& e) {
        throw HypothesisNotMet(e.what());
    }
    for (const auto& s : factors) check_poles(s.f, S);
    RungeBound out;
    out.reciprocal_product = Rational(1);
    for (const auto& v : S) {
        Rational c = runge_constant_Cv(factors, v);
        out.cv.emplace_back(v, c);
        out.reciprocal_product *= c.inverse();
    }
    out.norm_bound = 1;
    for (const auto& s : factors) {
        auto m = RationalMap<F>::from_affine(s.f, Poly<F>::constant(k, k.one()));
        Rational lower = height_machine_constants(m).lower;
        out.lower.push_back(lower);
        Rational prod = lower * out.reciprocal_product;
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), prod.num().get_mpz_t(), prod.den().get_mpz_t());
        Integer n = floor_root(fl, static_cast<unsigned long>(s.f.degree()));
        if (out.norm_bound < n) out.norm_bound = n;
    }
    out.degree_bound = degree_bound(k, out.norm_bound);
    return out;
}

std::vector<ProjPoint<RationalField>> enumerate_bounded_height(const RationalField& field, const Integer& max_norm) {
    std::vector<ProjPoint<RationalField>> out;
    if (max_norm < 1) return out;
    const long n = static_cast<long>(to_u64(max_norm));
    for (long b = 1; b <= n; ++b)
        for (long a = -n; a <= n; ++a)
            if (std::gcd(a < 0 ? -a : a, b) == 1)
                out.push_back(ProjPoint<RationalField>::affine(field, Rational::from_coprime(a, b)));
    out.push_back(ProjPoint<RationalField>::infinity(field));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ProjPoint<RationalFunctionField>> enumerate_bounded_height(const RationalFunctionField& field,
                                                                       unsigned max_degree) {
    const FiniteField& k = field.constants();
    std::vector<FqPoly> nums{FqPoly(k)}, dens;
    for (unsigned deg = 0; deg <= max_degree; ++deg) {
        auto monic = enumerate_monic(k, deg);
        dens.insert(dens.end(), monic.begin(), monic.end());
        for (const auto& mpoly : monic)
            for (std::uint64_t c = 1; c < k.characteristic(); ++c) nums.push_back(mpoly.scaled(c));
    }
    std::vector<ProjPoint<RationalFunctionField>> out;
    for (const auto& b : dens)
        for (const auto& a : nums)
            if (poly_gcd(a, b).degree() == 0)
                out.push_back(ProjPoint<RationalFunctionField>::affine(field, RatFunc{a, b}));
    out.push_back(ProjPoint<RationalFunctionField>::infinity(field));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
std::vector<ProjPoint<RationalField>> runge_candidates(const RationalField& k, const RungeBound& b) {
    return enumerate_bounded_height(k, b.norm_bound);
}
std::vector<ProjPoint<RationalFunctionField>> runge_candidates(const RationalFunctionField& k, const RungeBound& b) {
    return enumerate_bounded_height(k, b.degree_bound.value_or(0));
}
}  // namespace

template <Field F>
std::vector<ProjPoint<F>> runge_integral_points(const std::vector<SplitFactor<F>>& factors,
                                                const std::vector<Place>& S, const RungeBound& bound) {
    const F& k = factors.at(0).f.field();
    std::vector<ProjPoint<F>> D;
    for (const auto& s : factors)
        for (const auto& [r, m] : s.roots) D.push_back(ProjPoint<F>::affine(k, r));
    std::vector<ProjPoint<F>> out;
    for (const auto& p : runge_candidates(k, bound))
        if (ds_integral(p, D, S)) out.push_back(p);
    return out;
}

template Rational chordal_distance(const ProjPoint<RationalField>&, const ProjPoint<RationalField>&, const Place&);
template Rational chordal_distance(const ProjPoint<RationalFunctionField>&, const ProjPoint<RationalFunctionField>&,
                                   const Place&);
template OrbitIntegrality orbit_integral_elements(const RationalMap<RationalField>&, const ProjPoint<RationalField>&,
                                                 const ProjPoint<RationalField>&, const std::vector<Place>&,
                                                 std::uint64_t);
template OrbitIntegrality orbit_integral_elements(const RationalMap<RationalFunctionField>&,
                                                 const ProjPoint<RationalFunctionField>&,
                                                 const ProjPoint<RationalFunctionField>&, const std::vector<Place>&,
                                                 std::uint64_t);
template SplitFactor<RationalField> split_factor(const Poly<RationalField>&);
template SplitFactor<RationalFunctionField> split_factor(const Poly<RationalFunctionField>&);
template Rational runge_constant_Cv(const std::vector<SplitFactor<RationalField>>&, const Place&);
template Rational runge_constant_Cv(const std::vector<SplitFactor<RationalFunctionField>>&, const Place&);
template RungeBound runge_height_bound(const std::vector<SplitFactor<RationalField>>&, const std::vector<Place>&);
template RungeBound runge_height_bound(const std::vector<SplitFactor<RationalFunctionField>>&,
                                       const std::vector<Place>&);
template std::vector<ProjPoint<RationalField>> runge_integral_points(const std::vector<SplitFactor<RationalField>>&,
                                                                     const std::vector<Place>&, const RungeBound&);
template std::vector<ProjPoint<RationalFunctionField>> runge_integral_points(
    const std::vector<SplitFactor<RationalFunctionField>>&, const std::vector<Place>&, const RungeBound&);

}  // namespace ohasse
