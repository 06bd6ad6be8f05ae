#include <doctest.h>

#include "ohasse/integrality/integrality.hpp"
#include "support.hpp"

using namespace ohasse;

namespace {

RationalField Q;

Rational rq(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }
ProjPoint<RationalField> qp(const char* s) { return parse_point(Q, s); }
const Place kInf = Place::q_infinite();

SplitFactor<RationalField> qfactor(const char* text) { return split_factor(parse_polynomial(Q, text)); }

// Strips every prime in `s` from |n| and reports whether 1 is left.
bool is_s_unit(mpz_class n, const std::vector<unsigned long>& s) {
    if (n == 0) return false;
    n = abs(n);
    for (unsigned long p : s)
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    return n == 1;
}

// Oracle over Q: coprime integral coordinates, cross terms, S-unit test.
bool naive_integral(const std::optional<mpq_class>& b, const std::vector<std::optional<mpq_class>>& D,
                    const std::vector<unsigned long>& s) {
    auto coords = [](const std::optional<mpq_class>& x) {
        return x ? std::pair<mpz_class, mpz_class>{x->get_num(), x->get_den()} : std::pair<mpz_class, mpz_class>{1, 0};
    };
    auto [x1, y1] = coords(b);
    for (const auto& d : D) {
        auto [x2, y2] = coords(d);
        mpz_class cross = x1 * y2 - x2 * y1;
        if (!is_s_unit(cross, s)) return false;
    }
    return true;
}

// Orbit of a polynomial map over Q by plain mpq iteration.
std::vector<mpq_class> naive_orbit(const std::vector<mpq_class>& coeffs_low, mpq_class x, std::uint64_t n) {
    std::vector<mpq_class> out{x};
    for (std::uint64_t i = 0; i < n; ++i) {
        mpq_class acc = 0;
        for (auto c = coeffs_low.rbegin(); c != coeffs_low.rend(); ++c) acc = acc * x + *c;
        x = acc;
        out.push_back(x);
    }
    return out;
}

std::vector<std::uint64_t> naive_orbit_hits(const std::vector<mpq_class>& coeffs_low, mpq_class alpha, mpq_class beta,
                                            const std::vector<unsigned long>& s, std::uint64_t n) {
    std::vector<std::uint64_t> hits;
    auto orbit = naive_orbit(coeffs_low, alpha, n);
    for (std::uint64_t i = 0; i <= n; ++i)
        if (naive_integral(orbit[i], {beta}, s)) hits.push_back(i);
    return hits;
}

std::vector<Place> q_places(std::initializer_list<std::uint64_t> ps) {
    std::vector<Place> out{kInf};
    for (auto p : ps) out.push_back(Place::q_finite(p));
    return out;
}

// Points over F_p(t) with max degree <= D, counted from coprime coefficient
// vectors by a plain Euclidean gcd mod p, up to scalars.
std::uint64_t naive_ff_count(std::uint64_t p, unsigned D) {
    using V = std::vector<std::uint64_t>;
    auto trim = [](V& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    };
    auto inv = [p](std::uint64_t a) {
        for (std::uint64_t b = 1; b < p; ++b)
            if (a * b % p == 1) return b;
        return std::uint64_t{0};
    };
    auto gcd_deg = [&](V a, V b) {
        trim(a);
        trim(b);
        while (!b.empty()) {
            while (a.size() >= b.size()) {
                std::uint64_t f = a.back() * inv(b.back()) % p;
                std::size_t shift = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p * p - f * b[i]) % p;
                trim(a);
                if (a.empty()) break;
            }
            std::swap(a, b);
        }
        return static_cast<int>(a.size()) - 1;
    };
    std::uint64_t total = 1;
    for (unsigned i = 0; i <= D; ++i) total *= p;
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < total; ++i)
        for (std::uint64_t j = 0; j < total; ++j) {
            V a(D + 1), b(D + 1);
            for (unsigned k = 0, x = static_cast<unsigned>(i), y = static_cast<unsigned>(j); k <= D; ++k, x /= p, y /= p) {
                a[k] = x % p;
                b[k] = y % p;
            }
            if (i == 0 && j == 0) continue;
            if (gcd_deg(a, b) == 0) ++count;
        }
    return count / (p - 1);
}

}  // namespace

TEST_CASE("absolute value examples") {
    CHECK(abs_value(rq(12), Place::q_finite(2)) == rq(1, 4));
    CHECK(abs_value(rq(1, 5), Place::q_finite(5)) == rq(5));
    CHECK(abs_value(rq(-7, 3), kInf) == rq(7, 3));
    CHECK(abs_value(rq(0), Place::q_finite(3)) == rq(0));
    Rational prod(1);
    for (const auto& v : ohasse::support(rq(12))) prod *= abs_value(rq(12), v);
    CHECK(prod == rq(1));
    RationalFunctionField K(3);
    RatFunc f = parse_element(K, "(t^2+1)/t");
    CHECK(abs_value(f, Place::ff_infinite(3)) == rq(3));
    CHECK(abs_value(f, Place::ff_finite(FqPoly(K.constants(), {0, 1}))) == rq(3));
    CHECK(abs_value(f, Place::ff_finite(FqPoly(K.constants(), {1, 0, 1}))) == rq(1, 9));
    CHECK(valuation(f, Place::ff_infinite(3)) == -1);
}

TEST_CASE("product formula over Q against trial division") {
    for (int i = 0; i < 1000; ++i) {
        Rational x = support::random_nonzero_rational(100000);
        Rational prod = abs_value(x, kInf);
        std::set<std::uint64_t> seen;
        for (const auto& v : ohasse::support(x)) {
            if (!v.is_finite()) continue;
            seen.insert(v.prime());
            prod *= abs_value(x, v);
        }
        CHECK(prod == rq(1));
        // Every prime dividing the numerator or denominator is in the support.
        for (Integer n : {Integer(abs(x.num())), x.den()})
            for (unsigned long p = 2; n > 1; ++p)
                while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                    CHECK(seen.count(p) == 1);
                    n /= p;
                }
    }
}

TEST_CASE("product formula over F_3(t)") {
    RationalFunctionField K(3);
    for (int i = 0; i < 1000; ++i) {
        RatFunc x = support::random_ratfunc(K, 4);
        Rational prod(1);
        bool saw_inf = false;
        long degree_sum = 0;
        for (const auto& v : ohasse::support(x)) {
            prod *= abs_value(x, v);
            if (v.is_finite()) degree_sum += valuation(x, v) * v.pi().degree();
            else saw_inf = true;
        }
        if (!saw_inf) CHECK(abs_value(x, Place::ff_infinite(3)) == rq(1));
        CHECK(prod == rq(1));
        // Finite valuations weighted by degree sum to deg num - deg den.
        CHECK(degree_sum == x.num.degree() - x.den.degree());
    }
}

TEST_CASE("chordal distance examples") {
    auto inf = ProjPoint<RationalField>::infinity(Q);
    CHECK(chordal_distance(qp("1/5"), inf, Place::q_finite(5)) == rq(1, 5));
    CHECK(chordal_distance(qp("1"), qp("4"), Place::q_finite(3)) == rq(1, 3));
    CHECK(chordal_distance(qp("7/2"), qp("7/2"), Place::q_finite(7)) == rq(0));
    CHECK(chordal_distance(qp("1"), qp("-1"), kInf) == rq(2));
}

TEST_CASE("chordal distance is symmetric and bounded") {
    std::vector<Place> places = q_places({2, 3, 5, 7, 11});
    for (int i = 0; i < 2000; ++i) {
        auto a = support::uniform(0, 30) == 0 ? ProjPoint<RationalField>::infinity(Q)
                                              : ProjPoint<RationalField>::affine(Q, support::random_rational(60));
        auto b = support::uniform(0, 5) == 0 ? a : ProjPoint<RationalField>::affine(Q, support::random_rational(60));
        for (const auto& v : places) {
            Rational d = chordal_distance(a, b, v);
            CHECK(d == chordal_distance(b, a, v));
            CHECK(d >= rq(0));
            CHECK(d <= (v.is_finite() ? rq(1) : rq(2)));
            CHECK(d.is_zero() == (a == b));
        }
    }
    RationalFunctionField K(3);
    std::vector<Place> fplaces{Place::ff_infinite(3), Place::ff_finite(FqPoly(K.constants(), {0, 1})),
                               Place::ff_finite(FqPoly(K.constants(), {1, 0, 1}))};
    for (int i = 0; i < 500; ++i) {
        auto a = ProjPoint<RationalFunctionField>::affine(K, support::random_ratfunc(K, 3));
        auto b = support::uniform(0, 5) == 0 ? a : ProjPoint<RationalFunctionField>::affine(K, support::random_ratfunc(K, 3));
        for (const auto& v : fplaces) {
            Rational d = chordal_distance(a, b, v);
            CHECK(d == chordal_distance(b, a, v));
            CHECK(d >= rq(0));
            CHECK(d <= rq(1));
            CHECK(d.is_zero() == (a == b));
        }
    }
}

TEST_CASE("DS-integrality examples") {
    auto inf = ProjPoint<RationalField>::infinity(Q);
    CHECK(is_DS_integral(qp("3"), {inf}, {kInf}).integral);
    auto c = is_DS_integral(qp("1/2"), {inf}, {kInf});
    CHECK_FALSE(c.integral);
    REQUIRE(c.witness);
    CHECK(c.witness->place == Place::q_finite(2));
    CHECK(c.witness->delta == rq(1, 2));
    CHECK(is_DS_integral(qp("1/2"), {inf}, q_places({2})).integral);
    CHECK_THROWS_AS(is_DS_integral(qp("1/2"), {inf}, {Place::q_finite(2)}), PreconditionError);
    CHECK_FALSE(ds_integral(qp("0"), {qp("0")}, {kInf}));
}

TEST_CASE("DS-integrality agrees with the cross-term oracle") {
    const std::vector<std::vector<unsigned long>> sets{{}, {2}, {3}, {2, 5}};
    for (int i = 0; i < 1500; ++i) {
        const auto& s = sets[static_cast<std::size_t>(support::uniform(0, 3))];
        std::vector<Place> S{kInf};
        for (auto p : s) S.push_back(Place::q_finite(p));
        auto b_val = support::random_rational(40);
        std::vector<ProjPoint<RationalField>> D;
        std::vector<std::optional<mpq_class>> d_vals;
        for (long k = support::uniform(1, 3); k > 0; --k) {
            if (support::uniform(0, 6) == 0) {
                D.push_back(ProjPoint<RationalField>::infinity(Q));
                d_vals.push_back(std::nullopt);
            } else {
                Rational r = support::random_rational(20);
                D.push_back(ProjPoint<RationalField>::affine(Q, r));
                d_vals.push_back(mpq_class(mpz_class(r.num()), mpz_class(r.den())));
            }
        }
        auto b = ProjPoint<RationalField>::affine(Q, b_val);
        bool expected = naive_integral(mpq_class(mpz_class(b_val.num()), mpz_class(b_val.den())), d_vals, s);
        auto cert = is_DS_integral(b, D, S);
        CHECK(cert.integral == expected);
        CHECK(ds_integral(b, D, S) == expected);
        if (!cert.integral) {
            REQUIRE(cert.witness);
            const auto& w = *cert.witness;
            CHECK(std::find(D.begin(), D.end(), w.d) != D.end());
            if (w.place) {
                CHECK(std::find(S.begin(), S.end(), *w.place) == S.end());
                CHECK(chordal_distance(b, w.d, *w.place) == w.delta);
                CHECK(w.delta < rq(1));
            }
        }
    }
}

TEST_CASE("orbit integrality examples") {
    auto m = parse_map(Q, "x^2-1");
    auto r = orbit_integral_elements(m, qp("1/2"), qp("0"), q_places({2}), 25);
    CHECK(r.indices == std::vector<std::uint64_t>{0});
    CHECK(r.tail_hit_free);
    auto odd = orbit_integral_elements(m, qp("0"), qp("0"), {kInf}, 20);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1; n <= 20; n += 2) expected.push_back(n);
    CHECK(odd.indices == expected);
    CHECK_FALSE(odd.tail_hit_free);
    try {
        orbit_integral_elements(parse_map(Q, "x^2"), qp("2"), qp("0"), {kInf}, 10);
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("exceptional") != std::string::npos);
    }
    try {
        orbit_integral_elements(parse_map(Q, "x^2+1"), qp("1"), qp("0"), {kInf}, 10);
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("periodic") != std::string::npos);
    }
}

TEST_CASE("orbit integrality matches the factorisation oracle") {
    struct Fixture {
        const char* map;
        std::vector<mpq_class> coeffs_low;
        mpq_class alpha, beta;
        std::vector<unsigned long> s;
        std::uint64_t n;
    };
    const std::vector<Fixture> fixtures{
        {"x^2-1", {-1, 0, 1}, mpq_class(1, 2), 0, {2}, 25},
        {"x^2-2", {-2, 0, 1}, 3, 2, {}, 18},
        {"x^2-1", {-1, 0, 1}, 3, -1, {2}, 18},
        {"x^2-29/16", {mpq_class(-29, 16), 0, 1}, 0, mpq_class(-1, 4), {2, 3}, 14},
    };
    for (const auto& f : fixtures) {
        std::vector<Place> S{kInf};
        for (auto p : f.s) S.push_back(Place::q_finite(p));
        auto alpha = ProjPoint<RationalField>::affine(Q, Rational(Integer(f.alpha.get_num()), Integer(f.alpha.get_den())));
        auto beta = ProjPoint<RationalField>::affine(Q, Rational(Integer(f.beta.get_num()), Integer(f.beta.get_den())));
        auto got = orbit_integral_elements(parse_map(Q, f.map), alpha, beta, S, f.n);
        CAPTURE(f.map);
        CHECK(got.indices == naive_orbit_hits(f.coeffs_low, f.alpha, f.beta, f.s, f.n));
        CHECK(got.tail_hit_free);
    }
}

TEST_CASE("Runge constant examples") {
    std::vector<SplitFactor<RationalField>> a{qfactor("x"), qfactor("x-1")};
    CHECK(runge_constant_Cv(a, kInf) == rq(1, 2));
    CHECK(runge_constant_Cv(a, Place::q_finite(2)) == rq(1, 2));
    std::vector<SplitFactor<RationalField>> b{qfactor("2*x-1"), qfactor("x")};
    CHECK(runge_constant_Cv(b, Place::q_finite(2)) == rq(1, 4));
    CHECK_THROWS_AS(split_factor(parse_polynomial(Q, "x^2+1")), Unsupported);
}

TEST_CASE("Runge hypotheses") {
    std::vector<SplitFactor<RationalField>> two{qfactor("x"), qfactor("x-1")};
    CHECK_THROWS_AS(runge_height_bound(two, q_places({2})), HypothesisNotMet);
    CHECK_NOTHROW(runge_height_bound(two, {kInf}));
    std::vector<SplitFactor<RationalField>> repeated{qfactor("x"), qfactor("x"), qfactor("x+1")};
    CHECK_THROWS_AS(runge_height_bound(repeated, {kInf}), HypothesisNotMet);
    std::vector<SplitFactor<RationalField>> three{qfactor("x"), qfactor("x-1"), qfactor("x+1")};
    CHECK_THROWS_AS(runge_height_bound(three, {Place::q_finite(2)}), HypothesisNotMet);
    std::vector<SplitFactor<RationalField>> poles{qfactor("x"), qfactor("x-1/3"), qfactor("x+1")};
    CHECK_THROWS_AS(runge_height_bound(poles, q_places({2})), HypothesisNotMet);
    CHECK_NOTHROW(runge_height_bound(poles, q_places({3})));
}

TEST_CASE("bounded height enumeration") {
    auto sixteen = enumerate_bounded_height(Q, 3);
    CHECK(sixteen.size() == 16);
    CHECK(enumerate_bounded_height(Q, 1).size() == 4);
    std::set<std::pair<Integer, Integer>> got;
    for (const auto& p : enumerate_bounded_height(Q, 12)) {
        if (p.is_infinity()) got.insert({1, 0});
        else got.insert({p.value().num(), p.value().den()});
    }
    CHECK(got == support::brute_points_q(12));
    for (std::uint64_t p : {2, 3}) {
        RationalFunctionField K(p);
        for (unsigned D = 0; D <= 2; ++D) {
            CAPTURE(p);
            CAPTURE(D);
            CHECK(enumerate_bounded_height(K, D).size() == naive_ff_count(p, D));
        }
    }
    RationalFunctionField K3(3);
    auto pts = enumerate_bounded_height(K3, 1);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const auto& p : pts) CHECK(weil_height(p).norm <= 3);
}

TEST_CASE("Runge integral points agree with a brute-force sweep") {
    std::vector<SplitFactor<RationalField>> f{qfactor("x"), qfactor("x-1"), qfactor("x+1")};
    auto S = q_places({2});
    auto bound = runge_height_bound(f, S);
    CHECK(bound.norm_bound > 0);
    auto pts = runge_integral_points(f, S, bound);
    std::vector<std::string> names;
    for (const auto& p : pts) names.push_back(p.to_string());
    CHECK(names == std::vector<std::string>{"-1/3", "1/3", "inf"});
    std::vector<ProjPoint<RationalField>> D{qp("0"), qp("1"), qp("-1")};
    std::vector<ProjPoint<RationalField>> sweep;
    for (const auto& p : enumerate_bounded_height(Q, bound.norm_bound * 2))
        if (ds_integral(p, D, S)) sweep.push_back(p);
    CHECK(sweep == pts);
}

TEST_CASE("S-integral points make split factors large away from S") {
    // The bound needs |a|_v = 1 outside S as well: 5x(x-1)(x-2) has integral
    // coefficients, 3 avoids every root away from {2, 3}, yet f(3) = 30.
    auto cubic = parse_polynomial(Q, "5*x*(x-1)*(x-2)");
    CHECK(ds_integral(qp("3"), {qp("0"), qp("1"), qp("2")}, q_places({2, 3})));
    CHECK(abs_value(cubic.eval(rq(3)), Place::q_finite(5)) == rq(1, 5));
    // Random split cubics a (x - r1)(x - r2)(x - r3); S holds infinity, the
    // poles of the coefficients and the zeros of a.
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        Rational a = support::random_nonzero_rational(6);
        Poly<RationalField> f = Poly<RationalField>::constant(Q, a);
        std::vector<ProjPoint<RationalField>> roots;
        for (int k = 0; k < 3; ++k) {
            Rational r = support::random_rational(6);
            f = f * Poly<RationalField>(Q, {-r, Rational(1)});
            roots.push_back(ProjPoint<RationalField>::affine(Q, r));
        }
        std::set<Place> s_set{kInf};
        for (const auto& c : f.coeffs())
            if (!c.is_zero())
                for (const auto& v : ohasse::support(c))
                    if (v.is_finite() && valuation(c, v) < 0) s_set.insert(v);
        for (const auto& v : ohasse::support(a))
            if (v.is_finite()) s_set.insert(v);
        std::vector<Place> S(s_set.begin(), s_set.end());
        for (int j = 0; j < 40; ++j) {
            auto b = ProjPoint<RationalField>::affine(Q, support::random_rational(30));
            if (!ds_integral(b, roots, S)) continue;
            Rational fb = f.eval(b.value());
            for (const auto& v : ohasse::support(fb))
                if (v.is_finite() && !s_set.count(v)) CHECK(abs_value(fb, v) >= rq(1));
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("all but one factor stays above C_v") {
    const std::vector<std::vector<const char*>> systems{
        {"x", "x-1", "x+1"}, {"2*x-1", "x", "x-3"}, {"x^2-1", "x-2", "3*x+1"}, {"x", "x-5/2", "4*x+3", "x-7"}};
    std::vector<Place> places = q_places({2, 3, 5, 7});
    for (const auto& sys : systems) {
        std::vector<SplitFactor<RationalField>> fs;
        for (const char* t : sys) fs.push_back(qfactor(t));
        for (const auto& v : places) {
            Rational cv = runge_constant_Cv(fs, v);
            CHECK(cv > rq(0));
            for (int i = 0; i < 300; ++i) {
                Rational x = support::random_rational(200);
                int small = 0;
                for (const auto& f : fs)
                    if (abs_value(f.f.eval(x), v) < cv) ++small;
                CHECK(small <= 1);
            }
        }
    }
}

TEST_CASE("Runge over F_3(t)") {
    RationalFunctionField K(3);
    std::vector<SplitFactor<RationalFunctionField>> f{split_factor(parse_polynomial(K, "x")),
                                                      split_factor(parse_polynomial(K, "x-1")),
                                                      split_factor(parse_polynomial(K, "x-t"))};
    std::vector<Place> S{Place::ff_infinite(3)};
    auto bound = runge_height_bound(f, S);
    REQUIRE(bound.degree_bound);
    auto pts = runge_integral_points(f, S, bound);
    std::vector<ProjPoint<RationalFunctionField>> D{parse_point(K, "0"), parse_point(K, "1"), parse_point(K, "t")};
    std::vector<ProjPoint<RationalFunctionField>> sweep;
    for (const auto& p : enumerate_bounded_height(K, *bound.degree_bound + 1))
        if (ds_integral(p, D, S)) sweep.push_back(p);
    CHECK(sweep == pts);
}
