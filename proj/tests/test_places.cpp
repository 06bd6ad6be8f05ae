#include <doctest.h>

#include "ohasse/map/analysis.hpp"
#include "ohasse/places/reduction.hpp"
#include "support.hpp"

using namespace ohasse;

namespace {

RationalField Q;

std::vector<std::string> names(const std::vector<Place>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.to_string());
    return out;
}

// Primes dividing the resultant of the canonical integral forms, by trial division.
std::vector<std::uint64_t> resultant_primes(const RationalMap<RationalField>& m) {
    Integer r = abs(m.resultant().num());
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; r > 1 && p < 100000; ++p)
        if (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(r.get_mpz_t(), p)) r /= static_cast<unsigned long>(p);
        }
    return out;
}

}  // namespace

TEST_CASE("place construction, norms and serialisation") {
    CHECK(Place::q_finite(5).norm() == 5);
    CHECK(Place::q_infinite().norm() == 0);
    CHECK_THROWS(Place::q_finite(6));
    FiniteField f3 = FiniteField::prime(3);
    Place quad = Place::ff_finite(FqPoly(f3, {2, 1, 1}));
    CHECK(quad.norm() == 9);
    CHECK(quad.to_string() == "t^2+t+2@F3");
    CHECK(Place::ff_infinite(3).to_string() == "inf@F3");
    CHECK(Place::ff_infinite(3).norm() == 3);
    CHECK_THROWS(Place::ff_finite(FqPoly(f3, {1, 0, 1}) * FqPoly(f3, {1, 1})));
    for (const char* s : {"5", "inf", "t^2+t+2@F3", "inf@F3", "t@F7", "t+4@F5"})
        CHECK(Place::parse(s).to_string() == s);
    CHECK(quad.residue_field().size() == 9);
    CHECK(Place::ff_infinite(5).residue_field().size() == 5);
    CHECK(Place::q_finite(2) < Place::q_finite(3));
    CHECK(Place::ff_finite(FqPoly(f3, {0, 1})) < Place::ff_infinite(3));
}

TEST_CASE("point reduction") {
    CHECK(reduce_point(parse_point(Q, "1/5"), Place::q_finite(5)).is_infinity());
    CHECK(reduce_point(parse_point(Q, "4"), Place::q_finite(3)).value() == 1);
    CHECK(reduce_point(parse_point(Q, "2/3"), Place::q_finite(5)).value() == 4);
    CHECK(reduce_point(ProjPoint<RationalField>::infinity(Q), Place::q_finite(7)).is_infinity());
    RationalFunctionField K(3);
    FiniteField f3 = K.constants();
    CHECK(reduce_point(parse_point(K, "t^2+1"), Place::ff_finite(FqPoly(f3, {0, 1}))).value() == 1);
    CHECK(reduce_point(parse_point(K, "t"), Place::ff_infinite(3)).is_infinity());
    CHECK(reduce_point(parse_point(K, "(2*t+1)/(t+2)"), Place::ff_infinite(3)).value() == 2);
    CHECK_THROWS_AS(reduce_point(parse_point(Q, "1"), Place::q_infinite()), Unsupported);
    CHECK_THROWS_AS(reduce_point(parse_point(Q, "1"), Place::ff_infinite(3)), DomainMismatch);
}

TEST_CASE("map reduction and good reduction") {
    auto r5 = reduce_map(parse_map(Q, "x^2+1"), Place::q_finite(5));
    CHECK_FALSE(r5.bad);
    CHECK(r5.map->degree() == 2);
    CHECK(reduce_map(parse_map(Q, "x^2+1/3"), Place::q_finite(3)).bad);
    CHECK(reduce_map(parse_map(Q, "(x^2-1)/(2*x)"), Place::q_finite(2)).bad);
    for (std::uint64_t p : prime_sieve(200)) {
        CHECK(has_good_reduction(parse_map(Q, "x^2+1"), Place::q_finite(p)));
        CHECK(has_good_reduction(parse_map(Q, "(x^2-1)/(2*x)"), Place::q_finite(p)) == (p != 2));
        CHECK(has_good_reduction(parse_map(Q, "x^2+1/3"), Place::q_finite(p)) == (p != 3));
    }
    CHECK(names(bad_places(parse_map(Q, "(x^2-1)/(2*x)"))) == std::vector<std::string>{"2"});
    CHECK(names(bad_places(parse_map(Q, "x^2+1/3"))) == std::vector<std::string>{"3"});
    CHECK(bad_places(parse_map(Q, "x^2+1")).empty());
}

TEST_CASE("bad places are the primes of the normalised resultant") {
    for (const char* text : {"(x^2-1)/(2*x)", "x^2+1/3", "(x^2+5)/(3*x-1)", "x^3/10+x", "(x^2+1)/(x^2-x+6)",
                             "(4*x^2-9)/(x+7)", "x^2-29/16"}) {
        auto m = parse_map(Q, text);
        std::vector<std::uint64_t> got;
        for (const auto& v : bad_places(m)) got.push_back(v.prime());
        CAPTURE(text);
        CHECK(got == resultant_primes(m));
        for (std::uint64_t p : prime_sieve(60))
            CHECK(has_good_reduction(m, Place::q_finite(p)) ==
                  (std::find(got.begin(), got.end(), p) == got.end()));
    }
    RationalFunctionField K(3);
    auto m = parse_map(K, "(x^2+1)/(t*x)");
    CHECK(names(bad_places(m, false)) == std::vector<std::string>{"t@F3"});
    CHECK(names(bad_places(m, true)) == std::vector<std::string>{"t@F3", "inf@F3"});
    CHECK(bad_places(parse_map(K, "x^2+t"), false).empty());
    CHECK(names(bad_places(parse_map(K, "x^2+t"), true)) == std::vector<std::string>{"inf@F3"});
}

TEST_CASE("separable reduction") {
    CHECK_FALSE(has_separable_reduction(parse_map(Q, "x^2+1"), Place::q_finite(2)));
    CHECK_FALSE(has_separable_reduction(parse_map(Q, "x^3+1"), Place::q_finite(3)));
    CHECK(has_separable_reduction(parse_map(Q, "x^2+1"), Place::q_finite(5)));
    CHECK_THROWS_AS(has_separable_reduction(parse_map(Q, "x^2+1/3"), Place::q_finite(3)), PreconditionError);
}

TEST_CASE("good but inseparable places are the predicted finite set") {
    // For a polynomial with integral coefficients the reduced Wronskian is
    // f' mod p, which vanishes iff p divides i * a_i for every i.
    for (const char* text : {"x^2+1", "x^3+1", "x^6+2*x^3+5", "x^5+10*x", "x^4+x^2", "x^9+3*x^3"}) {
        auto m = parse_map(Q, text);
        auto f = m.numerator();
        for (std::uint64_t p : prime_sieve(100)) {
            Place v = Place::q_finite(p);
            if (!has_good_reduction(m, v)) continue;
            bool predicted = true;
            for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
                Integer live = f.coeffs()[i].num() * static_cast<unsigned long>(i);
                if (!mpz_divisible_ui_p(live.get_mpz_t(), p)) predicted = false;
            }
            CAPTURE(text);
            CAPTURE(p);
            CHECK(has_separable_reduction(m, v) == !predicted);
        }
    }
}

TEST_CASE("place enumeration") {
    CHECK(names(enumerate_places(Q, 10)) == std::vector<std::string>{"2", "3", "5", "7"});
    RationalFunctionField K(3);
    CHECK(names(enumerate_places(K, 3, false)) == std::vector<std::string>{"t@F3", "t+1@F3", "t+2@F3"});
    CHECK(names(enumerate_places(K, 3, true)) == std::vector<std::string>{"t@F3", "t+1@F3", "t+2@F3", "inf@F3"});
    auto nine = enumerate_places(K, 9, false);
    CHECK(nine.size() == 6);
    CHECK(std::count_if(nine.begin(), nine.end(), [](const Place& v) { return v.norm() == 9; }) == 3);
    CHECK(enumerate_places(K, 3 * 3 * 3 * 3, false).size() == 3 + 3 + 8 + 18);
}

TEST_CASE("reduction commutes with evaluation at good places") {
    const char* maps[] = {"x^2+1", "(x^2+1)/(2*x)", "(3*x^2-1)/(x^2+5*x)", "x^3-x/2+1", "(x^2-2)/(x+3)"};
    auto places = enumerate_places(Q, 60);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        auto m = parse_map(Q, maps[support::uniform(0, 4)]);
        const Place& v = places[static_cast<std::size_t>(support::uniform(0, static_cast<long>(places.size()) - 1))];
        auto red = reduce_map(m, v);
        if (red.bad) continue;
        auto p = support::uniform(0, 20) == 0 ? ProjPoint<RationalField>::infinity(Q)
                                              : ProjPoint<RationalField>::affine(Q, support::random_rational(300));
        CHECK(reduce_point(m.eval(p), v) == red.map->eval(reduce_point(p, v)));
        ++checked;
    }
    CHECK(checked > 500);
    RationalFunctionField K(3);
    auto fm = parse_map(K, "(x^2+t)/(x+1)");
    for (const auto& v : enumerate_places(K, 27, true)) {
        auto red = reduce_map(fm, v);
        if (red.bad) continue;
        for (int i = 0; i < 30; ++i) {
            auto p = ProjPoint<RationalFunctionField>::affine(K, support::random_ratfunc(K, 3));
            CHECK(reduce_point(fm.eval(p), v) == red.map->eval(reduce_point(p, v)));
        }
    }
}
