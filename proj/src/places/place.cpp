#include "ohasse/places/place.hpp"

#include <algorithm>
#include <stdexcept>

#include "ohasse/algebra/function_field.hpp"
#include "ohasse/algebra/rational_field.hpp"
#include "ohasse/errors.hpp"
#include "ohasse/map/parser.hpp"

namespace ohasse {

Place Place::q_finite(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Place: " + std::to_string(p) + " is not prime");
    return Place(Kind::QFinite, p, std::nullopt);
}

Place Place::q_infinite() { return Place(Kind::QInfinite, 0, std::nullopt); }

Place Place::ff_finite(const FqPoly& pi) {
    const FiniteField& k = pi.field();
    if (!k.is_prime_field()) throw DomainMismatch("Place: pi must have coefficients in a prime field");
    if (pi.degree() < 1 || !pi.is_monic()) throw NormalizationError("Place: pi must be monic of degree >= 1");
    if (!is_irreducible(pi)) throw std::invalid_argument("Place: " + pi.to_string('t') + " is reducible");
    return Place(Kind::FFFinite, k.characteristic(), pi);
}

Place Place::ff_infinite(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Place: " + std::to_string(p) + " is not prime");
    return Place(Kind::FFInfinite, p, std::nullopt);
}

Place Place::parse(std::string_view text) {
    auto at = text.find('@');
    if (at == std::string_view::npos) {
        if (text == "inf") return q_infinite();
        if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
            throw ParseError("expected a prime, 'inf', or 'poly@Fp'", 0);
        return q_finite(std::stoull(std::string(text)));
    }
    std::string_view field = text.substr(at + 1), body = text.substr(0, at);
    if (field.size() < 2 || field[0] != 'F' || field.find_first_not_of("0123456789", 1) != std::string_view::npos)
        throw ParseError("expected a field name like F3", at + 1);
    std::uint64_t p = std::stoull(std::string(field.substr(1)));
    if (body == "inf") return ff_infinite(p);
    RationalFunctionField K(p);
    RatFunc v = parse_element(K, body);
    if (v.den.degree() != 0) throw ParseError("a finite place is named by a polynomial in t", 0);
    return ff_finite(v.num);
}

Integer Place::norm() const {
    switch (kind_) {
        case Kind::QFinite:
        case Kind::FFInfinite:
            return Integer(static_cast<unsigned long>(p_));
        case Kind::QInfinite:
            return 0;
        case Kind::FFFinite: {
            Integer n;
            mpz_ui_pow_ui(n.get_mpz_t(), p_, static_cast<unsigned long>(pi_->degree()));
            return n;
        }
    }
    return 0;
}

FiniteField Place::residue_field() const {
    switch (kind_) {
        case Kind::QFinite:
        case Kind::FFInfinite:
            return FiniteField::prime(p_);
        case Kind::FFFinite:
            if (pi_->degree() == 1) return FiniteField::prime(p_);
            return FiniteField::quotient(p_, fq_coeffs(*pi_), 't');
        case Kind::QInfinite:
            break;
    }
    throw Unsupported("the archimedean place has no residue field");
}

std::string Place::to_string() const {
    switch (kind_) {
        case Kind::QFinite:
            return std::to_string(p_);
        case Kind::QInfinite:
            return "inf";
        case Kind::FFFinite:
            return format_fp_poly(fq_coeffs(*pi_), 't') + "@F" + std::to_string(p_);
        case Kind::FFInfinite:
            return "inf@F" + std::to_string(p_);
    }
    return {};
}

bool operator==(const Place& a, const Place& b) {
    if (a.kind_ != b.kind_ || a.p_ != b.p_) return false;
    return a.kind_ != Place::Kind::FFFinite || *a.pi_ == *b.pi_;
}

bool operator<(const Place& a, const Place& b) {
    Integer na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    if (a.is_finite() != b.is_finite()) return a.is_finite();
    if (a.kind_ == Place::Kind::FFFinite && b.kind_ == Place::Kind::FFFinite) return *a.pi_ < *b.pi_;
    return false;
}

std::vector<Place> enumerate_places(const RationalField&, const Integer& bound) {
    if (bound < 2) throw std::invalid_argument("enumerate_places: bound must be >= 2");
    std::vector<Place> out;
    for (auto p : prime_sieve(to_u64(bound))) out.push_back(Place::q_finite(p));
    return out;
}

std::vector<Place> enumerate_places(const RationalFunctionField& field, const Integer& bound, bool include_infinite) {
    if (bound < 2) throw std::invalid_argument("enumerate_places: bound must be >= 2");
    const std::uint64_t p = field.characteristic();
    unsigned max_deg = 0;
    for (Integer n = p; n <= bound; n *= p) ++max_deg;
    std::vector<Place> out;
    if (max_deg >= 1)
        for (const auto& pi : enumerate_monic_irreducibles(p, max_deg)) out.push_back(Place::ff_finite(pi));
    if (include_infinite && bound >= p) out.push_back(Place::ff_infinite(p));
    std::stable_sort(out.begin(), out.end());
    return out;
}

}  // namespace ohasse
