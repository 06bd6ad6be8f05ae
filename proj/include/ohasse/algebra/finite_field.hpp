#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ohasse/algebra/integer.hpp"

namespace ohasse {

// x mod p for x < 2^64 and p < 2^32 via a precomputed 64-bit reciprocal.
class BarrettReducer {
public:
    BarrettReducer() = default;
    explicit BarrettReducer(std::uint64_t p) : p_(p), m_(~std::uint64_t{0} / p) {}

    std::uint64_t reduce(std::uint64_t x) const {
        auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
        std::uint64_t r = x - q * p_;
        return r >= p_ ? r - p_ : r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
    std::uint64_t modulus() const { return p_; }

private:
    std::uint64_t p_ = 1;
    std::uint64_t m_ = 0;
};

// The finite field F_p[u]/(m(u)) with m monic irreducible of degree k (k = 1
// gives the prime field). Elements are encoded as integers in [0, p^k): the
// base-p digits are the coefficients of the canonical representative, lowest
// degree first. The handle is cheap to copy; the description is shared.
class FiniteField {
public:
    using Element = std::uint64_t;

    static constexpr std::uint64_t kMaxCharacteristic = (1ULL << 31) - 1;

    static FiniteField prime(std::uint64_t p);

    // F_{p^k} modelled on the lexicographically least monic irreducible of degree k.
    static FiniteField extension(std::uint64_t p, unsigned k);

    // F_p[symbol]/(modulus). `modulus` holds coefficients lowest degree first,
    // is monic and must be irreducible (checked).
    static FiniteField quotient(std::uint64_t p, std::vector<std::uint64_t> modulus, char symbol = 't');

    std::uint64_t characteristic() const { return impl_->p; }
    unsigned degree() const { return impl_->k; }
    std::uint64_t size() const { return impl_->q; }
    std::span<const std::uint64_t> modulus() const { return impl_->modulus; }
    char symbol() const { return impl_->symbol; }
    bool is_prime_field() const { return impl_->k == 1; }
    const BarrettReducer& reducer() const { return impl_->barrett; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long long n) const;
    Element from_integer(const Integer& n) const;

    bool is_zero(Element a) const { return a == 0; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    // Coefficients of the representative, lowest first, exactly degree() entries.
    std::vector<std::uint64_t> digits(Element a) const;
    Element from_digits(std::span<const std::uint64_t> digits) const;

    std::string to_string(Element a) const;
    std::string name() const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.impl_ == b.impl_ ||
               (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
    }

private:
    struct Impl {
        std::uint64_t p = 2;
        unsigned k = 1;
        std::uint64_t q = 2;
        std::vector<std::uint64_t> modulus;
        char symbol = 'u';
        BarrettReducer barrett;
    };

    explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static FiniteField make(std::uint64_t p, std::vector<std::uint64_t> modulus, char symbol);

    std::shared_ptr<const Impl> impl_;
};

// Renders a polynomial with coefficients in [0, p), lowest first, as e.g. "t^2+2*t+1".
std::string format_fp_poly(std::span<const std::uint64_t> coeffs, char symbol);

}  // namespace ohasse
