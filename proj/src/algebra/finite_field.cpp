#include "ohasse/algebra/finite_field.hpp"

#include <stdexcept>

#include "ohasse/algebra/fp_poly.hpp"
#include "ohasse/errors.hpp"

namespace ohasse {

FiniteField FiniteField::make(std::uint64_t p, std::vector<std::uint64_t> modulus, char symbol) {
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = static_cast<unsigned>(modulus.size() - 1);
    impl->modulus = std::move(modulus);
    impl->symbol = symbol;
    impl->barrett = BarrettReducer(p);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < impl->k; ++i) {
        if (q > (1ULL << 62) / p) throw Unsupported("finite field of size " + std::to_string(p) + "^" +
                                                    std::to_string(impl->k) + " exceeds 2^62");
        q *= p;
    }
    impl->q = q;
    return FiniteField(std::move(impl));
}

FiniteField FiniteField::prime(std::uint64_t p) {
    if (p > kMaxCharacteristic) throw Unsupported("characteristic " + std::to_string(p) + " above 2^31");
    if (!is_prime_u64(p)) throw std::invalid_argument("FiniteField: " + std::to_string(p) + " is not prime");
    return make(p, {0, 1}, 'u');
}

FiniteField FiniteField::extension(std::uint64_t p, unsigned k) {
    if (k == 0) throw std::invalid_argument("FiniteField: extension degree must be >= 1");
    FiniteField base = prime(p);
    if (k == 1) return base;
    for (const auto& m : enumerate_monic(base, k)) {
        if (is_irreducible(m)) return make(p, fq_coeffs(m), 'u');
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable: one exists for each k
}

FiniteField FiniteField::quotient(std::uint64_t p, std::vector<std::uint64_t> modulus, char symbol) {
    FiniteField base = prime(p);
    FqPoly m = fq_poly(base, modulus);
    if (m.degree() < 1 || !m.is_monic()) throw NormalizationError("FiniteField: modulus must be monic of degree >= 1");
    if (!is_irreducible(m)) throw std::invalid_argument("FiniteField: modulus " + m.to_string(symbol) +
                                                        " is reducible");
    return make(p, fq_coeffs(m), symbol);
}

FiniteField::Element FiniteField::from_int(long long n) const {
    const auto p = static_cast<long long>(impl_->p);
    long long r = n % p;
    if (r < 0) r += p;
    return static_cast<Element>(r);
}

FiniteField::Element FiniteField::from_integer(const Integer& n) const {
    Integer r = n % static_cast<unsigned long>(impl_->p);
    if (r < 0) r += static_cast<unsigned long>(impl_->p);
    return r.get_ui();
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
    const std::uint64_t p = impl_->p;
    if (impl_->k == 1) {
        Element s = a + b;
        return s >= p ? s - p : s;
    }
    Element out = 0, scale = 1;
    while (a != 0 || b != 0) {
        std::uint64_t d = a % p + b % p;
        if (d >= p) d -= p;
        out += d * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
    const std::uint64_t p = impl_->p;
    if (impl_->k == 1) return a == 0 ? 0 : p - a;
    Element out = 0, scale = 1;
    while (a != 0) {
        std::uint64_t d = a % p;
        out += (d == 0 ? 0 : p - d) * scale;
        scale *= p;
        a /= p;
    }
    return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const {
    const Impl& f = *impl_;
    if (f.k == 1) return f.barrett.mul(a, b);
    if (a == 0 || b == 0) return 0;
    const unsigned k = f.k;
    std::vector<std::uint64_t> da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j) prod[i + j] = f.barrett.reduce(prod[i + j] + da[i] * db[j]);
    }
    for (unsigned i = 2 * k - 1; i-- > k;) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        for (unsigned j = 0; j < k; ++j) {
            std::uint64_t sub = f.barrett.mul(c, f.modulus[j]);
            prod[i - k + j] = prod[i - k + j] >= sub ? prod[i - k + j] - sub : prod[i - k + j] + f.p - sub;
        }
        prod[i] = 0;
    }
    return from_digits(std::span<const std::uint64_t>(prod.data(), k));
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
    Element result = 1;
    while (e > 0) {
        if (e & 1U) result = mul(result, a);
        e >>= 1U;
        if (e > 0) a = mul(a, a);
    }
    return result;
}

FiniteField::Element FiniteField::inv(Element a) const {
    if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
    if (impl_->k == 1) {
        // extended Euclid on machine words
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(impl_->p), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(impl_->p);
        return static_cast<Element>(t);
    }
    return pow(a, impl_->q - 2);
}

std::vector<std::uint64_t> FiniteField::digits(Element a) const {
    std::vector<std::uint64_t> d(impl_->k, 0);
    for (unsigned i = 0; i < impl_->k && a != 0; ++i) {
        d[i] = a % impl_->p;
        a /= impl_->p;
    }
    return d;
}

FiniteField::Element FiniteField::from_digits(std::span<const std::uint64_t> digits) const {
    Element out = 0;
    for (std::size_t i = digits.size(); i-- > 0;) out = out * impl_->p + digits[i] % impl_->p;
    return out;
}

std::string FiniteField::to_string(Element a) const {
    if (impl_->k == 1) return std::to_string(a);
    return format_fp_poly(digits(a), impl_->symbol);
}

std::string FiniteField::name() const {
    std::string n = "F" + std::to_string(impl_->p);
    if (impl_->k == 1) return n;
    return n + "[" + std::string(1, impl_->symbol) + "]/(" + format_fp_poly(impl_->modulus, impl_->symbol) + ")";
}

std::string format_fp_poly(std::span<const std::uint64_t> coeffs, char symbol) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        std::uint64_t c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += symbol;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace ohasse
