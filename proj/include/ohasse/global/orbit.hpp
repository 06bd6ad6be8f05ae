#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ohasse/global/height.hpp"

namespace ohasse {

struct OrbitClass {
    enum class Kind { Periodic, Preperiodic, Wandering };

    Kind kind;
    std::uint64_t tail = 0;
    std::uint64_t period = 0;
    // Wandering only: first index at which escape was certified, and the
    // height there.
    std::uint64_t escape_index = 0;
    Integer escape_norm = 0;

    static OrbitClass periodic(std::uint64_t n) { return {Kind::Periodic, 0, n}; }
    static OrbitClass preperiodic(std::uint64_t tail, std::uint64_t n) { return {Kind::Preperiodic, tail, n}; }
    static OrbitClass wandering(std::uint64_t index, Integer norm) {
        return {Kind::Wandering, 0, 0, index, std::move(norm)};
    }

    bool is_periodic() const { return kind == Kind::Periodic; }
    bool is_wandering() const { return kind == Kind::Wandering; }
    std::string to_string() const {
        switch (kind) {
            case Kind::Periodic:
                return "periodic(period=" + std::to_string(period) + ")";
            case Kind::Preperiodic:
                return "preperiodic(tail=" + std::to_string(tail) + ",period=" + std::to_string(period) + ")";
            case Kind::Wandering:
                return "wandering(escape_index=" + std::to_string(escape_index) + ",height=" + escape_norm.get_str() +
                       ")";
        }
        return {};
    }
};

namespace detail {
// H^(d-1) > lower: from here on heights grow strictly.
inline bool in_escape_regime(const Height& h, int d, const Rational& lower) {
    Integer hp;
    mpz_pow_ui(hp.get_mpz_t(), h.norm.get_mpz_t(), static_cast<unsigned long>(d - 1));
    return Rational(hp) > lower;
}
}  // namespace detail

template <Field F>
OrbitClass classify_orbit(const RationalMap<F>& m, const ProjPoint<F>& p) {
    if (m.degree() < 2) throw Unsupported("orbit classification needs degree >= 2");
    const Rational lower = height_machine_constants(m).lower;
    std::map<ProjPoint<F>, std::uint64_t> seen;
    ProjPoint<F> cur = p;
    std::optional<Height> prev;
    for (std::uint64_t n = 0;; ++n) {
        auto [it, fresh] = seen.emplace(cur, n);
        if (!fresh) {
            std::uint64_t first = it->second;
            return first == 0 ? OrbitClass::periodic(n) : OrbitClass::preperiodic(first, n - first);
        }
        Height h = weil_height(cur);
        if (prev && h > *prev && detail::in_escape_regime(h, m.degree(), lower))
            return OrbitClass::wandering(n, h.norm);
        prev = h;
        cur = m.eval(cur);
    }
}

// Least n >= 1 with phi^n(alpha) = beta.
template <Field F>
std::optional<std::uint64_t> orbit_member(const RationalMap<F>& m, const ProjPoint<F>& alpha, const ProjPoint<F>& beta) {
    if (m.degree() < 2) throw Unsupported("orbit membership needs degree >= 2");
    const Rational lower = height_machine_constants(m).lower;
    const Height hb = weil_height(beta);
    std::map<ProjPoint<F>, std::uint64_t> seen;
    ProjPoint<F> cur = alpha;
    for (std::uint64_t n = 0;; ++n) {
        if (n >= 1 && cur == beta) return n;
        if (!seen.emplace(cur, n).second) return std::nullopt;
        Height h = weil_height(cur);
        if (h > hb && detail::in_escape_regime(h, m.degree(), lower)) return std::nullopt;
        cur = m.eval(cur);
    }
}

}  // namespace ohasse
