#include "ohasse/finite/finite_map.hpp"

namespace ohasse {

FiniteMap::FiniteMap(const RationalMap<FiniteField>& m)
    : field_(m.field()),
      q_(m.field().size()),
      prime_(m.field().is_prime_field()),
      polynomial_(m.is_polynomial()),
      red_(m.field().reducer()),
      a_(m.phi1()),
      b_(m.phi2()) {
    auto [x, y] = m.eval_forms(ResiduePoint::infinity(field_));
    at_infinity_ = field_.is_zero(y) ? q_ : field_.div(x, y);
    if (polynomial_) {
        auto inv = field_.inv(b_.front());
        for (auto& c : a_) c = field_.mul(c, inv);
        for (std::size_t i = a_.size(); i-- > 0;)
            if (a_[i] != 0) terms_.emplace_back(static_cast<unsigned>(i), a_[i]);
    }
}

std::uint64_t FiniteMap::step_prime(std::uint64_t x) const {
    if (x == q_) return at_infinity_;
    const std::size_t n = a_.size();
    std::uint64_t fa = a_[n - 1];
    if (polynomial_) {
        // Sparse Horner: gaps between exponents by square-and-multiply.
        auto pow = [this](std::uint64_t b, unsigned e) {
            std::uint64_t r = b;
            for (unsigned bit = 31 - static_cast<unsigned>(__builtin_clz(e)); bit-- > 0;) {
                r = red_.mul(r, r);
                if ((e >> bit) & 1u) r = red_.mul(r, b);
            }
            return r;
        };
        std::uint64_t acc = terms_[0].second;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            acc = red_.reduce(red_.mul(acc, pow(x, terms_[i - 1].first - terms_[i].first)) + terms_[i].second);
        unsigned last = terms_.back().first;
        return last == 0 ? acc : red_.mul(acc, pow(x, last));
    }
    std::uint64_t fb = b_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        fa = red_.reduce(fa * x + a_[i]);
        fb = red_.reduce(fb * x + b_[i]);
    }
    if (fb == 0) return q_;
    return field_.mul(fa, field_.inv(fb));
}

std::uint64_t FiniteMap::step_generic(std::uint64_t x) const {
    if (x == q_) return at_infinity_;
    const std::size_t n = a_.size();
    std::uint64_t fa = a_[n - 1], fb = b_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        fa = field_.add(field_.mul(fa, x), a_[i]);
        if (!polynomial_) fb = field_.add(field_.mul(fb, x), b_[i]);
    }
    if (polynomial_) return fa;
    if (fb == 0) return q_;
    return field_.div(fa, fb);
}

RhoShape rho_shape(const RationalMap<FiniteField>& m, const ResiduePoint& p) {
    if (!(p.field() == m.field())) throw DomainMismatch("point and map live over different fields");
    FiniteMap fm(m);
    return rho_shape(fm, fm.index(p));
}

bool is_permutation(const FiniteMap& m) {
    std::vector<bool> hit(m.point_count(), false);
    for (std::uint64_t x = 0; x < m.point_count(); ++x) {
        std::uint64_t y = m.step(x);
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

bool is_permutation(const RationalMap<FiniteField>& m) { return is_permutation(FiniteMap(m)); }

GraphStats functional_graph_stats(const FiniteMap& m, std::uint64_t cap) {
    const std::uint64_t n = m.point_count();
    if (n > cap) throw Unsupported("functional graph on " + std::to_string(n) + " points exceeds the cap of " +
                                   std::to_string(cap));
    // 0 = unvisited; otherwise the id of the walk that first reached the point.
    std::vector<std::uint64_t> walk(n, 0);
    GraphStats stats{0, 0};
    std::uint64_t id = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
        if (walk[s] != 0) continue;
        ++id;
        std::uint64_t x = s;
        while (walk[x] == 0) {
            walk[x] = id;
            x = m.step(x);
        }
        if (walk[x] != id) continue;
        // The walk closed on itself: a new cycle, hence a new component.
        ++stats.components;
        std::uint64_t y = x;
        do {
            ++stats.periodic_points;
            y = m.step(y);
        } while (y != x);
    }
    return stats;
}

GraphStats functional_graph_stats(const RationalMap<FiniteField>& m, std::uint64_t cap) {
    return functional_graph_stats(FiniteMap(m), cap);
}

}  // namespace ohasse
