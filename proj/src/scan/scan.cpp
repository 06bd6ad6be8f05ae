#include "ohasse/scan/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "ohasse/algebra/function_field.hpp"
#include "ohasse/algebra/rational_field.hpp"

namespace ohasse {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes:
            return "yes";
        case Verdict::No:
            return "no";
        case Verdict::Unknown:
            return "unknown";
    }
    return {};
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "yes") return Verdict::Yes;
    if (s == "no") return Verdict::No;
    if (s == "unknown") return Verdict::Unknown;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string to_string(ReportMode m) {
    switch (m) {
        case ReportMode::Reduced:
            return "reduced";
        case ReportMode::Orbit:
            return "orbit";
        case ReportMode::OrbitTruncated:
            return "orbit-truncated";
        case ReportMode::Error:
            return "error";
    }
    return {};
}

ReportMode mode_from_string(const std::string& s) {
    if (s == "reduced") return ReportMode::Reduced;
    if (s == "orbit") return ReportMode::Orbit;
    if (s == "orbit-truncated") return ReportMode::OrbitTruncated;
    if (s == "error") return ReportMode::Error;
    throw std::invalid_argument("unknown report mode '" + s + "'");
}

std::string to_string(HasseVerdict::Kind k) {
    switch (k) {
        case HasseVerdict::Kind::ConsistentWithPeriodic:
            return "consistent-with-periodic";
        case HasseVerdict::Kind::WanderingWitnessed:
            return "wandering-witnessed";
        case HasseVerdict::Kind::WanderingUnwitnessed:
            return "wandering-unwitnessed-at-bound";
        case HasseVerdict::Kind::PreperiodicWitnessed:
            return "preperiodic-witnessed";
        case HasseVerdict::Kind::PreperiodicUnwitnessed:
            return "preperiodic-unwitnessed-at-bound";
    }
    return {};
}

unsigned default_workers() {
    if (const char* env = std::getenv("ORBIT_HASSE_WORKERS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1 && n <= 1024) return static_cast<unsigned>(n);
    }
    return 1;
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, n); ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

std::vector<Place> scan_places(const RationalField& f, const Integer& bound, const ScanOptions&) {
    return enumerate_places(f, bound);
}
std::vector<Place> scan_places(const RationalFunctionField& f, const Integer& bound, const ScanOptions& o) {
    return enumerate_places(f, bound, o.include_ff_infinity);
}

std::size_t point_bits(const ProjPoint<RationalField>& p) {
    auto [a, b] = integral_coords(p);
    return bit_length(a) + bit_length(b);
}
std::size_t point_bits(const ProjPoint<RationalFunctionField>& p) {
    auto [a, b] = integral_coords(p);
    std::size_t per = bit_length(Integer(static_cast<unsigned long>(p.field().characteristic())));
    return static_cast<std::size_t>(a.degree() + b.degree() + 2) * per;
}

// The global forward orbit of alpha: complete when finite (indices 0..tail +
// period - 1), otherwise a prefix cut at `length` or at the bit budget.
template <Field F>
struct GlobalOrbit {
    bool finite = false;
    std::uint64_t tail = 0;
    std::uint64_t period = 0;
    std::vector<ProjPoint<F>> points;

    // phi^n(alpha) for n within the known range.
    const ProjPoint<F>* at(std::uint64_t n) const {
        if (finite) {
            if (n >= points.size()) n = tail + (n - tail) % period;
            return &points[n];
        }
        return n < points.size() ? &points[n] : nullptr;
    }
    std::uint64_t decided_length(std::uint64_t n_max) const { return finite ? tail + period : n_max; }
};

template <Field F>
GlobalOrbit<F> global_orbit(const RationalMap<F>& m, const ProjPoint<F>& alpha, std::uint64_t length,
                            std::size_t bit_budget) {
    GlobalOrbit<F> g;
    OrbitClass cls = classify_orbit(m, alpha);
    g.points.push_back(alpha);
    if (!cls.is_wandering()) {
        g.finite = true;
        g.tail = cls.tail;
        g.period = cls.period;
        while (g.points.size() < g.tail + g.period) g.points.push_back(m.eval(g.points.back()));
        return g;
    }
    while (g.points.size() <= length) {
        ProjPoint<F> next = m.eval(g.points.back());
        if (point_bits(next) > bit_budget) break;
        g.points.push_back(std::move(next));
    }
    return g;
}

std::uint64_t default_n_max(const Place& v, const ScanOptions& o) {
    if (o.n_max) return *o.n_max;
    Integer n = 2 * v.norm() + 16;
    return n.fits_ulong_p() ? n.get_ui() : ~std::uint64_t{0};
}

template <Field F>
void decide_bad_place(PlaceReport& r, const GlobalOrbit<F>& orbit, std::uint64_t n_max) {
    ResiduePoint r0 = reduce_point(orbit.points[0], r.place);
    const std::uint64_t limit = orbit.finite ? orbit.decided_length(n_max) : n_max;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const ProjPoint<F>* p = orbit.at(n);
        if (!p) break;
        if (reduce_point(*p, r.place) == r0) {
            r.periodic = Verdict::Yes;
            r.mode = orbit.finite ? ReportMode::Orbit : ReportMode::OrbitTruncated;
            return;
        }
    }
    r.periodic = orbit.finite ? Verdict::No : Verdict::Unknown;
    r.mode = orbit.finite ? ReportMode::Orbit : ReportMode::OrbitTruncated;
}

}  // namespace

template <Field F>
std::vector<PlaceReport> scan_periodic_reduction(const RationalMap<F>& m, const ProjPoint<F>& alpha,
                                                 const Integer& norm_bound, const ScanOptions& options) {
    if (m.degree() < 2) throw Unsupported("periodic reduction scans need degree >= 2");
    std::vector<Place> places = scan_places(m.field(), norm_bound, options);
    std::vector<PlaceReport> rows(places.size());
    for (std::size_t i = 0; i < places.size(); ++i) {
        rows[i].place = places[i];
        rows[i].norm = places[i].norm();
    }
    parallel_for(places.size(), options.workers, [&](std::size_t i) {
        PlaceReport& r = rows[i];
        try {
            MapReduction red = reduce_map(m, r.place);
            r.good = !red.bad;
            if (!r.good) return;
            FiniteMap fm(*red.map);
            r.separable = is_separable(*red.map);
            r.rho = rho_shape(fm, fm.index(reduce_point(alpha, r.place)));
            r.periodic = r.rho->periodic() ? Verdict::Yes : Verdict::No;
            r.mode = ReportMode::Reduced;
        } catch (const std::exception& e) {
            r.mode = ReportMode::Error;
            r.error = e.what();
        }
    });

    std::uint64_t longest = 0;
    for (const auto& r : rows)
        if (!r.good && r.mode != ReportMode::Error) longest = std::max(longest, default_n_max(r.place, options));
    if (longest == 0) return rows;
    GlobalOrbit<F> orbit = global_orbit(m, alpha, longest, options.bit_budget);
    for (auto& r : rows) {
        if (r.good || r.mode == ReportMode::Error) continue;
        try {
            decide_bad_place(r, orbit, default_n_max(r.place, options));
        } catch (const std::exception& e) {
            r.mode = ReportMode::Error;
            r.error = e.what();
        }
    }
    return rows;
}

DensityReport estimate_density(const std::vector<PlaceReport>& reports,
                               const std::function<Verdict(const PlaceReport&)>& predicate, BadPlacePolicy policy) {
    if (reports.empty()) throw std::invalid_argument("density of an empty place list");
    DensityReport d;
    d.policy = policy;
    d.bound = 0;
    for (const auto& r : reports) {
        if (d.bound < r.norm) d.bound = r.norm;
        if (!r.good) ++d.bad;
        switch (predicate(r)) {
            case Verdict::Yes:
                ++d.periodic;
                ++d.total;
                break;
            case Verdict::No:
                ++d.non_periodic;
                ++d.total;
                break;
            case Verdict::Unknown:
                ++d.unknown;
                if (policy == BadPlacePolicy::Pessimistic) ++d.total;
                break;
        }
    }
    d.density = d.total == 0 ? Rational(0)
                             : Rational(Integer(static_cast<unsigned long>(d.periodic)),
                                        Integer(static_cast<unsigned long>(d.total)));
    return d;
}

DensityReport estimate_density(const std::vector<PlaceReport>& reports, BadPlacePolicy policy) {
    return estimate_density(reports, [](const PlaceReport& r) { return r.periodic; }, policy);
}

std::vector<DensityReport> density_series(const std::vector<PlaceReport>& reports, const std::vector<Integer>& bounds,
                                          BadPlacePolicy policy) {
    std::vector<DensityReport> out;
    for (const auto& b : bounds) {
        std::vector<PlaceReport> below;
        for (const auto& r : reports)
            if (r.norm <= b) below.push_back(r);
        if (below.empty()) continue;
        DensityReport d = estimate_density(below, policy);
        d.bound = b;
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Integer> decade_bounds(const Integer& bound) {
    std::vector<Integer> out;
    for (Integer b = 10; b < bound; b *= 10) out.push_back(b);
    out.push_back(bound);
    return out;
}

template <Field F>
HasseVerdict hasse_verdict(const RationalMap<F>& m, const ProjPoint<F>& alpha, const Integer& norm_bound,
                           const ScanOptions& options) {
    HasseVerdict h{classify_orbit(m, alpha), scan_periodic_reduction(m, alpha, norm_bound, options), {}, {}, {}};
    h.density = estimate_density(h.rows);
    h.density.bound = norm_bound;
    for (const auto& r : h.rows)
        if (r.periodic == Verdict::No) h.witnesses.push_back(r.place);
    switch (h.global.kind) {
        case OrbitClass::Kind::Periodic:
            if (!h.witnesses.empty())
                throw InvariantViolation("globally periodic point " + alpha.to_string() + " under " + m.to_string() +
                                         " has non-periodic reduction at " + h.witnesses.front().to_string() +
                                         "; reduction commutes with the map, so this cannot happen");
            h.kind = HasseVerdict::Kind::ConsistentWithPeriodic;
            break;
        case OrbitClass::Kind::Preperiodic:
            h.kind = h.witnesses.empty() ? HasseVerdict::Kind::PreperiodicUnwitnessed
                                         : HasseVerdict::Kind::PreperiodicWitnessed;
            break;
        case OrbitClass::Kind::Wandering:
            h.kind = h.witnesses.empty() ? HasseVerdict::Kind::WanderingUnwitnessed
                                         : HasseVerdict::Kind::WanderingWitnessed;
            break;
    }
    return h;
}

CounterexampleReport counterexample_family(std::uint64_t q, const Integer& norm_bound, const ScanOptions& options) {
    if (q < 3 || !is_prime_u64(q)) throw PreconditionError("the family x^q + 1 needs q an odd prime");
    RationalField Q;
    std::vector<Rational> c(q + 1, Rational(0));
    c[0] = 1;
    c[q] = 1;
    auto m = RationalMap<RationalField>::from_affine(Poly<RationalField>(Q, c),
                                                     Poly<RationalField>::constant(Q, Q.one()));
    auto alpha = ProjPoint<RationalField>::affine(Q, Rational(0));
    CounterexampleReport rep{q, m, scan_periodic_reduction(m, alpha, norm_bound, options), {}, {}, {}, {}};
    auto in_family = [q](const PlaceReport& r) { return r.place.prime() % q != 1; };
    rep.family_density =
        estimate_density(rep.rows, [&](const PlaceReport& r) { return in_family(r) ? Verdict::Yes : Verdict::No; });
    rep.family_density.bound = norm_bound;
    rep.periodic_density = estimate_density(rep.rows);
    rep.periodic_density.bound = norm_bound;
    rep.expected_density = Rational(Integer(static_cast<unsigned long>(q - 2)), Integer(static_cast<unsigned long>(q - 1)));
    for (const auto& r : rep.rows)
        if (r.good && in_family(r) && r.periodic != Verdict::Yes) rep.violations.push_back(r.place);
    return rep;
}

template <Field F>
std::vector<IntersectionRow> intersection_scan(const RationalMap<F>& m, const ProjPoint<F>& alpha,
                                               const ProjPoint<F>& beta, const Integer& norm_bound,
                                               std::uint64_t n_max, const ScanOptions& options) {
    if (m.degree() < 2) throw Unsupported("intersection scans need degree >= 2");
    std::vector<Place> places = scan_places(m.field(), norm_bound, options);
    std::vector<IntersectionRow> rows(places.size());
    for (std::size_t i = 0; i < places.size(); ++i) {
        rows[i].place = places[i];
        rows[i].norm = places[i].norm();
    }
    parallel_for(places.size(), options.workers, [&](std::size_t i) {
        IntersectionRow& r = rows[i];
        MapReduction red = reduce_map(m, r.place);
        r.good = !red.bad;
        if (!r.good) return;
        FiniteMap fm(*red.map);
        std::uint64_t a = fm.index(reduce_point(alpha, r.place));
        std::uint64_t b = fm.index(reduce_point(beta, r.place));
        RhoShape rho = rho_shape(fm, a);
        r.hit = Verdict::No;
        for (std::uint64_t n = 1; n <= rho.tail + rho.cycle; ++n) {
            a = fm.step(a);
            if (a == b) {
                r.hit = Verdict::Yes;
                r.witness = n;
                break;
            }
        }
    });
    bool any_bad = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.good; });
    if (!any_bad) return rows;
    GlobalOrbit<F> orbit = global_orbit(m, alpha, n_max, options.bit_budget);
    for (auto& r : rows) {
        if (r.good) continue;
        ResiduePoint target = reduce_point(beta, r.place);
        const std::uint64_t limit = orbit.decided_length(n_max);
        r.hit = orbit.finite ? Verdict::No : Verdict::Unknown;
        for (std::uint64_t n = 1; n <= limit; ++n) {
            const ProjPoint<F>* p = orbit.at(n);
            if (!p) break;
            if (reduce_point(*p, r.place) == target) {
                r.hit = Verdict::Yes;
                r.witness = n;
                break;
            }
        }
    }
    return rows;
}

std::vector<Question1Row> question1_explore(unsigned d, const std::vector<Rational>& c_list, const Rational& alpha,
                                            const Integer& norm_bound, const ScanOptions& options) {
    if (d < 2) throw PreconditionError("x^d + c needs d >= 2");
    RationalField Q;
    Rational threshold = Rational(1) - Rational(Integer(1), Integer(static_cast<unsigned long>(euler_phi(d))));
    std::vector<Question1Row> out;
    for (const auto& c : c_list) {
        std::vector<Rational> coeffs(d + 1, Rational(0));
        coeffs[0] = c;
        coeffs[d] = 1;
        auto m = RationalMap<RationalField>::from_affine(Poly<RationalField>(Q, coeffs),
                                                         Poly<RationalField>::constant(Q, Q.one()));
        HasseVerdict h = hasse_verdict(m, ProjPoint<RationalField>::affine(Q, alpha), norm_bound, options);
        out.push_back({c, h.global, h.kind, h.density, threshold});
    }
    return out;
}

template std::vector<PlaceReport> scan_periodic_reduction(const RationalMap<RationalField>&,
                                                          const ProjPoint<RationalField>&, const Integer&,
                                                          const ScanOptions&);
template std::vector<PlaceReport> scan_periodic_reduction(const RationalMap<RationalFunctionField>&,
                                                          const ProjPoint<RationalFunctionField>&, const Integer&,
                                                          const ScanOptions&);
template HasseVerdict hasse_verdict(const RationalMap<RationalField>&, const ProjPoint<RationalField>&, const Integer&,
                                    const ScanOptions&);
template HasseVerdict hasse_verdict(const RationalMap<RationalFunctionField>&, const ProjPoint<RationalFunctionField>&,
                                    const Integer&, const ScanOptions&);
template std::vector<IntersectionRow> intersection_scan(const RationalMap<RationalField>&,
                                                        const ProjPoint<RationalField>&,
                                                        const ProjPoint<RationalField>&, const Integer&,
                                                        std::uint64_t, const ScanOptions&);
template std::vector<IntersectionRow> intersection_scan(const RationalMap<RationalFunctionField>&,
                                                        const ProjPoint<RationalFunctionField>&,
                                                        const ProjPoint<RationalFunctionField>&, const Integer&,
                                                        std::uint64_t, const ScanOptions&);

}  // namespace ohasse
