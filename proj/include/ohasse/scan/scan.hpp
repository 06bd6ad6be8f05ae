#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ohasse/finite/finite_map.hpp"
#include "ohasse/global/orbit.hpp"
#include "ohasse/places/reduction.hpp"

namespace ohasse {

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// How a report row was decided: "reduced" runs rho on the reduced map (good
// places); "orbit" compares reductions of a complete global orbit (bad places,
// finite orbit, exact); "orbit-truncated" compares a finite orbit prefix (bad
// places, wandering orbit); "error" records a per-place failure.
enum class ReportMode { Reduced, Orbit, OrbitTruncated, Error };
std::string to_string(ReportMode m);
ReportMode mode_from_string(const std::string& s);

struct PlaceReport {
    Place place;
    Integer norm;
    bool good = false;
    std::optional<bool> separable;
    std::optional<RhoShape> rho;
    Verdict periodic = Verdict::Unknown;
    ReportMode mode = ReportMode::Reduced;
    std::string error;

    friend bool operator==(const PlaceReport&, const PlaceReport&) = default;
};

inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 15;

struct ScanOptions {
    unsigned workers = 1;
    bool include_ff_infinity = false;
    // Bad-place orbit prefix length; default 2 * N_v + 16 per place.
    std::optional<std::uint64_t> n_max;
    // A wandering orbit prefix stops once a point needs more bits than this.
    std::size_t bit_budget = kDefaultBitBudget;
};

// Worker count from ORBIT_HASSE_WORKERS, else 1.
unsigned default_workers();

// Runs fn(i) for i in [0, n) on up to `workers` threads. Each index is handled
// exactly once; callers write results into slot i, so output order never
// depends on scheduling.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

template <Field F>
std::vector<PlaceReport> scan_periodic_reduction(const RationalMap<F>& m, const ProjPoint<F>& alpha,
                                                 const Integer& norm_bound, const ScanOptions& options = {});

enum class BadPlacePolicy { Exclude, Pessimistic };

struct DensityReport {
    Integer bound;
    std::uint64_t total = 0;
    std::uint64_t periodic = 0;
    std::uint64_t non_periodic = 0;
    std::uint64_t bad = 0;
    std::uint64_t unknown = 0;
    Rational density;
    BadPlacePolicy policy = BadPlacePolicy::Exclude;

    std::string decimal() const { return density.to_decimal(12); }
    friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

// predicate: Yes counts in numerator and denominator, No in the denominator,
// Unknown is dropped (Exclude) or counted as a failure (Pessimistic).
DensityReport estimate_density(const std::vector<PlaceReport>& reports,
                               const std::function<Verdict(const PlaceReport&)>& predicate,
                               BadPlacePolicy policy = BadPlacePolicy::Exclude);
// Density of periodic reduction.
DensityReport estimate_density(const std::vector<PlaceReport>& reports,
                               BadPlacePolicy policy = BadPlacePolicy::Exclude);

// Densities restricted to N_v <= b for each b in bounds.
std::vector<DensityReport> density_series(const std::vector<PlaceReport>& reports, const std::vector<Integer>& bounds,
                                          BadPlacePolicy policy = BadPlacePolicy::Exclude);
// 10, 100, ... up to and including bound.
std::vector<Integer> decade_bounds(const Integer& bound);

struct HasseVerdict {
    enum class Kind {
        ConsistentWithPeriodic,
        WanderingWitnessed,
        WanderingUnwitnessed,
        PreperiodicWitnessed,
        PreperiodicUnwitnessed
    };

    OrbitClass global;
    std::vector<PlaceReport> rows;
    DensityReport density;
    Kind kind;
    // Places whose reduction is decided non-periodic.
    std::vector<Place> witnesses;
};
std::string to_string(HasseVerdict::Kind k);

// Throws InvariantViolation if a globally periodic point has a place decided
// non-periodic.
template <Field F>
HasseVerdict hasse_verdict(const RationalMap<F>& m, const ProjPoint<F>& alpha, const Integer& norm_bound,
                           const ScanOptions& options = {});

struct CounterexampleReport {
    std::uint64_t q;
    RationalMap<RationalField> map;
    std::vector<PlaceReport> rows;
    // Density of {p : p != 1 mod q} and of periodic reduction of 0.
    DensityReport family_density;
    DensityReport periodic_density;
    Rational expected_density;
    // Good places with p != 1 mod q that fail periodic reduction; must be empty.
    std::vector<Place> violations;
};

CounterexampleReport counterexample_family(std::uint64_t q, const Integer& norm_bound, const ScanOptions& options = {});

struct IntersectionRow {
    Place place;
    Integer norm;
    bool good = false;
    Verdict hit = Verdict::Unknown;
    std::optional<std::uint64_t> witness;

    friend bool operator==(const IntersectionRow&, const IntersectionRow&) = default;
};

// Whether r(beta) lies in the strict forward orbit of r(alpha). Exact at good
// places; bad places compare reductions of the global orbit prefix of length
// n_max and answer Unknown without a hit.
template <Field F>
std::vector<IntersectionRow> intersection_scan(const RationalMap<F>& m, const ProjPoint<F>& alpha,
                                               const ProjPoint<F>& beta, const Integer& norm_bound,
                                               std::uint64_t n_max, const ScanOptions& options = {});

struct Question1Row {
    Rational c;
    OrbitClass global;
    HasseVerdict::Kind verdict;
    DensityReport density;
    Rational threshold_conjectured;  // 1 - 1/phi(d)
};

// x^d + c at alpha over Q for each c.
std::vector<Question1Row> question1_explore(unsigned d, const std::vector<Rational>& c_list, const Rational& alpha,
                                            const Integer& norm_bound, const ScanOptions& options = {});

}  // namespace ohasse
