#include "ohasse/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <regex>
#include <sstream>

#include "ohasse/cli/report.hpp"
#include "ohasse/integrality/integrality.hpp"
#include "ohasse/map/analysis.hpp"
#include "ohasse/map/parser.hpp"

namespace ohasse::cli {
namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Config {
    std::string field = "Q";
    std::string map;
    std::string point;
    std::string beta;
    std::string bound;
    std::optional<std::uint64_t> nmax;
    std::string S;
    std::uint64_t q = 0;
    unsigned d = 2;
    std::string c_list;
    std::string factors;
    unsigned workers = 1;
    std::string format = "csv";
    std::string out;
    bool include_ff_infinity = false;
    std::string policy = "exclude";
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    }
    return out;
}

template <class Fn>
Report with_field(const std::string& desc, Fn&& fn) {
    if (desc == "Q") return fn(RationalField{});
    static const std::regex ff(R"(F_?(\d+)\(t\))");
    std::smatch m;
    if (!std::regex_match(desc, m, ff)) throw UsageError("--field must be Q or Fp(t) with p prime, got '" + desc + "'");
    std::uint64_t p = std::stoull(m[1].str());
    if (!is_prime_u64(p)) throw UsageError("--field " + desc + ": " + m[1].str() + " is not prime");
    return fn(RationalFunctionField(p));
}

Integer parse_bound(const Config& c, long minimum = 2) {
    if (c.bound.empty()) throw UsageError("--bound is required");
    Integer b;
    if (b.set_str(c.bound, 10) != 0) throw UsageError("--bound must be a decimal integer, got '" + c.bound + "'");
    if (b < minimum) throw UsageError("--bound must be at least " + std::to_string(minimum));
    return b;
}

const std::string& require(const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError(std::string(flag) + " is required");
    return value;
}

BadPlacePolicy parse_policy(const std::string& s) {
    if (s == "exclude") return BadPlacePolicy::Exclude;
    if (s == "pessimistic") return BadPlacePolicy::Pessimistic;
    throw UsageError("--bad-prime-policy must be exclude or pessimistic");
}

ScanOptions scan_options(const Config& c) {
    ScanOptions o;
    o.workers = c.workers;
    o.include_ff_infinity = c.include_ff_infinity;
    o.n_max = c.nmax;
    return o;
}

Json scan_options_json(const Config& c) {
    Json o;
    o["n_max"] = c.nmax ? Json(*c.nmax) : Json("default");
    o["include_ff_infinity"] = c.include_ff_infinity;
    o["bad_prime_policy"] = c.policy;
    return o;
}

Place infinite_place(const RationalField&) { return Place::q_infinite(); }
Place infinite_place(const RationalFunctionField& k) { return Place::ff_infinite(k.characteristic()); }

Place parse_place(const RationalField&, const std::string& token) {
    if (token == "inf") return Place::q_infinite();
    return Place::parse(token);
}

Place parse_place(const RationalFunctionField& k, const std::string& token) {
    if (token == "inf") return Place::ff_infinite(k.characteristic());
    if (token.find('@') != std::string::npos) return Place::parse(token);
    return Place::parse(token + "@F" + std::to_string(k.characteristic()));
}

template <Field F>
std::vector<Place> parse_places(const F& k, const std::string& text) {
    std::vector<Place> out;
    for (const auto& t : split(text, ',')) {
        Place v = parse_place(k, t);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

std::vector<Place> bad_finite_places(const RationalMap<RationalField>& m) { return bad_places(m); }
std::vector<Place> bad_finite_places(const RationalMap<RationalFunctionField>& m) { return bad_places(m, false); }

// The infinite place plus the places of bad reduction, unless given.
template <Field F>
std::vector<Place> places_or_default(const RationalMap<F>& m, const std::string& text) {
    if (!text.empty()) return parse_places(m.field(), text);
    std::vector<Place> S{infinite_place(m.field())};
    for (const auto& v : bad_finite_places(m)) S.push_back(v);
    return S;
}

std::string join_places(const std::vector<Place>& S) {
    std::string s;
    for (const auto& v : S) s += (s.empty() ? "" : ",") + v.to_string();
    return s;
}

template <Field F>
Report base_report(const std::string& experiment, const F& k, const Config& c, const RationalMap<F>& m) {
    Report r;
    r.experiment = experiment;
    r.field = k.name();
    r.map = m.to_string();
    r.alpha = c.point;
    return r;
}

std::string fixed(double x, int digits = 6) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << x;
    return os.str();
}

template <Field F>
Report cmd_classify(const F& k, const Config& c) {
    auto m = parse_map(k, require(c.map, "--map"));
    auto p = parse_point(k, require(c.point, "--point"));
    OrbitClass cls = classify_orbit(m, p);
    Report r = base_report("classify", k, c, m);
    std::uint64_t rows = cls.is_wandering() ? cls.escape_index : cls.tail + cls.period;
    rows = std::min<std::uint64_t>(rows, 256);
    Table t{{"n", "point", "height"}, {}};
    auto x = p;
    for (std::uint64_t n = 0; n <= rows; ++n) {
        t.rows.push_back({std::to_string(n), x.to_string(), weil_height(x).norm.get_str()});
        if (n < rows) x = m.eval(x);
    }
    r.table = std::move(t);
    r.summary["class"] = cls.to_string();
    r.summary["tail"] = cls.tail;
    r.summary["period"] = cls.period;
    if (cls.is_periodic()) r.summary["exceptional"] = is_exceptional(m, p);
    auto hm = height_machine_constants(m);
    r.summary["height_upper"] = hm.upper.to_string();
    r.summary["height_lower"] = hm.lower.to_string();
    return r;
}

template <Field F>
Report cmd_scan(const F& k, const Config& c) {
    auto m = parse_map(k, require(c.map, "--map"));
    auto p = parse_point(k, require(c.point, "--point"));
    Integer bound = parse_bound(c);
    Report r = base_report("scan", k, c, m);
    r.bound = bound;
    r.options = scan_options_json(c);
    r.rows = scan_periodic_reduction(m, p, bound, scan_options(c));
    r.density = estimate_density(r.rows, parse_policy(c.policy));
    return r;
}

Table series_table(const std::vector<DensityReport>& series) {
    Table t{{"bound", "total", "periodic", "non_periodic", "bad", "unknown", "density", "decimal"}, {}};
    for (const auto& d : series)
        t.rows.push_back({d.bound.get_str(), std::to_string(d.total), std::to_string(d.periodic),
                          std::to_string(d.non_periodic), std::to_string(d.bad), std::to_string(d.unknown),
                          d.density.to_string(), d.decimal()});
    return t;
}

template <Field F>
Report cmd_density(const F& k, const Config& c) {
    auto m = parse_map(k, require(c.map, "--map"));
    auto p = parse_point(k, require(c.point, "--point"));
    Integer bound = parse_bound(c);
    BadPlacePolicy policy = parse_policy(c.policy);
    Report r = base_report("density", k, c, m);
    r.bound = bound;
    r.options = scan_options_json(c);
    auto rows = scan_periodic_reduction(m, p, bound, scan_options(c));
    r.series = density_series(rows, decade_bounds(bound), policy);
    r.table = series_table(r.series);
    r.density = estimate_density(rows, policy);
    return r;
}

Json place_list(const std::vector<Place>& places, std::size_t limit) {
    Json a = Json::array();
    for (std::size_t i = 0; i < places.size() && i < limit; ++i) a.push_back(places[i].to_string());
    return a;
}

template <Field F>
Report cmd_hasse(const F& k, const Config& c) {
    auto m = parse_map(k, require(c.map, "--map"));
    auto p = parse_point(k, require(c.point, "--point"));
    Integer bound = parse_bound(c);
    Report r = base_report("hasse", k, c, m);
    r.bound = bound;
    r.options = scan_options_json(c);
    HasseVerdict v = hasse_verdict(m, p, bound, scan_options(c));
    r.rows = v.rows;
    r.density = estimate_density(v.rows, parse_policy(c.policy));
    r.summary["global"] = v.global.to_string();
    r.summary["verdict"] = to_string(v.kind);
    r.summary["witness_count"] = v.witnesses.size();
    r.summary["first_witnesses"] = place_list(v.witnesses, 10);
    return r;
}

Report cmd_counterexample(const Config& c) {
    if (c.field != "Q") throw UsageError("counterexample runs over Q only");
    Integer bound = parse_bound(c);
    if (c.q < 3 || !is_prime_u64(c.q)) throw UsageError("--q must be an odd prime");
    auto rep = counterexample_family(c.q, bound, scan_options(c));
    Report r;
    r.experiment = "counterexample";
    r.field = "Q";
    r.map = rep.map.to_string();
    r.alpha = "0";
    r.bound = bound;
    r.options = scan_options_json(c);
    r.options["q"] = c.q;
    r.rows = std::move(rep.rows);
    r.density = rep.family_density;
    r.summary["expected_density"] = rep.expected_density.to_string();
    r.summary["family_density"] = rep.family_density.decimal();
    r.summary["periodic_density"] = rep.periodic_density.density.to_string();
    r.summary["periodic_density_decimal"] = rep.periodic_density.decimal();
    r.summary["violation_count"] = rep.violations.size();
    for (const auto& v : rep.violations) r.violations.push_back(v.to_string());
    return r;
}

template <Field F>
Report cmd_intersect(const F& k, const Config& c) {
    auto m = parse_map(k, require(c.map, "--map"));
    auto a = parse_point(k, require(c.point, "--point"));
    auto b = parse_point(k, require(c.beta, "--beta"));
    Integer bound = parse_bound(c);
    std::uint64_t nmax = c.nmax.value_or(64);
    Report r = base_report("intersect", k, c, m);
    r.bound = bound;
    r.options["beta"] = c.beta;
    r.options["n_max"] = nmax;
    r.options["include_ff_infinity"] = c.include_ff_infinity;
    auto rows = intersection_scan(m, a, b, bound, nmax, scan_options(c));
    Table t{{"place", "norm", "good", "hit", "witness"}, {}};
    std::uint64_t hits = 0, misses = 0, unknown = 0;
    for (const auto& row : rows) {
        t.rows.push_back({row.place.to_string(), row.norm.get_str(), row.good ? "true" : "false", to_string(row.hit),
                          row.witness ? std::to_string(*row.witness) : ""});
        (row.hit == Verdict::Yes ? hits : row.hit == Verdict::No ? misses : unknown)++;
    }
    r.table = std::move(t);
    r.summary["hits"] = hits;
    r.summary["misses"] = misses;
    r.summary["unknown"] = unknown;
    if (hits + misses > 0) r.summary["hit_density"] = Rational(Integer(hits), Integer(hits + misses)).to_string();
    auto global = orbit_member(m, a, b);
    r.summary["global_witness"] = global ? Json(*global) : Json(nullptr);
    return r;
}

template <Field F>
Report cmd_integrality(const F& k, const Config& c) {
    auto m = parse_map(k, require(c.map, "--map"));
    auto a = parse_point(k, require(c.point, "--point"));
    auto b = parse_point(k, require(c.beta, "--beta"));
    std::uint64_t nmax = c.nmax.value_or(25);
    auto S = places_or_default(m, c.S);
    Report r = base_report("integrality", k, c, m);
    r.options["beta"] = c.beta;
    r.options["S"] = join_places(S);
    r.options["n_max"] = nmax;
    OrbitIntegrality oi = orbit_integral_elements(m, a, b, S, nmax);
    Table t{{"n", "integral", "height_bits"}, {}};
    auto x = a;
    std::size_t hit = 0;
    for (std::uint64_t n = 0; n <= nmax; ++n) {
        bool is_hit = hit < oi.indices.size() && oi.indices[hit] == n;
        if (is_hit) ++hit;
        t.rows.push_back({std::to_string(n), is_hit ? "true" : "false",
                          std::to_string(bit_length(weil_height(x).norm))});
        if (n < nmax) x = m.eval(x);
    }
    r.table = std::move(t);
    r.summary["indices"] = oi.indices;
    r.summary["tail_hit_free"] = oi.tail_hit_free;
    return r;
}

template <Field F>
Report cmd_runge(const F& k, const Config& c) {
    std::vector<SplitFactor<F>> factors;
    for (const auto& text : split(require(c.factors, "--factors"), ';'))
        factors.push_back(split_factor(parse_polynomial(k, text)));
    if (factors.empty()) throw UsageError("--factors lists no polynomial");
    auto S = parse_places(k, c.S.empty() ? "inf" : c.S);
    RungeBound bound = runge_height_bound(factors, S);
    auto points = runge_integral_points(factors, S, bound);
    Report r;
    r.experiment = "runge";
    r.field = k.name();
    for (const auto& f : factors) r.map += (r.map.empty() ? "" : ";") + f.f.to_string('x');
    r.bound = bound.norm_bound;
    r.options["S"] = join_places(S);
    Json cv = Json::object();
    for (const auto& [v, value] : bound.cv) cv[v.to_string()] = value.to_string();
    r.summary["t"] = factors.size();
    r.summary["cv"] = cv;
    r.summary["reciprocal_product"] = bound.reciprocal_product.to_string();
    r.summary["norm_bound"] = bound.norm_bound.get_str();
    r.summary["height_bound"] = fixed(bound.height_bound());
    if (bound.degree_bound) r.summary["degree_bound"] = *bound.degree_bound;
    r.summary["integral_points"] = points.size();
    Table t{{"point", "height"}, {}};
    for (const auto& p : points) t.rows.push_back({p.to_string(), weil_height(p).norm.get_str()});
    r.table = std::move(t);
    return r;
}

template <Field F>
Report cmd_critical(const F& k, const Config& c) {
    auto m = parse_map(k, require(c.map, "--map"));
    Report r = base_report("critical", k, c, m);
    auto sep = separability_degree(m);
    r.summary["separable_degree"] = sep.separable_degree;
    r.summary["inseparable_degree"] = sep.inseparable_degree;
    r.summary["wronskian"] = wronskian(m).to_string('x');
    auto cp = critical_points(m);
    Table t{{"point", "multiplicity"}, {}};
    for (const auto& [p, mult] : cp.points) t.rows.push_back({p.to_string(), std::to_string(mult)});
    r.table = std::move(t);
    r.summary["residual_degrees"] = cp.residual_degrees;
    return r;
}

Report cmd_question1(const Config& c) {
    if (c.field != "Q") throw UsageError("question1 runs over Q only");
    if (c.d < 2) throw UsageError("--d must be at least 2");
    Integer bound = parse_bound(c);
    RationalField k;
    std::vector<Rational> cs;
    for (const auto& s : split(c.c_list.empty() ? "1" : c.c_list, ',')) cs.push_back(parse_element(k, s));
    std::string alpha = c.point.empty() ? "0" : c.point;
    auto rows = question1_explore(c.d, cs, parse_element(k, alpha), bound, scan_options(c));
    Report r;
    r.experiment = "question1";
    r.field = "Q";
    r.map = "x^" + std::to_string(c.d) + "+c";
    r.alpha = alpha;
    r.bound = bound;
    r.options["c"] = c.c_list.empty() ? "1" : c.c_list;
    Table t{{"c", "global", "verdict", "density", "decimal", "threshold"}, {}};
    for (const auto& row : rows)
        t.rows.push_back({row.c.to_string(), row.global.to_string(), to_string(row.verdict),
                          row.density.density.to_string(), row.density.decimal(), row.threshold_conjectured.to_string()});
    r.table = std::move(t);
    return r;
}

void write_output(const Config& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot open --out file " + c.out);
    f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    c.workers = default_workers();
    CLI::App app{"Periodic reduction, density and integrality experiments on P^1 over Q and Fp(t)", "ohasse"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        std::string flags;
    };
    const std::vector<Sub> subs = {
        {"classify", "classify the forward orbit of a point", "field map point"},
        {"scan", "periodic reduction at every place up to a norm bound", "field map point bound nmax scan"},
        {"density", "density of periodic reduction with a decade convergence series", "field map point bound nmax scan"},
        {"hasse", "global class checked against the place-by-place scan", "field map point bound nmax scan"},
        {"counterexample", "the x^q+1 family at 0 against the primes p != 1 mod q", "bound q scan"},
        {"intersect", "whether beta reduces into the forward orbit of alpha", "field map point beta bound nmax scan"},
        {"integrality", "orbit points S-integral relative to a periodic beta", "field map point beta nmax S"},
        {"runge", "height bound and integral points for split factors", "field factors S"},
        {"critical", "critical points and separability data", "field map"},
        {"question1", "density table for x^d+c over a list of c", "d c point bound scan"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        auto has = [&](const char* f) { return (" " + s.flags + " ").find(std::string(" ") + f + " ") != std::string::npos; };
        if (has("field")) sub->add_option("--field", c.field, "Q or Fp(t), e.g. F3(t)")->capture_default_str();
        if (has("map")) sub->add_option("--map", c.map, "map in x, e.g. \"(x^2+1)/(2*x)\"");
        if (has("point")) sub->add_option("--point", c.point, "starting point, or inf");
        if (has("beta")) sub->add_option("--beta", c.beta, "target point");
        if (has("bound")) sub->add_option("--bound", c.bound, "norm bound on places");
        if (has("nmax")) sub->add_option("--nmax", c.nmax, "orbit length limit");
        if (has("S")) sub->add_option("--S", c.S, "comma separated places, e.g. inf,2,3 or inf,t+1");
        if (has("q")) sub->add_option("--q", c.q, "odd prime exponent");
        if (has("d")) sub->add_option("--d", c.d, "degree")->capture_default_str();
        if (has("c")) sub->add_option("--c", c.c_list, "comma separated constants");
        if (has("factors")) sub->add_option("--factors", c.factors, "semicolon separated polynomials in x");
        if (has("scan")) {
            sub->add_option("--workers", c.workers, "worker threads (default ORBIT_HASSE_WORKERS or 1)")
                ->check(CLI::PositiveNumber);
            sub->add_flag("--include-ff-infinity", c.include_ff_infinity, "scan the place 1/t as well");
            sub->add_option("--bad-prime-policy", c.policy, "exclude or pessimistic")->capture_default_str();
        }
        sub->add_option("--format", c.format, "csv or json")->capture_default_str();
        sub->add_option("--out", c.out, "write the report here instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
        Report r;
        if (cmd == "counterexample") {
            r = cmd_counterexample(c);
        } else if (cmd == "question1") {
            r = cmd_question1(c);
        } else {
            r = with_field(c.field, [&](const auto& k) -> Report {
                if (cmd == "classify") return cmd_classify(k, c);
                if (cmd == "scan") return cmd_scan(k, c);
                if (cmd == "density") return cmd_density(k, c);
                if (cmd == "hasse") return cmd_hasse(k, c);
                if (cmd == "intersect") return cmd_intersect(k, c);
                if (cmd == "integrality") return cmd_integrality(k, c);
                if (cmd == "runge") return cmd_runge(k, c);
                return cmd_critical(k, c);
            });
        }
        // Densities carry the requested bound, not the largest norm scanned.
        if (r.density && r.bound > 0) r.density->bound = r.bound;
        write_output(c, emit(r, c.format), out);
        if (!r.violations.empty()) {
            err << "error: " << r.violations.size()
                << " places violate periodic reduction where the permutation argument guarantees it\n";
            return kInvariant;
        }
        return kOk;
    } catch (...) {
        return exit_code_for(std::current_exception(), err);
    }
}

int exit_code_for(const std::exception_ptr& error, std::ostream& err) {
    try {
        std::rethrow_exception(error);
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated (this is a bug): " << e.what() << '\n';
        return kInvariant;
    } catch (const HypothesisNotMet& e) {
        err << "hypothesis not met: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kPrecondition;
    } catch (const DegenerateMap& e) {
        err << "precondition failed: the map is not a morphism (resultant 0): " << e.what() << '\n';
        return kPrecondition;
    } catch (const Unsupported& e) {
        err << "precondition failed: unsupported input: " << e.what() << '\n';
        return kPrecondition;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"ohasse"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ohasse::cli
