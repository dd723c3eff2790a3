#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigencount/bounds.hpp"
#include "eigencount/error.hpp"
#include "eigencount/oracle.hpp"
#include "reference/suites.hpp"

#ifndef EIGENCOUNT_VERSION
#define EIGENCOUNT_VERSION "unknown"
#endif

namespace eigencount::cli {

using nlohmann::json;

namespace {

struct IoError : Error
{
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return ss.str();
}

/// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
}

json cjson(cplx z)
{
    return json::array({z.real(), z.imag()});
}

template <class T>
json opt(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::string_view provenance_name(GammaProvenance g)
{
    return g == GammaProvenance::EnvelopeCertified ? "envelope_certified" : "user_supplied";
}

std::string_view certainty_name(Certainty c)
{
    return c == Certainty::Exact ? "exact" : "upper_bound";
}

json tolerances_json(const Tolerances& t)
{
    return {{"cluster_rel", t.cluster_rel},
            {"max_sweeps_per_row", t.max_sweeps_per_row},
            {"singular_rcond", t.singular_rcond},
            {"rank_rel", t.rank_rel},
            {"unit_factor", t.unit_factor},
            {"contour_min_abs", t.contour_min_abs},
            {"contour_initial", t.contour_initial},
            {"contour_budget", t.contour_budget},
            {"normalization", t.normalization}};
}

json report_json(const BoundReport& r)
{
    return {{"kind", to_string(r.kind)},
            {"p", r.p},
            {"s", r.s},
            {"point", r.point ? cjson(*r.point) : json(nullptr)},
            {"n", r.n},
            {"t_star", opt(r.t_star)},
            {"eps", opt(r.eps)},
            {"gamma", r.gamma.value},
            {"c_p", r.c_p},
            {"phi", opt(r.phi_value)},
            {"alpha_mode", certainty_name(r.alpha_mode)},
            {"bound", r.bound},
            {"oracle_count", opt(r.oracle_count)},
            {"admissible", r.admissible},
            {"certified", r.certified}};
}

json model_json(const PreparedModel& m)
{
    return {{"dim", m.dim},
            {"norm", to_string(m.norm)},
            {"l0_norm", m.l0_norm},
            {"k_norm", m.k_norm},
            {"alpha_mode", certainty_name(m.alpha.all_exact() ? Certainty::Exact : Certainty::UpperBound)}};
}

json header(std::string_view command, const std::vector<std::string>& args)
{
    return {{"command", command}, {"arguments", args}, {"version", EIGENCOUNT_VERSION}};
}

std::string csv_number(double v)
{
    std::ostringstream ss;
    ss << std::setprecision(17) << v;
    return ss.str();
}

template <class T>
std::string csv_opt(const std::optional<T>& v)
{
    if (!v) return "";
    if constexpr (std::is_same_v<T, int>) return std::to_string(*v);
    else return csv_number(*v);
}

cplx parse_point(const std::string& text)
{
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return re;
        }
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        const double im = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::logic_error&) {
        throw InvalidArgument("--point expects 're,im', got '" + text + "'");
    }
}

void require_positive_p(double p)
{
    if (!(p > 0.0) || !std::isfinite(p)) throw AdmissibilityError("p > 0", "p = " + csv_number(p));
}

PreparedModel load_model(const std::string& path, json& input)
{
    const std::string text = read_file(path);
    input = {{"path", path}, {"digest", input_digest(text)}};
    return prepare(parse_spec(text));
}

// ---------------------------------------------------------------------------

struct BoundArgs
{
    std::string spec;
    double p = 1.0;
    std::optional<double> s;
    std::optional<std::string> point;
    std::string n = "auto";
    std::optional<double> t;
    std::string mode = "certified";
    std::optional<double> gamma;
    std::string out;
    std::string format = "json";
    bool timing = false;
};

int cmd_bound(const BoundArgs& a, const std::vector<std::string>& argv, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    require_positive_p(a.p);
    if (a.s.has_value() == a.point.has_value()) throw InvalidArgument("give exactly one of --s and --point");
    json input;
    const PreparedModel m = load_model(a.spec, input);

    BoundOptions opts;
    if (a.n != "auto") {
        try {
            std::size_t used = 0;
            opts.n = std::stoi(a.n, &used);
            if (used != a.n.size()) throw std::invalid_argument(a.n);
        } catch (const std::logic_error&) {
            throw InvalidArgument("--n expects 'auto' or an integer, got '" + a.n + "'");
        }
    }
    opts.eps_mode = a.mode == "empirical" ? EpsMode::Empirical : EpsMode::Certified;
    opts.gamma = a.gamma ? gamma_p_user(a.p, *a.gamma) : gamma_p_upper(a.p);

    std::vector<BoundReport> reports;
    json extra = json::object();
    if (a.point) {
        reports.push_back(count_bound_region(m, a.p, {a.t, PointTarget{parse_point(*a.point)}}, opts));
        extra["oracle"] = {{"multiplicity", *reports.back().oracle_count}};
    } else {
        const double s = *a.s;
        reports.push_back(count_bound_disk(m, a.p, s, opts));
        reports.push_back(count_bound_disk_simple(m, a.p, s, opts));
        reports.push_back(count_bound_region(m, a.p, {a.t, ExteriorDisk{s}}, opts));
        if (m.compact()) {
            reports.push_back(koenig_report(m, a.p, s, opts));
            reports.push_back(compact_report(m, a.p, s, opts));
            const auto& k = reports[reports.size() - 2];
            const auto& c = reports.back();
            const auto& best = k.bound <= c.bound ? k : c;
            extra["compact_best"] = {{"kind", to_string(best.kind)}, {"bound", best.bound}};
        }
        extra["oracle"] = {{"count_outside", *reports.front().oracle_count}, {"s", s}};
    }

    const bool certified = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.certified; });
    if (a.format == "csv") {
        std::ostringstream ss;
        ss << "kind,p,s,point_re,point_im,n,t_star,eps,gamma,c_p,phi,alpha_mode,bound,oracle_count,admissible,certified\n";
        for (const auto& r : reports) {
            ss << to_string(r.kind) << ',' << csv_number(r.p) << ',' << csv_number(r.s) << ','
               << (r.point ? csv_number(r.point->real()) : "") << ',' << (r.point ? csv_number(r.point->imag()) : "")
               << ',' << r.n << ',' << csv_opt(r.t_star) << ',' << csv_opt(r.eps) << ',' << csv_number(r.gamma.value)
               << ',' << csv_number(r.c_p) << ',' << csv_opt(r.phi_value) << ',' << certainty_name(r.alpha_mode) << ','
               << csv_number(r.bound) << ',' << csv_opt(r.oracle_count) << ',' << (r.admissible ? "true" : "false")
               << ',' << (r.certified ? "true" : "false") << '\n';
        }
        emit(ss.str(), a.out, out);
        return exit_ok;
    }

    json rep = header("bound", argv);
    rep["input"] = input;
    rep["model"] = model_json(m);
    rep["config"] = {{"tolerances", tolerances_json(opts.tol)},
                     {"gamma_provenance", provenance_name(opts.gamma->provenance)},
                     {"alpha_mode", certainty_name(reports.front().alpha_mode)},
                     {"eps_mode", to_string(opts.eps_mode)},
                     {"certified", certified},
                     {"rank_cutoff", a.n}};
    rep["bounds"] = json::array();
    for (const auto& r : reports) rep["bounds"].push_back(report_json(r));
    rep.update(extra);
    if (a.timing)
        rep["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(rep.dump(2) + "\n", a.out, out);
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct OracleArgs
{
    std::string spec;
    std::optional<double> s;
    bool curve = false;
    std::optional<double> q;
    double p = 1.0;
    std::string out;
    std::string format = "json";
};

int cmd_oracle(const OracleArgs& a, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    if (!a.s && !a.curve && !a.q) throw InvalidArgument("give at least one of --s, --curve, --q");
    json input;
    const PreparedModel m = load_model(a.spec, input);

    json rep = header("oracle", argv);
    rep["input"] = input;
    rep["model"] = model_json(m);
    std::ostringstream csv;
    csv << "record,x,value\n";

    if (a.s) {
        const int n = eigen_count_outside(m.spectrum, *a.s, m.cluster_radius);
        rep["count_outside"] = {{"s", *a.s}, {"count", n}};
        csv << "count_outside," << csv_number(*a.s) << ',' << n << '\n';
    }
    if (a.curve) {
        const auto curve = count_curve(m.spectrum);
        json pts = json::array();
        for (const auto& b : curve.breakpoints) {
            pts.push_back({{"radius", b.radius}, {"count", b.count}});
            csv << "breakpoint," << csv_number(b.radius) << ',' << b.count << '\n';
        }
        rep["curve"] = {{"total", curve.total}, {"breakpoints", pts}};
    }
    if (a.q) {
        require_positive_p(a.p);
        const double sum = moment_sum(m.spectrum, m.l0_norm, *a.q);
        json moment = {{"q", *a.q}, {"p", a.p}, {"base", m.l0_norm}, {"sum", sum}};
        csv << "moment_sum," << csv_number(*a.q) << ',' << csv_number(sum) << '\n';
        try {
            const double bound = moment_bound(m, a.p, *a.q);
            moment["bound"] = bound;
            moment["admissible"] = true;
            csv << "moment_bound," << csv_number(*a.q) << ',' << csv_number(bound) << '\n';
        } catch (const AdmissibilityError& e) {
            // The oracle side needs no exponent condition; report it anyway.
            moment["bound"] = nullptr;
            moment["admissible"] = false;
            moment["violated"] = e.condition();
            csv << "moment_bound," << csv_number(*a.q) << ",\n";
            err << "note: moment bound not applicable (" << e.what() << ")\n";
        }
        rep["moment"] = moment;
    }
    emit(a.format == "csv" ? csv.str() : rep.dump(2) + "\n", a.out, out);
    return exit_ok;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, std::uint64_t seed, std::ostream& out, std::ostream& err)
{
    const auto names = ref::suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        err << "error: unknown suite '" << suite << "' (expected all";
        for (const auto& n : names) err << ", " << n;
        err << ")\n";
        return exit_usage;
    }
    const auto results = ref::run_suite(suite, seed);
    char line[256];
    std::snprintf(line, sizeof line, "%-8s %-22s %8s %8s  %s\n", "suite", "check", "run", "passed", "summary");
    out << line;
    std::optional<json> first;
    for (const auto& r : results) {
        for (const auto& c : r.checks) {
            std::snprintf(line, sizeof line, "%-8s %-22s %8ld %8ld  %s\n", r.suite.c_str(), c.name.c_str(), c.run,
                          c.run - c.failed, c.summary.c_str());
            out << line;
        }
        if (!first) first = r.first_counterexample();
    }
    if (first) {
        out << "FAIL\ncounterexample: " << first->dump() << "\n";
        return exit_verify;
    }
    out << "PASS (seed " << seed << ")\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------

int cmd_gamma(double p, std::ostream& out)
{
    require_positive_p(p);
    if (!(p >= 0.01 && p <= 100.0)) throw AdmissibilityError("0.01 <= p <= 100", "p = " + csv_number(p));
    const GammaP g = gamma_p_upper(p);
    const json rep = {{"p", p},
                      {"gamma", g.value},
                      {"argmax_radius", g.argmax_radius},
                      {"c_p", c_p(g)},
                      {"provenance", provenance_name(g.provenance)},
                      {"version", EIGENCOUNT_VERSION}};
    out << rep.dump(2) << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------

std::vector<cplx> parse_coefficients(const std::string& text, const std::string& path)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseError::Kind::Malformed, path + ": byte " + std::to_string(e.byte), "invalid JSON");
    }
    if (doc.is_object() && doc.contains("coefficients")) doc = doc["coefficients"];
    if (!doc.is_array()) throw ParseError(ParseError::Kind::Malformed, path, "expected an array of coefficients");
    std::vector<cplx> b;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& v = doc[i];
        const std::string where = path + ": /" + std::to_string(i);
        if (v.is_number()) {
            b.emplace_back(v.get<double>(), 0.0);
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
            b.emplace_back(v[0].get<double>(), v[1].get<double>());
        } else {
            throw ParseError(ParseError::Kind::InvalidValue, where, "coefficient must be a number or [re, im]");
        }
        if (!std::isfinite(b.back().real()) || !std::isfinite(b.back().imag()))
            throw ParseError(ParseError::Kind::InvalidValue, where, "coefficient must be finite");
    }
    return b;
}

struct ShiftArgs
{
    std::string coeffs;
    std::string family;
    std::vector<int> dims{8, 16, 32, 64, 128};
    std::vector<double> radii{1.0, 1.5, 2.0};
    std::string out;
};

int cmd_example_shift(const ShiftArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.coeffs.empty() == a.family.empty()) throw InvalidArgument("give exactly one of --coeffs and --family");
    CoefficientFamily family;
    if (!a.coeffs.empty()) {
        auto b = parse_coefficients(read_file(a.coeffs), a.coeffs);
        family = [b = std::move(b)](int) { return b; };
    } else {
        family = coefficient_family(a.family);
    }
    for (int d : a.dims)
        if (d <= 0) throw InvalidArgument("--dims must be positive");

    std::ostringstream csv;
    csv << "dim,S";
    for (double r : a.radii) csv << ",n(" << csv_number(r) << ")";
    csv << '\n';
    for (int dim : a.dims) {
        const auto ex = shift_example(family(dim), dim);
        const CMatrix l = materialize(ex.model).full();
        const auto spec = eigenvalues(l);
        const double on_circle = Tolerances{}.cluster_rel * std::max(1.0, l.norm());
        csv << dim << ',' << csv_number(moment_sum(spec, 1.0, 1.0));
        for (double r : a.radii) csv << ',' << eigen_count_outside(spec, r, on_circle);
        csv << '\n';
    }
    emit(csv.str(), a.out, out);

    const auto probe = blaschke_divergence_probe(family, a.dims);
    err << "S growth (largest / smallest dim): " << (probe.growth ? csv_number(*probe.growth) : std::string("n/a"))
        << (probe.non_decreasing ? ", non-decreasing" : ", not monotone") << "\n";
    return exit_ok;
}

} // namespace

std::string input_digest(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Eigenvalue counting bounds for L0 + K with oracle verification", "eigencount"};
    app.require_subcommand(1);
    app.set_version_flag("--version", EIGENCOUNT_VERSION);

    BoundArgs bound;
    auto* b = app.add_subcommand("bound", "Counting bounds for a model, with the oracle count");
    b->add_option("spec", bound.spec, "Operator spec JSON")->required();
    b->add_option("--p", bound.p, "Summability exponent p > 0")->required();
    b->add_option("--s", bound.s, "Count eigenvalues with |lambda| > s");
    b->add_option("--point", bound.point, "Bound the multiplicity of the point 're,im'");
    b->add_option("--n", bound.n, "Rank cutoff: auto or an integer")->capture_default_str();
    b->add_option("--t", bound.t, "Inner radius for the region bound (optimized when omitted)");
    b->add_option("--mode", bound.mode, "Gap mode for the region bound")
        ->check(CLI::IsMember({"certified", "empirical"}))
        ->capture_default_str();
    b->add_option("--gamma", bound.gamma, "Use this Gamma_p instead of the certified envelope value");
    b->add_option("--out", bound.out, "Write the report here instead of stdout");
    b->add_option("--format", bound.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    b->add_flag("--timing", bound.timing, "Include wall time in the report");

    OracleArgs oracle;
    auto* o = app.add_subcommand("oracle", "Brute-force eigenvalue counts, count curve and moments");
    o->add_option("spec", oracle.spec, "Operator spec JSON")->required();
    o->add_option("--s", oracle.s, "Count eigenvalues with |lambda| > s");
    o->add_flag("--curve", oracle.curve, "Print the breakpoints of s -> n(s)");
    o->add_option("--q", oracle.q, "Moment sum of (|lambda| - ||L0||)^q");
    o->add_option("--p", oracle.p, "Exponent p for the moment bound")->capture_default_str();
    o->add_option("--out", oracle.out, "Write the output here instead of stdout");
    o->add_option("--format", oracle.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    std::string suite = "all";
    std::uint64_t seed = 0;
    auto* v = app.add_subcommand("verify", "Run the property suites");
    v->add_option("--suite", suite, "all, lambert, phi, koenig, det, bounds or jensen")->capture_default_str();
    v->add_option("--seed", seed, "Seed for the randomized checks")->capture_default_str();

    double gamma_p = 0.0;
    auto* g = app.add_subcommand("gamma", "Certified Gamma_p and C_p");
    g->add_option("--p", gamma_p, "Exponent p")->required();

    ShiftArgs shift;
    auto* e = app.add_subcommand("example-shift", "Shift plus rank-one example: S and n(s) per dimension");
    e->add_option("--coeffs", shift.coeffs, "JSON array of coefficients b_k (numbers or [re, im])");
    e->add_option("--family", shift.family, "Built-in coefficient family")
        ->check(CLI::IsMember({"single", "zero", "lacunary"}));
    e->add_option("--dims", shift.dims, "Dimensions")->delimiter(',')->capture_default_str();
    e->add_option("--radii", shift.radii, "Radii s for the n(s) columns")->delimiter(',')->capture_default_str();
    e->add_option("--out", shift.out, "CSV output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << EIGENCOUNT_VERSION << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return exit_usage;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (b->parsed()) return cmd_bound(bound, args, out);
        if (o->parsed()) return cmd_oracle(oracle, args, out, err);
        if (v->parsed()) return cmd_verify(suite, seed, out, err);
        if (g->parsed()) return cmd_gamma(gamma_p, out);
        if (e->parsed()) return cmd_example_shift(shift, out, err);
    } catch (const AdmissibilityError& ex) {
        err << "admissibility: " << ex.what() << "\n";
        return exit_admissibility;
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << "\n";
        return exit_parse;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace eigencount::cli
