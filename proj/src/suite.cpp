#include <weier/suite.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <weier/random.hpp>
#include <weier/wide.hpp>

namespace weier
{

namespace
{

bool valid_name(std::string_view name)
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
    });
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

std::vector<Definition> parse_definitions(std::string_view text)
{
    std::vector<Definition> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::parse,
                        fmt::format("line {}, column 1: expected 'name = expression'", line_no));
        }
        const auto name = trim(line.substr(0, eq));
        if (!valid_name(name)) {
            throw Error(ErrorKind::parse,
                        fmt::format("line {}, column 1: invalid definition name '{}'", line_no, name));
        }
        for (const auto &d : out) {
            if (d.name == name) {
                throw Error(ErrorKind::parse, fmt::format("line {}, column 1: duplicate name '{}'",
                                                          line_no, name));
            }
        }
        // Pad with spaces so parser columns match the file.
        const std::string body = std::string(eq + 1, ' ') + std::string(line.substr(eq + 1));
        out.push_back({std::string(name), parse_series_expr(body, line_no), line_no});
        if (end == text.size()) {
            break;
        }
    }
    return out;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {
        "parseval",      "cauchy",       "mean-value", "discrete-cauchy", "extract",
        "liouville",     "schwarz",      "clunie-jack", "saddle",         "anti-calculus",
        "boundary-max",  "open-image",   "local-rep",  "injectivity",     "double-series",
        "laurent",       "all"};
    return names;
}

namespace
{

struct Member {
    std::string name;
    std::size_t index;
    Elaborated value;
};

struct Context {
    const SuiteConfig &config;
    std::vector<CheckResult> &results;
};

const TruncatedSeries *series_of(const Member &m)
{
    return std::get_if<TruncatedSeries>(&m.value);
}

Annulus validity_of(const Elaborated &v)
{
    if (const auto *l = std::get_if<LaurentSeries>(&v)) {
        return l->annulus();
    }
    return {0.0, std::get<TruncatedSeries>(v).radius_hint().value_or(infinity)};
}

CheckResult skipped(std::string name, std::string why)
{
    CheckResult r;
    r.name = std::move(name);
    r.verdict = Verdict::inconclusive;
    r.detail = std::move(why);
    return r;
}

// Runs one check, turning verifier errors into inconclusive results.
void run_check(Context &ctx, const std::string &name, const std::function<CheckResult()> &check)
{
    try {
        auto r = check();
        r.name = name;
        ctx.results.push_back(std::move(r));
    } catch (const Error &e) {
        ctx.results.push_back(skipped(name, fmt::format("{}: {}", to_string(e.kind()), e.what())));
    }
}

std::string radius_tag(double r)
{
    return fmt::format("r={}", r);
}

const TruncatedSeries *require_series(Context &ctx, const std::string &name, const Member &m)
{
    const auto *f = series_of(m);
    if (!f) {
        ctx.results.push_back(skipped(name, "needs a power series, got a Laurent series"));
    }
    return f;
}

// Radii of the configuration lying inside the validity region, ascending.
std::vector<double> usable_radii(const SuiteConfig &config, const Annulus &validity)
{
    std::vector<double> out;
    for (const double r : config.radii) {
        if (validity.contains(r)) {
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The largest usable radius of a series whose disk is centered at 0.
std::optional<double> disk_radius(Context &ctx, const std::string &name, const TruncatedSeries &f)
{
    if (f.center() != Complex{}) {
        ctx.results.push_back(skipped(name, "needs a series centered at 0"));
        return std::nullopt;
    }
    const auto radii = usable_radii(ctx.config, validity_of(f));
    if (radii.empty()) {
        ctx.results.push_back(skipped(name, "no configured radius lies inside the disk"));
        return std::nullopt;
    }
    return radii.back();
}

void suite_parseval(Context &ctx, const Member &m)
{
    const auto radii = usable_radii(ctx.config, validity_of(m.value));
    if (radii.empty()) {
        ctx.results.push_back(skipped("parseval/" + m.name, "no configured radius is valid"));
    }
    for (const double r : radii) {
        run_check(ctx, fmt::format("parseval/{}/{}", m.name, radius_tag(r)), [&] {
            if (const auto *f = series_of(m)) {
                return verify_parseval(*f, r, ctx.config.samples, ctx.config.tol);
            }
            return verify_parseval(std::get<LaurentSeries>(m.value), r, ctx.config.samples,
                                   ctx.config.tol);
        });
    }
}

void suite_cauchy(Context &ctx, const Member &m)
{
    const auto validity = validity_of(m.value);
    const auto radii = usable_radii(ctx.config, validity);
    if (radii.empty()) {
        ctx.results.push_back(skipped("cauchy/" + m.name, "no configured radius is valid"));
    }
    for (const double r : radii) {
        run_check(ctx, fmt::format("cauchy/{}/{}", m.name, radius_tag(r)), [&] {
            if (const auto *f = series_of(m)) {
                const Complex c = f->center();
                const Oracle shifted = [f, c](Complex w) { return evaluate(*f, c + w); };
                return verify_cauchy_bounds(IndexedCoeffs::from(*f), shifted, r, ctx.config.samples,
                                            validity, ctx.config.tol);
            }
            const auto &l = std::get<LaurentSeries>(m.value);
            return verify_cauchy_bounds(IndexedCoeffs::from(l), laurent_oracle(l), r,
                                        ctx.config.samples, validity, ctx.config.tol);
        });
    }
}

void suite_mean_value(Context &ctx, const Member &m)
{
    const std::string name = "mean-value/" + m.name;
    const auto *f = require_series(ctx, name, m);
    if (!f) {
        return;
    }
    run_check(ctx, name, [&] {
        const std::size_t n = std::max<std::size_t>(1u, f->degree());
        const double z = *std::max_element(ctx.config.radii.begin(), ctx.config.radii.end());
        const auto mv = polygonal_mean_value(*f, f->center(), z, n);
        CheckResult r;
        r.residual = -mv.residual;
        r.tolerance = mv.bound;
        r.witnesses = {{f->center(), mv.mean}};
        r.detail = fmt::format("n={} |z|={}", n, z);
        r.verdict = r.residual >= -r.tolerance ? Verdict::pass : Verdict::fail;
        if (!mv.contract_ok) {
            r.verdict = Verdict::inconclusive;
            r.detail += " (n below the degree)";
        }
        return r;
    });
}

void suite_discrete_cauchy(Context &ctx, const Member &m)
{
    const std::string name = "discrete-cauchy/" + m.name;
    const auto *f = require_series(ctx, name, m);
    if (!f) {
        return;
    }
    run_check(ctx, name, [&] {
        const std::size_t n = std::max<std::size_t>(1u, f->degree());
        const double z = *std::max_element(ctx.config.radii.begin(), ctx.config.radii.end());
        double scale = 1.0;
        for (std::size_t k = 0; k < 2 * n; ++k) {
            scale = std::max(scale, std::abs(evaluate(*f, f->center() + z * unity_node(
                                                                   static_cast<std::int64_t>(k), n))));
        }
        double worst = 0.0;
        Witness w{};
        std::size_t worst_j = 0;
        for (std::size_t j = 0; j <= n; ++j) {
            const Complex d = discrete_cauchy_derivative(*f, f->center(), z, j, n);
            const Complex expected = j <= f->order() ? (*f)[j] : Complex{};
            const double err = std::abs(d - expected) * std::pow(z, static_cast<double>(j)) / scale;
            if (err >= worst) {
                worst = err;
                w = {Complex(static_cast<double>(j), 0.0), d};
                worst_j = j;
            }
        }
        CheckResult r;
        r.residual = -worst;
        r.tolerance = ctx.config.tol.identity;
        r.witnesses = {w};
        r.detail = fmt::format("n={} |z|={} worst j={}", n, z, worst_j);
        r.verdict = r.residual >= -r.tolerance ? Verdict::pass : Verdict::fail;
        return r;
    });
}

void suite_extract(Context &ctx, const Member &m)
{
    const std::string name = "extract/" + m.name;
    const auto *f = require_series(ctx, name, m);
    if (!f) {
        return;
    }
    if (f->center() != Complex{}) {
        ctx.results.push_back(skipped(name, "needs a series centered at 0"));
        return;
    }
    run_check(ctx, name, [&] {
        const auto hint = f->radius_hint();
        const double rho =
            hint && std::isfinite(*hint)
                ? 0.1 * *hint
                : 0.1 * *std::min_element(ctx.config.radii.begin(), ctx.config.radii.end());
        const WideOracle oracle = [f](const WideComplex &z) { return evaluate_wide(*f, z); };
        const std::size_t top = std::min<std::size_t>(8u, f->order());
        double mass = 0.0;
        for (std::size_t j = 0; j <= f->order(); ++j) {
            mass += std::abs((*f)[j]) * std::pow(rho, static_cast<double>(j));
        }
        double worst = infinity;
        Witness w{};
        for (std::size_t n = 1; n <= top; ++n) {
            const Complex got = to_narrow(alternating_coefficient_extract(oracle, n, to_wide(rho)));
            // Indices 3n, 5n, ... leak into the alternating sum.
            double tail = 0.0;
            for (std::size_t j = 3 * n; j <= f->order(); j += 2 * n) {
                tail += std::abs((*f)[j]) * std::pow(rho, static_cast<double>(j - n));
            }
            // Relative to |a_n| plus the leak, floored at the wide rounding level.
            const double scale =
                std::abs((*f)[n]) + tail + 1e-40 * mass * std::pow(rho, -static_cast<double>(n));
            const double slack = (tail - std::abs(got - (*f)[n])) / scale;
            if (slack < worst) {
                worst = slack;
                w = {Complex(static_cast<double>(n), 0.0), got};
            }
        }
        CheckResult r;
        r.residual = worst;
        r.tolerance = ctx.config.tol.identity;
        r.witnesses = {w};
        r.detail = fmt::format("|z|={} n=1..{}", rho, top);
        r.verdict = r.residual >= -r.tolerance ? Verdict::pass : Verdict::fail;
        return r;
    });
}

void suite_liouville(Context &ctx, const Member &m)
{
    const std::string name = "liouville/" + m.name;
    const auto *f = require_series(ctx, name, m);
    if (!f) {
        return;
    }
    run_check(ctx, name, [&] {
        double mass = 0.0;
        for (const auto &c : f->coeffs()) {
            mass += std::abs(c);
        }
        const Complex c = f->center();
        const Oracle shifted = [f, c](Complex w) { return evaluate(*f, c + w); };
        return detect_polynomial_degree(shifted, {mass, mass, f->degree()}, ctx.config.radii,
                                        f->degree() + 4u, ctx.config.tol);
    });
}

void suite_schwarz(Context &ctx, const Member &m)
{
    const std::string name = "schwarz/" + m.name;
    if (const auto *f = require_series(ctx, name, m)) {
        run_check(ctx, name, [&] { return verify_schwarz(*f, 10000, ctx.config.tol); });
    }
}

void suite_clunie_jack(Context &ctx, const Member &m)
{
    const std::string name = "clunie-jack/" + m.name;
    const auto *f = require_series(ctx, name, m);
    if (!f) {
        return;
    }
    if (f->center() != Complex{}) {
        ctx.results.push_back(skipped(name, "needs a series centered at 0"));
        return;
    }
    run_check(ctx, name, [&] {
        const auto ext = circle_extrema(series_oracle(*f), 1.0, ctx.config.samples, true);
        const Complex alpha = ext.argmax / std::abs(ext.argmax);
        return clunie_jack(DifferentiableOracle::from_series(*f), alpha, ctx.config.samples,
                           ctx.config.tol);
    });
}

void suite_saddle(Context &ctx, const Member &m)
{
    const std::string name = "saddle/" + m.name;
    if (const auto *f = require_series(ctx, name, m)) {
        run_check(ctx, name, [&] { return classify_critical_point(*f, f->center(), ctx.config.tol); });
    }
}

void suite_anti_calculus(Context &ctx, const Member &m)
{
    const std::string name = "anti-calculus/" + m.name;
    const auto *f = require_series(ctx, name, m);
    if (!f) {
        return;
    }
    if (const auto r = disk_radius(ctx, name, *f)) {
        run_check(ctx, name, [&] {
            return verify_anti_calculus(DifferentiableOracle::from_series(*f), *r, 4096,
                                        ctx.config.tol);
        });
    }
}

void suite_boundary_max(Context &ctx, const Member &m)
{
    const std::string name = "boundary-max/" + m.name;
    const auto *f = require_series(ctx, name, m);
    if (!f) {
        return;
    }
    if (const auto r = disk_radius(ctx, name, *f)) {
        run_check(ctx, name, [&] {
            return verify_boundary_max(series_oracle(*f), *r, 4096, ctx.config.samples,
                                       ctx.config.tol);
        });
    }
}

void suite_open_image(Context &ctx, const Member &m)
{
    const std::string name = "open-image/" + m.name;
    const auto *f = require_series(ctx, name, m);
    if (!f) {
        return;
    }
    if (f->center() != Complex{}) {
        ctx.results.push_back(skipped(name, "needs a series centered at 0"));
        return;
    }
    const auto radii = usable_radii(ctx.config, validity_of(m.value));
    if (radii.empty()) {
        ctx.results.push_back(skipped(name, "no configured radius lies inside the disk"));
        return;
    }
    run_check(ctx, name, [&] {
        return verify_open_image(series_oracle(*f), radii.front(), 16, 101,
                                 mix64(ctx.config.seed ^ mix64(m.index)), ctx.config.tol);
    });
}

void suite_local_rep(Context &ctx, const Member &m)
{
    const std::string name = "local-rep/" + m.name;
    if (const auto *f = require_series(ctx, name, m)) {
        run_check(ctx, name, [&] { return verify_local_representation(*f, ctx.config.tol); });
    }
}

void suite_injectivity(Context &ctx, const Member &m)
{
    const std::string name = "injectivity/" + m.name;
    if (const auto *f = require_series(ctx, name, m)) {
        run_check(ctx, name, [&] {
            return verify_injectivity(*f, std::min<std::size_t>(ctx.config.samples, 1024u),
                                      ctx.config.tol);
        });
    }
}

void suite_double_series(Context &ctx, const std::vector<const Member *> &members)
{
    if (members.empty()) {
        return;
    }
    std::vector<TruncatedSeries> family;
    std::string label;
    for (const auto *m : members) {
        const auto *f = series_of(*m);
        if (!f || f->order() != ctx.config.order) {
            ctx.results.push_back(skipped("double-series/" + m->name,
                                          "family members must be power series at the configured order"));
            continue;
        }
        family.push_back(*f);
        label += (label.empty() ? "" : "+") + m->name;
    }
    if (family.empty()) {
        return;
    }
    double r = *std::min_element(ctx.config.radii.begin(), ctx.config.radii.end());
    for (const auto &f : family) {
        if (f.radius_hint() && !(r < *f.radius_hint())) {
            r = 0.9 * *f.radius_hint();
        }
    }
    for (std::size_t k = 0; k <= 2 && k <= ctx.config.order; ++k) {
        run_check(ctx, fmt::format("double-series/{}/k={}", label, k), [&] {
            return verify_double_series(SeriesFamily(family), r, k, 512, ctx.config.tol);
        });
    }
}

void suite_laurent(Context &ctx, const Member &m)
{
    LaurentSeries l = [&] {
        if (const auto *f = series_of(m)) {
            return to_laurent(*f);
        }
        return std::get<LaurentSeries>(m.value);
    }();
    const auto radii = usable_radii(ctx.config, l.annulus());
    if (radii.empty()) {
        ctx.results.push_back(skipped("laurent/" + m.name, "no configured radius lies in the annulus"));
        return;
    }
    for (const double r : radii) {
        run_check(ctx, fmt::format("laurent/{}/parseval/{}", m.name, radius_tag(r)),
                  [&] { return verify_parseval(l, r, ctx.config.samples, ctx.config.tol); });
        run_check(ctx, fmt::format("laurent/{}/cauchy/{}", m.name, radius_tag(r)), [&] {
            return verify_cauchy_bounds(IndexedCoeffs::from(l), laurent_oracle(l), r,
                                        ctx.config.samples, l.annulus(), ctx.config.tol);
        });
    }
    run_check(ctx, fmt::format("laurent/{}/uniqueness", m.name), [&] {
        return verify_laurent_uniqueness(l, radii, ctx.config.samples, std::nullopt, ctx.config.tol);
    });
}

using PerMember = void (*)(Context &, const Member &);

const std::map<std::string, PerMember> &per_member_suites()
{
    static const std::map<std::string, PerMember> table = {
        {"parseval", suite_parseval},
        {"cauchy", suite_cauchy},
        {"mean-value", suite_mean_value},
        {"discrete-cauchy", suite_discrete_cauchy},
        {"extract", suite_extract},
        {"liouville", suite_liouville},
        {"schwarz", suite_schwarz},
        {"clunie-jack", suite_clunie_jack},
        {"saddle", suite_saddle},
        {"anti-calculus", suite_anti_calculus},
        {"boundary-max", suite_boundary_max},
        {"open-image", suite_open_image},
        {"local-rep", suite_local_rep},
        {"injectivity", suite_injectivity},
        {"laurent", suite_laurent},
    };
    return table;
}

// The suite a definition is routed to, or empty when it takes part in all.
std::string routed_suite(const std::string &name)
{
    const auto dot = name.find('.');
    if (dot == std::string::npos) {
        return {};
    }
    const auto prefix = name.substr(0, dot);
    const auto &names = suite_names();
    if (prefix != "all" && std::find(names.begin(), names.end(), prefix) != names.end()) {
        return prefix;
    }
    return {};
}

void run_one(Context &ctx, const std::string &suite, const std::vector<Member> &members)
{
    std::vector<const Member *> selected;
    for (const auto &m : members) {
        const auto route = routed_suite(m.name);
        if (route.empty() || route == suite) {
            selected.push_back(&m);
        }
    }
    if (suite == "double-series") {
        suite_double_series(ctx, selected);
        return;
    }
    const auto fn = per_member_suites().at(suite);
    for (const auto *m : selected) {
        fn(ctx, *m);
    }
}

nlohmann::ordered_json config_snapshot(const SuiteConfig &c)
{
    nlohmann::ordered_json j;
    j["order"] = c.order;
    j["samples"] = c.samples;
    j["radii"] = c.radii;
    j["tolerance"] = {{"identity", c.tol.identity},
                      {"sampled", c.tol.sampled},
                      {"derivative", c.tol.derivative},
                      {"zero", c.tol.zero}};
    return j;
}

} // namespace

Report run_suite(const SuiteConfig &config, const std::vector<Definition> &definitions)
{
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
        throw Error(ErrorKind::invalid_input, fmt::format("unknown suite '{}'", config.suite));
    }
    if (config.order < 1) {
        throw Error(ErrorKind::invalid_input, "order must be at least 1");
    }
    if (config.samples < 8) {
        throw Error(ErrorKind::invalid_input, "sample counts must be at least 8");
    }
    if (config.radii.empty()
        || std::any_of(config.radii.begin(), config.radii.end(),
                       [](double r) { return !(r > 0.0) || !std::isfinite(r); })) {
        throw Error(ErrorKind::invalid_input, "radii must be a non-empty list of positive numbers");
    }
    std::vector<Member> members;
    for (std::size_t i = 0; i < definitions.size(); ++i) {
        const auto &d = definitions[i];
        try {
            members.push_back({d.name, i, elaborate(*d.expr, config.order)});
        } catch (const Error &e) {
            throw Error(e.kind(), fmt::format("line {}: definition '{}': {}", d.line, d.name, e.what()));
        }
    }
    Report report;
    report.suite = config.suite;
    report.seed = config.seed;
    report.config = config_snapshot(config);
    Context ctx{config, report.results};
    if (config.suite == "all") {
        for (const auto &s : names) {
            if (s != "all") {
                run_one(ctx, s, members);
            }
        }
    } else {
        run_one(ctx, config.suite, members);
    }
    for (auto &r : report.results) {
        if (r.verdict == Verdict::fail && r.witnesses.empty()) {
            r.witnesses.push_back({});
        }
    }
    return report;
}

namespace
{

nlohmann::ordered_json pair_json(Complex z)
{
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

} // namespace

std::string render_report(const Report &report, ReportFormat format)
{
    std::size_t counts[3] = {0, 0, 0};
    for (const auto &r : report.results) {
        ++counts[static_cast<int>(r.verdict)];
    }
    if (format == ReportFormat::csv) {
        std::string out = "name,verdict,residual,tolerance,witnesses\n";
        for (const auto &r : report.results) {
            std::string w;
            for (const auto &x : r.witnesses) {
                w += fmt::format("{}{} {} {} {}", w.empty() ? "" : ";", x.point.real(),
                                 x.point.imag(), x.value.real(), x.value.imag());
            }
            out += fmt::format("{},{},{},{},{}\n", csv_field(r.name), to_string(r.verdict),
                               r.residual, r.tolerance, csv_field(w));
        }
        return out;
    }
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["config"] = report.config;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto &r : report.results) {
        nlohmann::ordered_json item;
        item["name"] = r.name;
        item["verdict"] = to_string(r.verdict);
        item["residual"] = r.residual;
        item["tolerance"] = r.tolerance;
        item["witnesses"] = nlohmann::ordered_json::array();
        for (const auto &x : r.witnesses) {
            item["witnesses"].push_back({{"point", pair_json(x.point)}, {"value", pair_json(x.value)}});
        }
        j["results"].push_back(std::move(item));
    }
    j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"inconclusive", counts[2]}};
    return j.dump(2) + "\n";
}

void emit_report(const Report &report, ReportFormat format, const std::filesystem::path &path)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorKind::io, fmt::format("cannot open '{}' for writing", path.string()));
    }
    const auto text = render_report(report, format);
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) {
        throw Error(ErrorKind::io, fmt::format("write to '{}' failed", path.string()));
    }
}

namespace
{

double parse_number(const std::string &s, const char *what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty() || !std::isfinite(v)) {
        throw CLI::ValidationError(what, fmt::format("'{}' is not a number", s));
    }
    return v;
}

void apply_tolerance(Tolerances &tol, const std::string &spec)
{
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
        tol.sampled = parse_number(spec, "--tolerance");
        return;
    }
    const auto key = spec.substr(0, eq);
    const double v = parse_number(spec.substr(eq + 1), "--tolerance");
    if (v < 0.0) {
        throw CLI::ValidationError("--tolerance", "tolerances must be non-negative");
    }
    if (key == "identity") {
        tol.identity = v;
    } else if (key == "sampled") {
        tol.sampled = v;
    } else if (key == "derivative") {
        tol.derivative = v;
    } else if (key == "zero") {
        tol.zero = v;
    } else {
        throw CLI::ValidationError("--tolerance", fmt::format("unknown tolerance '{}'", key));
    }
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Numerical checks for power series, Laurent series and their inequalities", "weier"};
    SuiteConfig config;
    std::vector<std::string> tolerances;
    std::string radii_text;
    std::string report_path;
    std::string format_text = "json";
    bool strict = false;
    std::string input;
    app.add_option("--suite", config.suite, "Suite to run")
        ->check(CLI::IsMember(suite_names()))
        ->capture_default_str();
    app.add_option("--order", config.order, "Truncation order")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4096}))
        ->capture_default_str();
    app.add_option("--tolerance", tolerances,
                   "Tolerance override: a number (sampled) or identity|sampled|derivative|zero=VALUE")
        ->allow_extra_args(false);
    app.add_option("--samples", config.samples, "Samples per circle")
        ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 20))
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--radii", radii_text, "Comma-separated radii (default 0.5,1)");
    app.add_option("--report", report_path, "Write the report here ('-' for stdout)");
    app.add_option("--format", format_text, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--strict", strict, "Inconclusive results fail the run");
    app.add_option("file", input, "Definitions file (default: the bundled corpus)");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) {
            args.emplace_back(argv[i]);
        }
        app.parse(args);
        for (const auto &t : tolerances) {
            apply_tolerance(config.tol, t);
        }
        if (!radii_text.empty()) {
            config.radii.clear();
            std::stringstream ss(radii_text);
            for (std::string item; std::getline(ss, item, ',');) {
                const double r = parse_number(std::string(trim(item)), "--radii");
                if (!(r > 0.0)) {
                    throw CLI::ValidationError("--radii", "radii must be positive");
                }
                config.radii.push_back(r);
            }
            if (config.radii.empty()) {
                throw CLI::ValidationError("--radii", "no radii given");
            }
        }
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "weier: " << e.what() << "\n";
        return 2;
    }

    Report report;
    try {
        std::string text;
        if (input.empty()) {
            text = std::string(default_corpus());
        } else {
            std::ifstream file(input, std::ios::binary);
            if (!file) {
                err << "weier: cannot read '" << input << "'\n";
                return 2;
            }
            std::stringstream buf;
            buf << file.rdbuf();
            text = buf.str();
        }
        report = run_suite(config, parse_definitions(text));
    } catch (const Error &e) {
        err << "weier: " << (input.empty() ? "<bundled corpus>" : input) << ": " << e.what() << "\n";
        return 2;
    }
    report.config["strict"] = strict;

    std::size_t fails = 0;
    std::size_t inconclusive = 0;
    const bool report_to_stdout = report_path == "-";
    for (const auto &r : report.results) {
        fails += r.verdict == Verdict::fail;
        inconclusive += r.verdict == Verdict::inconclusive;
        if (report_to_stdout) {
            continue;
        }
        out << fmt::format("{:<12} {} residual={} tolerance={}", to_string(r.verdict), r.name,
                           r.residual, r.tolerance);
        if (!r.classification.empty()) {
            out << " [" << r.classification << "]";
        }
        if (!r.detail.empty()) {
            out << " " << r.detail;
        }
        out << "\n";
    }
    const auto format = format_text == "csv" ? ReportFormat::csv : ReportFormat::json;
    if (report_to_stdout) {
        out << render_report(report, format);
    } else {
        out << fmt::format("{} checks: {} pass, {} fail, {} inconclusive\n", report.results.size(),
                           report.results.size() - fails - inconclusive, fails, inconclusive);
        if (!report_path.empty()) {
            try {
                emit_report(report, format, report_path);
            } catch (const Error &e) {
                err << "weier: " << e.what() << "\n";
                return 2;
            }
        }
    }
    return fails > 0 || (strict && inconclusive > 0) ? 1 : 0;
}

} // namespace weier
