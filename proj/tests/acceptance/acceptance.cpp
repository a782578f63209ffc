// Acceptance run: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include <weier/structure.hpp>
#include <weier/suite.hpp>
#include <weier/unity.hpp>
#include <weier/verify.hpp>
#include <weier/wide.hpp>

#include "../support.hpp"

using namespace weier;
using testing_support::binom;
using testing_support::Gen;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

// The corpus shared by criteria 1 and 2.
struct GutzmerCase {
    TruncatedSeries p;
    Complex z;
};

std::vector<GutzmerCase> gutzmer_corpus()
{
    Gen gen(1001);
    std::vector<GutzmerCase> out;
    for (int i = 0; i < 1000; ++i) {
        auto p = gen.poly(gen.index(0, 32), 0);
        out.push_back({std::move(p), gen.disk(2.0)});
    }
    return out;
}

Outcome gutzmer()
{
    double worst = 0.0;
    for (const auto &[p, z] : gutzmer_corpus()) {
        const auto s = gutzmer_identity_sum(p, z, p.degree() + 1);
        const double rel = std::abs(s.lhs - s.rhs) / std::max(s.rhs, 1e-300);
        worst = std::max(worst, rel);
    }
    return {worst <= 1e-10, fmt::format("max relative gap {:.3g} (limit 1e-10)", worst)};
}

Outcome sandwich()
{
    std::size_t fails = 0;
    std::size_t skipped = 0;
    for (const auto &[p, z] : gutzmer_corpus()) {
        const double r = std::abs(z);
        if (r == 0.0) {
            ++skipped;
            continue;
        }
        const auto res = verify_parseval(p, r, 1024);
        fails += res.verdict != Verdict::pass;
    }
    return {fails == 0, fmt::format("{} non-pass of {}", fails, 1000 - skipped)};
}

// P^{(j)}(z0) / j! by the binomial expansion.
Complex taylor_at(const TruncatedSeries &p, Complex z0, std::size_t j)
{
    Complex acc{};
    for (std::size_t n = j; n <= p.order(); ++n) {
        acc += p[n] * binom(n, j) * std::pow(z0, static_cast<int>(n - j));
    }
    return acc;
}

Outcome mean_value_and_cauchy()
{
    Gen gen(1003);
    double worst_mv = 0.0;
    double worst_dc = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t d = gen.index(0, 32);
        const auto p = gen.poly(d, 0);
        const Complex z0 = gen.disk(0.5);
        const Complex z = std::polar(gen.uniform(0.5, 1.0), gen.uniform(0.0, 2.0 * pi));
        for (const std::size_t n : {std::max<std::size_t>(d, 1), d + 3}) {
            const auto mv = polygonal_mean_value(p, z0, z, n);
            double peak = 0.0;
            for (std::size_t k = 0; k < 2 * n; ++k) {
                peak = std::max(peak, std::abs(evaluate(p, z0 + z * unity_node(static_cast<std::int64_t>(k), n))));
            }
            worst_mv = std::max(worst_mv, mv.residual / (1.0 + peak));
            for (std::size_t j = 0; j <= n; ++j) {
                const Complex got = discrete_cauchy_derivative(p, z0, z, j, n);
                const Complex want = taylor_at(p, z0, j);
                const double rel = std::abs(got - want) * std::pow(std::abs(z), static_cast<double>(j))
                                   / (1.0 + peak);
                worst_dc = std::max(worst_dc, rel);
            }
        }
    }
    return {worst_mv <= 1e-9 && worst_dc <= 1e-9,
            fmt::format("max mean-value {:.3g}, max derivative {:.3g} (limit 1e-9)", worst_mv,
                        worst_dc)};
}

Outcome binomial_roots()
{
    double worst = 0.0;
    for (const unsigned p : {2u, 3u, 5u, 7u}) {
        const auto q = power(binomial_root_series(p, 64), p);
        for (std::size_t n = 0; n <= 64; ++n) {
            const Complex want = n <= 1 ? Complex(1.0) : Complex{};
            worst = std::max(worst, std::abs(q[n] - want));
        }
    }
    return {worst <= 1e-10, fmt::format("max coefficient error {:.3g} (limit 1e-10)", worst)};
}

Outcome recentered_geometric()
{
    const auto g = recenter(geometric_series(40), 0.5);
    double worst = 0.0;
    std::size_t worst_m = 0;
    for (std::size_t m = 0; m <= 10; ++m) {
        const double want = std::pow(2.0, static_cast<double>(m + 1));
        const double rel = std::abs(g[m] - want) / want;
        if (rel > worst) {
            worst = rel;
            worst_m = m;
        }
    }
    return {worst <= 1e-6,
            fmt::format("max relative error {:.3g} at m={} (limit 1e-6)", worst, worst_m)};
}

Outcome extraction()
{
    struct Family {
        const char *name;
        WideOracle f;
        std::function<double(std::size_t)> coeff;
    };
    const auto inv_fact = [](std::size_t n) { return 1.0 / std::tgamma(static_cast<double>(n) + 1.0); };
    const std::vector<Family> families = {
        {"exp", [](const WideComplex &z) { return exp(z); }, inv_fact},
        {"sin", [](const WideComplex &z) { return sin(z); },
         [&](std::size_t n) { return n % 2 == 1 ? ((n / 2) % 2 == 0 ? 1.0 : -1.0) * inv_fact(n) : 0.0; }},
        {"cos", [](const WideComplex &z) { return cos(z); },
         [&](std::size_t n) { return n % 2 == 0 ? ((n / 2) % 2 == 0 ? 1.0 : -1.0) * inv_fact(n) : 0.0; }},
    };
    // Errors below this sit at the wide roundoff floor and carry no refinement signal.
    const double floor = 1e-30;
    bool ok = true;
    std::string misses;
    for (const auto &fam : families) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const double want = fam.coeff(n);
            const double scale = inv_fact(n);
            const auto err_at = [&](double r) {
                const Complex got = to_narrow(alternating_coefficient_extract(fam.f, n, to_wide(r)));
                return std::abs(got - want) / scale;
            };
            const double e1 = err_at(0.01);
            const double e2 = err_at(0.005);
            const bool close = e1 <= 1e-7;
            const bool refines = e1 <= floor || e2 < e1;
            if (!close || !refines) {
                ok = false;
                misses += fmt::format(" {} n={} err={:.3g}{}", fam.name, n, e1,
                                      refines ? "" : " (no refinement)");
            }
        }
    }
    return {ok, ok ? std::string("all n <= 8 within 1e-7, halving refines")
                   : "misses:" + misses};
}

Outcome liouville()
{
    Gen gen(1007);
    std::size_t wrong = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t d = gen.index(0, 12);
        const auto p = gen.poly(d, 0);
        double mass = 0.0;
        for (const auto &c : p.coeffs()) {
            mass += std::abs(c);
        }
        const auto r = detect_polynomial_degree(series_oracle(p), {mass, mass, d}, {1.0, 2.0, 4.0}, d + 4);
        wrong += r.verdict != Verdict::pass || r.classification != "degree " + std::to_string(d);
    }
    const auto e = detect_polynomial_degree([](Complex z) { return std::exp(z); }, {0.0, 1.0, 3},
                                            {1.0, 2.0, 4.0}, 16);
    bool growth = e.verdict == Verdict::fail && !e.witnesses.empty();
    if (growth) {
        const auto &w = e.witnesses.front();
        growth = std::abs(w.value) > std::pow(std::abs(w.point), 3.0);
    }
    return {wrong == 0 && growth,
            fmt::format("{} misdetected of 1000; exp vs degree 3: {}", wrong,
                        growth ? "fail with growth witness" : "no growth witness")};
}

Outcome schwarz_clunie_jack()
{
    std::size_t bad = 0;
    double worst_q = 0.0;
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<Complex> c(n + 1);
        c[n] = 1.0;
        const TruncatedSeries f(c, {}, infinity);
        const auto s = verify_schwarz(f);
        const std::string want = n == 1 ? "rotation" : "rotation-monomial";
        bad += s.verdict != Verdict::pass || s.classification.rfind(want, 0) != 0;
        const auto q = clunie_jack(DifferentiableOracle::from_series(f), 1.0);
        bad += q.verdict != Verdict::pass;
        worst_q = std::max(worst_q, std::abs(q.witnesses.front().value - static_cast<double>(n)));
    }
    Gen gen(1008);
    std::size_t random_bad = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = gen.index(1, 8);
        // z^n (1 + z) / 4, rotated and rescaled by its sampled sup on the circle.
        std::vector<Complex> c(n + 2);
        c[n] = 0.25;
        c[n + 1] = 0.25;
        const TruncatedSeries g(c, {}, infinity);
        const double sup = circle_extrema(series_oracle(g), 1.0, 10000).max_value;
        const Complex w = gen.unimodular();
        const auto f = linear_combine(w / sup, g, 0.0, g);
        random_bad += verify_schwarz(f, 10000).verdict != Verdict::pass;
    }
    return {bad == 0 && worst_q <= 1e-12 && random_bad == 0,
            fmt::format("monomials {} bad, max |q - n| {:.3g}; random contractions {} bad of 100",
                        bad, worst_q, random_bad)};
}

// Independent oracle: sign of |f(z0 + eps e^{it})| - |f(z0)| over 64 directions.
std::string directional_oracle(const TruncatedSeries &f, Complex z0)
{
    const double eps = 1e-3;
    const double base = std::abs(evaluate(f, z0));
    bool up = false;
    bool down = false;
    for (int k = 0; k < 64; ++k) {
        const double d = std::abs(evaluate(f, z0 + std::polar(eps, 2.0 * pi * k / 64.0))) - base;
        up = up || d > 0.0;
        down = down || d < 0.0;
    }
    if (base <= 1e-14 && !down) {
        return "zero";
    }
    return up && down ? "saddle" : "other";
}

Outcome saddles()
{
    Gen gen(1009);
    std::size_t disagree = 0;
    int made = 0;
    while (made < 1000) {
        const Complex z0 = gen.disk(1.0);
        const Complex a = gen.box();
        const Complex b = gen.box();
        const bool plant_zero = made % 4 == 0;
        const Complex c = plant_zero ? Complex{} : gen.box();
        if (std::abs(b) < 0.1 || (!plant_zero && std::abs(c) < 0.1)) {
            continue;
        }
        // The verifier probes four axis directions; keep them off the level set of |f|.
        if (!plant_zero && std::abs((b * std::conj(c)).real()) < 0.05 * std::abs(b) * std::abs(c)) {
            continue;
        }
        ++made;
        const auto f = recenter(TruncatedSeries({c, 0.0, b, a}, z0, infinity), 0.0);
        const auto r = classify_critical_point(f, z0);
        const std::string got = r.classification.rfind("zero", 0) == 0     ? "zero"
                                : r.classification.rfind("saddle", 0) == 0 ? "saddle"
                                                                           : "other";
        disagree += r.verdict != Verdict::pass || got != directional_oracle(f, z0);
    }
    const auto s = classify_critical_point(TruncatedSeries({1.0, 0.0, 1.0}, {}, infinity), 0.0);
    bool pos = false;
    bool neg = false;
    for (std::size_t k = 1; k < s.witnesses.size(); ++k) {
        pos = pos || s.witnesses[k].value.real() > 0.0;
        neg = neg || s.witnesses[k].value.real() < 0.0;
    }
    const bool example = s.classification == "saddle" && pos && neg;
    return {disagree == 0 && example,
            fmt::format("{} disagreements of 1000; 1 + z^2 at 0: {}", disagree,
                        example ? "saddle, both signs" : "not confirmed")};
}

Outcome laurent()
{
    Gen gen(1010);
    std::size_t fails = 0;
    for (int i = 0; i < 1000; ++i) {
        std::vector<Complex> neg(8);
        std::vector<Complex> pos(9);
        for (auto &x : neg) {
            x = gen.box();
        }
        for (auto &x : pos) {
            x = gen.box();
        }
        const LaurentSeries l(neg, pos);
        for (const double r : {0.5, 1.0, 2.0}) {
            fails += verify_parseval(l, r, 1024).verdict != Verdict::pass;
        }
    }
    return {fails == 0, fmt::format("{} non-pass of 3000", fails)};
}

Outcome end_to_end()
{
    const auto defs = parse_definitions(default_corpus());
    SuiteConfig config;
    const auto a = run_suite(config, defs);
    const auto b = run_suite(config, defs);
    std::size_t fails = 0;
    std::size_t inconclusive = 0;
    for (const auto &r : a.results) {
        fails += r.verdict == Verdict::fail;
        inconclusive += r.verdict == Verdict::inconclusive;
    }
    const char *argv[] = {"weier"};
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(1, argv, out, err);

    const auto dir = std::filesystem::temp_directory_path() / "weier_acceptance";
    std::filesystem::create_directories(dir);
    bool identical = render_report(a, ReportFormat::json) == render_report(b, ReportFormat::json);
    emit_report(a, ReportFormat::json, dir / "first.json");
    emit_report(b, ReportFormat::json, dir / "second.json");
    const auto slurp = [](const std::filesystem::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    identical = identical && slurp(dir / "first.json") == slurp(dir / "second.json");
    return {fails == 0 && inconclusive == 0 && code == 0 && identical,
            fmt::format("{} checks, {} fail, {} inconclusive, exit {}, reports {}", a.results.size(),
                        fails, inconclusive, code, identical ? "identical" : "differ")};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "Gutzmer identity", 5.0, gutzmer},
        {2, "Parseval sandwich", 30.0, sandwich},
        {3, "polygonal mean value and discrete Cauchy", 10.0, mean_value_and_cauchy},
        {4, "binomial root series", 1.0, binomial_roots},
        {5, "geometric series recentered at 1/2", 1.0, recentered_geometric},
        {6, "alternating-sum extraction", 1.0, extraction},
        {7, "polynomial degree detection", 10.0, liouville},
        {8, "Schwarz and Clunie-Jack", 10.0, schwarz_clunie_jack},
        {9, "saddle classification", 5.0, saddles},
        {10, "Laurent sandwich", 10.0, laurent},
        {11, "end-to-end default corpus", 60.0, end_to_end},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, fmt::format("threw: {}", e.what())};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failed += !pass;
        fmt::print("{} criterion {:>2} {}: {} [{:.2f} s, limit {} s{}]\n", pass ? "PASS" : "FAIL", c.id,
                   c.title, o.detail, secs, c.limit_seconds, in_time ? "" : ", too slow");
    }
    fmt::print("{} of {} criteria pass\n", criteria.size() - static_cast<std::size_t>(failed),
               criteria.size());
    return failed == 0 ? 0 : 1;
}
