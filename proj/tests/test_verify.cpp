#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <weier/verify.hpp>

#include "support.hpp"

using namespace weier;
using testing_support::Gen;

namespace
{

ErrorKind kind_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::io;
}

TruncatedSeries poly(std::vector<Complex> c)
{
    return TruncatedSeries(std::move(c), {}, infinity);
}

TruncatedSeries monomial(std::size_t n, Complex a = 1.0, std::size_t order = 0)
{
    std::vector<Complex> c(std::max(order, n) + 1);
    c[n] = a;
    return poly(std::move(c));
}

// f(e^{i theta} z) has coefficients a_n e^{i n theta}.
TruncatedSeries rotated(const TruncatedSeries &f, double theta)
{
    std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] *= std::polar(1.0, theta * static_cast<double>(n));
    }
    return TruncatedSeries(std::move(c), f.center(), f.radius_hint());
}

TruncatedSeries scaled(const TruncatedSeries &f, Complex lambda)
{
    return linear_combine(lambda, f, 0.0, f);
}

// The slack rule for inequality checks.
void check_verdict_rule(const CheckResult &r)
{
    if (r.verdict == Verdict::inconclusive) {
        return;
    }
    CHECK((r.verdict == Verdict::pass) == (r.residual >= -r.tolerance));
    if (r.verdict == Verdict::fail) {
        CHECK_FALSE(r.witnesses.empty());
    }
}

} // namespace

TEST_CASE("parseval examples")
{
    const auto lin = verify_parseval(poly({1.0, 1.0}), 1.0, 1024);
    CHECK(lin.verdict == Verdict::pass);
    CHECK(lin.detail.find("S=2") != std::string::npos);
    check_verdict_rule(lin);

    const auto rot = verify_parseval(monomial(3, std::polar(1.0, 0.7)), 0.8, 1024);
    CHECK(rot.verdict == Verdict::pass);
    // m = M = r^n and S = r^{2n}: every side coincides.
    CHECK(std::abs(rot.residual) <= 1e-12);

    const LaurentSeries l({1.0}, {0.0, 1.0});
    const auto lr = verify_parseval(l, 1.0, 1024);
    CHECK(lr.verdict == Verdict::pass);
    CHECK(lr.witnesses.size() == 2);

    CHECK(kind_of([] { verify_parseval(geometric_series(10), 1.0, 64); }) == ErrorKind::domain);
    CHECK(kind_of([] {
              verify_parseval(LaurentSeries({1.0}, {1.0}, Annulus{1.0, 2.0}), 0.5, 64);
          })
          == ErrorKind::domain);
}

TEST_CASE("parseval detects a mismatched oracle")
{
    // Coefficients of 1 + z against the oracle 2 + 2z: S = 2 but m^2 > S near z = 1.
    const IndexedCoeffs coeffs{0, {1.0, 1.0}};
    const auto r = verify_parseval(coeffs, [](Complex z) { return 3.0 + 0.0 * z; }, 1.0, 256);
    CHECK(r.verdict == Verdict::fail);
    check_verdict_rule(r);
}

TEST_CASE("property: parseval sandwich on random polynomials")
{
    Gen gen(51);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = gen.poly(gen.index(0, 16), 16);
        const double r = gen.uniform(0.1, 2.0);
        const auto base = verify_parseval(f, r, 1024);
        CHECK(base.verdict == Verdict::pass);
        check_verdict_rule(base);
        // Scaling covariance.
        for (const Complex lambda : {Complex(2.0), Complex(0.0, 1.0), Complex(-3.0)}) {
            CHECK(verify_parseval(scaled(f, lambda), r, 1024).verdict == base.verdict);
        }
        // Rotation invariance.
        for (const double theta : {pi / 7.0, 1.0}) {
            CHECK(verify_parseval(rotated(f, theta), r, 1024).verdict == base.verdict);
        }
    }
}

TEST_CASE("cauchy bounds")
{
    const auto geo = geometric_series(30);
    const Oracle g = [&geo](Complex z) { return evaluate(geo, z); };
    const auto r = verify_cauchy_bounds(IndexedCoeffs::from(geo), g, 0.5, 1024, {0.0, 1.0});
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.detail.find("M=1.99") != std::string::npos);

    const auto mono = monomial(5);
    const auto eq = verify_cauchy_bounds(IndexedCoeffs::from(mono), series_oracle(mono), 0.7);
    CHECK(eq.verdict == Verdict::pass);
    CHECK(std::abs(eq.residual) <= 1e-12);

    const LaurentSeries l({1.0}, {0.0, 1.0});
    CHECK(verify_cauchy_bounds(IndexedCoeffs::from(l), laurent_oracle(l), 1.0).verdict
          == Verdict::pass);

    // A coefficient list larger than the oracle allows.
    const auto bad = verify_cauchy_bounds(IndexedCoeffs{-2, {5.0, 0.0, 1.0}}, laurent_oracle(l), 1.0);
    CHECK(bad.verdict == Verdict::fail);
    CHECK(bad.witnesses.back().value == Complex(5.0));
    check_verdict_rule(bad);
}

TEST_CASE("derivative bound")
{
    CHECK(verify_derivative_bound(poly({0.0, 1.0}), 2.0, 2.0, 1.0).verdict == Verdict::pass);
    const auto e = verify_derivative_bound(exp_series(20), std::exp(1.0), 1.0, 0.5);
    CHECK(e.verdict == Verdict::pass);
    // max |f'| = e^{0.5} against e / 0.5.
    CHECK(e.residual == doctest::Approx(1.0 - std::exp(0.5) / (2.0 * std::exp(1.0))).epsilon(1e-6));
    // Hypothesis violated by sampling.
    CHECK(verify_derivative_bound(exp_series(20), 1.0, 1.0, 0.5).verdict == Verdict::inconclusive);
    CHECK(kind_of([] { verify_derivative_bound(poly({0.0, 1.0}), 1.0, 1.0, 1.0); })
          == ErrorKind::invalid_input);
}

TEST_CASE("polynomial degree detection")
{
    const auto cubic = poly({0.0, 2.0, 0.0, 1.0});
    const auto r = detect_polynomial_degree(series_oracle(cubic), {0.0, 1.0, 5}, {1, 2, 4, 8}, 8);
    // z^3 + 2z is not below B r^5 = r^5 at r = 1: |f(1)| = 3 > 1.
    CHECK(r.verdict == Verdict::fail);
    const auto ok = detect_polynomial_degree(series_oracle(cubic), {3.0, 3.0, 5}, {1, 2, 4, 8}, 8);
    CHECK(ok.verdict == Verdict::pass);
    CHECK(ok.classification == "degree 3");

    const auto seven = detect_polynomial_degree([](Complex) { return Complex(7.0); },
                                                {7.0, 0.0, 0}, {1, 2}, 4);
    CHECK(seven.verdict == Verdict::pass);
    CHECK(seven.classification == "degree 0");

    const auto e = detect_polynomial_degree([](Complex z) { return std::exp(z); }, {0.0, 1.0, 3},
                                            {1, 2, 4, 8}, 12);
    CHECK(e.verdict == Verdict::fail);
    REQUIRE_FALSE(e.witnesses.empty());
    // The growth witness is a point where |e^z| exceeds r^3.
    const auto &w = e.witnesses.front();
    CHECK(std::abs(w.value) > std::pow(std::abs(w.point), 3.0));
    check_verdict_rule(e);

    CHECK(kind_of([] { detect_polynomial_degree([](Complex z) { return z; }, {0, 1, 1}, {}, 4); })
          == ErrorKind::invalid_input);
    CHECK(kind_of([] { detect_polynomial_degree([](Complex z) { return z; }, {0, 1, 4}, {1}, 4); })
          == ErrorKind::invalid_input);
}

TEST_CASE("property: degree detection recovers random degrees")
{
    Gen gen(52);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = gen.index(0, 12);
        const auto f = gen.poly(d, d);
        double mass = 0.0;
        for (const auto &c : f.coeffs()) {
            mass += std::abs(c);
        }
        const auto r = detect_polynomial_degree(series_oracle(f), {mass, mass, d}, {1, 2, 4}, d + 4);
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.classification == "degree " + std::to_string(d));
    }
}

TEST_CASE("schwarz")
{
    const auto sq = verify_schwarz(monomial(2, 1.0, 4));
    CHECK(sq.verdict == Verdict::pass);
    CHECK(sq.classification.rfind("rotation-monomial", 0) == 0);
    CHECK(sq.classification.find("n=2") != std::string::npos);

    const auto avg = verify_schwarz(poly({0.0, 0.5, 0.5}));
    CHECK(avg.verdict == Verdict::pass);
    CHECK(avg.classification.empty());
    CHECK(avg.detail.find("sum|a_n|^2=0.5") != std::string::npos);

    const auto strict = verify_schwarz(poly({0.0, 0.9}));
    CHECK(strict.verdict == Verdict::pass);
    CHECK(strict.classification.empty());

    CHECK(kind_of([] { verify_schwarz(poly({0.1, 0.5})); }) == ErrorKind::precondition);
    CHECK(kind_of([] { verify_schwarz(TruncatedSeries({0.0, 0.5}, 0.5)); }) == ErrorKind::precondition);
    CHECK(verify_schwarz(poly({0.0, 2.0})).verdict == Verdict::inconclusive);
}

TEST_CASE("clunie-jack")
{
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto f = DifferentiableOracle::from_series(monomial(n));
        const auto r = clunie_jack(f, 1.0);
        CHECK(r.verdict == Verdict::pass);
        CHECK(std::abs(r.witnesses.front().value - static_cast<double>(n)) <= 1e-12);
        const auto rot = clunie_jack(f, std::polar(1.0, 2.0));
        CHECK(std::abs(rot.witnesses.front().value - static_cast<double>(n)) <= 1e-12);
    }
    const auto half = clunie_jack(DifferentiableOracle::from_series(poly({0.5, 0.5})), 1.0);
    CHECK(half.verdict == Verdict::pass);
    CHECK(half.witnesses.front().value == Complex(0.5));

    // Finite-difference derivative of the same oracle.
    const auto fd = DifferentiableOracle::from_function([](Complex z) { return z * z * z; });
    CHECK(fd.source == DerivativeSource::central_difference);
    const auto q = clunie_jack(fd, 1.0);
    CHECK(q.verdict == Verdict::pass);
    CHECK(std::abs(q.witnesses.front().value - 3.0) <= 1e-8);
    CHECK(q.detail.find("central-difference") != std::string::npos);

    const auto not_max = clunie_jack(DifferentiableOracle::from_series(poly({0.5, 0.5})), Complex(0.0, 1.0));
    CHECK(not_max.verdict == Verdict::inconclusive);
    CHECK(kind_of([] { clunie_jack(DifferentiableOracle::from_series(poly({0.0, 1.0})), 0.5); })
          == ErrorKind::invalid_input);
    CHECK(kind_of([] { clunie_jack(DifferentiableOracle::from_series(poly({1.0, 1.0})), -1.0); })
          == ErrorKind::degenerate);
}

TEST_CASE("critical point classification")
{
    const auto saddle = classify_critical_point(poly({1.0, 0.0, 1.0}), 0.0);
    CHECK(saddle.verdict == Verdict::pass);
    CHECK(saddle.classification == "saddle");
    double lo = 1.0;
    double hi = -1.0;
    for (std::size_t k = 1; k < saddle.witnesses.size(); ++k) {
        lo = std::min(lo, saddle.witnesses[k].value.real());
        hi = std::max(hi, saddle.witnesses[k].value.real());
    }
    CHECK(lo < 0.0);
    CHECK(hi > 0.0);
    // |1 + eps^2| - 1 along the real axis.
    CHECK(saddle.witnesses[1].value.real() == doctest::Approx(1e-6).epsilon(1e-6));

    const auto zero = classify_critical_point(poly({0.0, 0.0, 1.0}), 0.0);
    CHECK(zero.verdict == Verdict::pass);
    CHECK(zero.classification.rfind("zero", 0) == 0);

    const auto regular = classify_critical_point(poly({5.0, 1.0}), 0.0);
    CHECK(regular.verdict == Verdict::pass);
    CHECK(regular.classification.rfind("regular", 0) == 0);

    CHECK(kind_of([] { classify_critical_point(geometric_series(10), 2.0); })
          == ErrorKind::invalid_input);
}

TEST_CASE("property: planted critical points on random cubics")
{
    Gen gen(53);
    for (int trial = 0; trial < 200; ++trial) {
        const Complex z0 = gen.disk(1.0);
        const Complex a = gen.box();
        Complex b = 0.5 * gen.unimodular();
        const bool plant_zero = trial % 4 == 0;
        const Complex c = plant_zero ? Complex{} : gen.unimodular();
        if (!plant_zero) {
            // Keep Re(b conj(c)) away from 0 so the axis directions see both signs.
            b = 0.5 * c * std::polar(1.0, gen.uniform(-1.0, 1.0));
        }
        // c + b (z - z0)^2 + a (z - z0)^3 expanded about 0.
        const TruncatedSeries shifted({c, 0.0, b, a}, z0, infinity);
        const auto f = recenter(shifted, 0.0);
        const auto r = classify_critical_point(f, z0);
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.classification.rfind(plant_zero ? "zero" : "saddle", 0) == 0);
        const auto reg = classify_critical_point(f, z0 + 0.3);
        CHECK(reg.verdict == Verdict::pass);
        CHECK(reg.classification.rfind("regular", 0) == 0);
    }
}

TEST_CASE("anti-calculus")
{
    const auto e = verify_anti_calculus(DifferentiableOracle::from_series(exp_series(20)), 1.0);
    CHECK(e.verdict == Verdict::pass);
    CHECK(e.witnesses.front().point == Complex(1.0, 0.0));

    const auto id = verify_anti_calculus(DifferentiableOracle::from_series(poly({0.0, 1.0})), 1.0);
    CHECK(id.verdict == Verdict::pass);
    CHECK(id.classification == "minimum at a zero of f");
    CHECK(id.witnesses[1].point == Complex{});

    const auto q = verify_anti_calculus(DifferentiableOracle::from_series(poly({1.0, 0.0, 1.0})), 1.0);
    CHECK(q.verdict == Verdict::pass);
    CHECK(q.classification == "minimum at a zero of f");
    CHECK(std::abs(std::abs(q.witnesses[1].point.imag()) - 1.0) <= 1e-12);

    CHECK(kind_of([] {
              verify_anti_calculus(DifferentiableOracle::from_series(poly({2.0, 0.0})), 1.0);
          })
          == ErrorKind::precondition);
    // Zero-free: |e^{-z^2}| peaks at z = i or -i and bottoms out at z = 1 or -1.
    const auto gauss = verify_anti_calculus(
        DifferentiableOracle::from_function([](Complex z) { return std::exp(-z * z); }), 1.0);
    CHECK(gauss.verdict == Verdict::pass);
    CHECK(std::abs(std::abs(gauss.witnesses[0].point.imag()) - 1.0) <= 1e-9);
    CHECK(std::abs(std::abs(gauss.witnesses[1].point.real()) - 1.0) <= 1e-9);
}

TEST_CASE("boundary maximum")
{
    const auto sq = verify_boundary_max(series_oracle(poly({0.0, 0.0, 1.0})), 1.0);
    CHECK(sq.verdict == Verdict::pass);
    const auto lin = verify_boundary_max(series_oracle(poly({1.0, 1.0})), 2.0);
    CHECK(lin.verdict == Verdict::pass);
    CHECK(lin.witnesses.front().point == Complex(2.0, 0.0));
    CHECK(std::abs(lin.witnesses.front().value) == doctest::Approx(3.0));
    const auto e = verify_boundary_max(series_oracle(exp_series(20)), 1.0);
    CHECK(e.detail.find("boundary max 2.71828") != std::string::npos);
    // A non-analytic bump violates the principle.
    const auto bump = verify_boundary_max([](Complex z) { return Complex(2.0 - std::abs(z)); }, 1.0);
    CHECK(bump.verdict == Verdict::fail);
    check_verdict_rule(bump);
    CHECK(kind_of([] { verify_boundary_max([](Complex) { return Complex(1.0); }, 1.0); })
          == ErrorKind::precondition);
}

TEST_CASE("open image")
{
    const auto sq = verify_open_image(series_oracle(poly({0.0, 0.0, 1.0})), 0.5);
    CHECK(sq.verdict == Verdict::pass);
    CHECK(sq.tolerance == doctest::Approx(0.25e-3));
    const auto shift = verify_open_image(series_oracle(poly({5.0, 1.0})), 1.0);
    CHECK(shift.verdict == Verdict::pass);
    CHECK(shift.tolerance == doctest::Approx(1e-3));
    const auto cubic = verify_open_image(series_oracle(poly({0.0, 1.0, 0.0, 1.0})), 0.3);
    CHECK(cubic.verdict == Verdict::pass);
    // Same seed, same result.
    CHECK(verify_open_image(series_oracle(poly({0.0, 1.0, 0.0, 1.0})), 0.3, 16, 101, 9).residual
          == verify_open_image(series_oracle(poly({0.0, 1.0, 0.0, 1.0})), 0.3, 16, 101, 9).residual);
    // f(0) attained on the circle: delta vanishes.
    CHECK(verify_open_image(series_oracle(poly({0.0, -1.0, 1.0})), 1.0).verdict
          == Verdict::inconclusive);
    // A map that is not open: |z| has image [0, r].
    const auto folded = verify_open_image([](Complex z) { return Complex(std::abs(z) + 1.0); }, 1.0);
    CHECK(folded.verdict == Verdict::fail);
}

TEST_CASE("laurent uniqueness")
{
    const LaurentSeries zero({}, {0.0});
    CHECK(verify_laurent_uniqueness(zero, {1.0}).verdict == Verdict::pass);
    CHECK(verify_laurent_uniqueness(zero, {1.0}).classification.rfind("vanishing", 0) == 0);
    // z - z collapses in storage.
    const auto cancel = laurent_linear_combine(1.0, LaurentSeries({}, {0.0, 1.0}), -1.0,
                                               LaurentSeries({}, {0.0, 1.0}));
    CHECK(verify_laurent_uniqueness(cancel, {0.5, 1.0}).verdict == Verdict::pass);
    // A claimed sup far below a coefficient.
    const LaurentSeries l({1e-3}, {0.0});
    const auto r = verify_laurent_uniqueness(l, {1.0}, 1024, 1e-9);
    CHECK(r.verdict == Verdict::fail);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front().value == Complex(1e-3));
    CHECK(r.detail.find("j=-1") != std::string::npos);
    CHECK(kind_of([&] { verify_laurent_uniqueness(LaurentSeries({}, {1.0}, {0.5, 2.0}), {3.0}); })
          == ErrorKind::domain);
}

TEST_CASE("double series")
{
    std::vector<TruncatedSeries> exp_family;
    for (std::size_t mu = 0; mu <= 12; ++mu) {
        exp_family.push_back(monomial(mu, 1.0 / std::tgamma(mu + 1.0), 20));
    }
    CHECK(verify_double_series(SeriesFamily(exp_family), 0.5, 0).verdict == Verdict::pass);

    std::vector<TruncatedSeries> geo_family;
    for (std::size_t mu = 0; mu <= 20; ++mu) {
        geo_family.push_back(monomial(mu, std::pow(0.5, static_cast<double>(mu)), 24));
    }
    const auto r = verify_double_series(SeriesFamily(geo_family), 0.9, 1);
    CHECK(r.verdict == Verdict::pass);
    CHECK(verify_double_series(SeriesFamily({poly({1.0, 2.0, 3.0})}), 1.0, 2).verdict == Verdict::pass);
    CHECK(kind_of([] { verify_double_series(SeriesFamily({geometric_series(10)}), 1.0, 0); })
          == ErrorKind::invalid_input);
}

TEST_CASE("injectivity and local representation")
{
    const auto e = verify_injectivity(exp_series(20));
    CHECK(e.verdict == Verdict::pass);
    CHECK(verify_injectivity(poly({0.0, 1.0, 0.25})).verdict == Verdict::pass);
    CHECK(verify_injectivity(poly({1.0, 2.0})).verdict == Verdict::pass);
    CHECK(kind_of([] { verify_injectivity(poly({1.0, 0.0, 1.0})); }) == ErrorKind::critical_center);

    const auto rep = verify_local_representation(cos_series(24));
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.classification.rfind("m=2", 0) == 0);
    CHECK(kind_of([] { verify_local_representation(poly({1.0, 0.0})); }) == ErrorKind::degenerate);
}

TEST_CASE("property: verdicts are rotation invariant on the fuzz corpus")
{
    Gen gen(54);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = gen.index(1, 8);
        auto f = gen.poly(d, d);
        const double r = gen.uniform(0.3, 1.5);
        for (const double theta : {pi / 7.0, 1.0}) {
            const auto g = rotated(f, theta);
            CHECK(verify_parseval(f, r, 1024).verdict == verify_parseval(g, r, 1024).verdict);
            CHECK(verify_cauchy_bounds(IndexedCoeffs::from(f), series_oracle(f), r).verdict
                  == verify_cauchy_bounds(IndexedCoeffs::from(g), series_oracle(g), r).verdict);
            CHECK(verify_boundary_max(series_oracle(f), r).verdict
                  == verify_boundary_max(series_oracle(g), r).verdict);
        }
    }
}
