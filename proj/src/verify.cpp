#include <weier/verify.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include <weier/random.hpp>

namespace weier
{

const char *to_string(Verdict v) noexcept
{
    switch (v) {
        case Verdict::pass:
            return "pass";
        case Verdict::fail:
            return "fail";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

const char *to_string(DerivativeSource s) noexcept
{
    return s == DerivativeSource::symbolic ? "symbolic" : "central-difference";
}

const char *to_string(CriticalKind k) noexcept
{
    switch (k) {
        case CriticalKind::saddle:
            return "saddle";
        case CriticalKind::zero:
            return "zero (local minimum of |f|)";
        case CriticalKind::regular:
            return "regular point (no extremum of |f|)";
    }
    return "regular point (no extremum of |f|)";
}

Oracle series_oracle(const TruncatedSeries &f)
{
    return [f](Complex z) { return evaluate(f, z); };
}

Oracle laurent_oracle(const LaurentSeries &l)
{
    return [l](Complex z) { return laurent_evaluate(l, z); };
}

DifferentiableOracle DifferentiableOracle::from_series(const TruncatedSeries &f)
{
    return {series_oracle(f), series_oracle(weier::derivative(f)), DerivativeSource::symbolic};
}

DifferentiableOracle DifferentiableOracle::from_function(Oracle f, double scale)
{
    const double h = 1e-6 * scale;
    auto df = [f, h](Complex z) { return (f(z + h) - f(z - h)) / (2.0 * h); };
    return {std::move(f), std::move(df), DerivativeSource::central_difference};
}

namespace
{

std::string format_complex(Complex z)
{
    return fmt::format("{}{:+}i", z.real(), z.imag());
}

// Sets the verdict from the slack rule and ensures a failing result has a witness.
CheckResult finish(CheckResult r)
{
    r.verdict = r.residual >= -r.tolerance ? Verdict::pass : Verdict::fail;
    return r;
}

CheckResult inconclusive(std::string name, std::string why, std::vector<Witness> witnesses = {})
{
    CheckResult r;
    r.name = std::move(name);
    r.verdict = Verdict::inconclusive;
    r.witnesses = std::move(witnesses);
    r.detail = std::move(why);
    return r;
}

// Closed-disk polar grid: the center first, then rings outward, angle-major
// within each ring. The outermost ring lies on |z| = radius.
std::vector<Complex> polar_grid(double radius, std::size_t rings, std::size_t angles)
{
    std::vector<Complex> pts;
    pts.reserve(1 + rings * angles);
    pts.emplace_back(0.0, 0.0);
    for (std::size_t i = 1; i <= rings; ++i) {
        const double rho = radius * static_cast<double>(i) / static_cast<double>(rings);
        for (std::size_t s = 0; s < angles; ++s) {
            pts.push_back(circle_point(rho, s, angles));
        }
    }
    return pts;
}

std::pair<std::size_t, std::size_t> grid_shape(std::size_t samples)
{
    const auto rings = std::max<std::size_t>(
        2u, static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(samples)))));
    const auto angles = std::max<std::size_t>(8u, (samples + rings - 1) / rings);
    return {rings, angles};
}

// f' of a (Laurent) polynomial from its coefficient list.
Complex coefficient_derivative(const IndexedCoeffs &c, Complex z)
{
    Complex acc{};
    for (int j = c.lowest; j <= c.highest(); ++j) {
        if (j != 0) {
            acc += static_cast<double>(j) * c.at(j) * std::pow(z, j - 1);
        }
    }
    return acc;
}

} // namespace

CheckResult verify_parseval(const IndexedCoeffs &coeffs, const Oracle &f, double r,
                            std::size_t samples, const ParsevalOptions &opts)
{
    if (!(r > 0.0) || !opts.validity.contains(r)) {
        throw Error(ErrorKind::domain,
                    fmt::format("verify_parseval: r = {} outside the validity region ({}, {})", r,
                                opts.validity.inner, opts.validity.outer));
    }
    const double s = coefficient_power_sum(coeffs, r);
    const auto ext = circle_extrema(f, r, samples);
    const double m2_upper = ext.max_value * ext.max_value;

    CheckResult out;
    out.name = "parseval";
    out.tolerance = opts.tol.sampled * std::max(m2_upper, s);
    out.witnesses = {{ext.argmin, f(ext.argmin)}, {ext.argmax, f(ext.argmax)}};
    double residual = m2_upper - s;
    if (opts.exact_polynomial) {
        double lipschitz = 0.0;
        for (std::size_t k = 0; k < samples; ++k) {
            lipschitz = std::max(
                lipschitz, std::abs(coefficient_derivative(coeffs, circle_point(r, k, samples))));
        }
        const double guard = lipschitz * 2.0 * pi * r / static_cast<double>(samples);
        const double m_guarded = std::max(0.0, ext.min_value - guard);
        residual = std::min(residual, s - m_guarded * m_guarded);
        out.detail = fmt::format("S={} m={} M={} guard={}", s, ext.min_value, ext.max_value, guard);
    } else {
        out.detail = fmt::format("S={} M={} (upper inequality only)", s, ext.max_value);
    }
    out.residual = residual;
    return finish(std::move(out));
}

CheckResult verify_parseval(const TruncatedSeries &f, double r, std::size_t samples,
                            const Tolerances &tol)
{
    const Complex c = f.center();
    const Oracle shifted = [&f, c](Complex w) { return evaluate(f, c + w); };
    return verify_parseval(IndexedCoeffs::from(f), shifted, r, samples,
                           {true, Annulus{0.0, f.radius_hint().value_or(infinity)}, tol});
}

CheckResult verify_parseval(const LaurentSeries &l, double r, std::size_t samples,
                            const Tolerances &tol)
{
    return verify_parseval(IndexedCoeffs::from(l), laurent_oracle(l), r, samples,
                           {true, l.annulus(), tol});
}

CheckResult verify_cauchy_bounds(const IndexedCoeffs &coeffs, const Oracle &f, double r,
                                 std::size_t samples, Annulus validity, const Tolerances &tol)
{
    if (!(r > 0.0) || !validity.contains(r)) {
        throw Error(ErrorKind::domain,
                    fmt::format("verify_cauchy_bounds: r = {} outside the validity region", r));
    }
    const auto ext = circle_extrema(f, r, samples);
    const double big_m = ext.max_value;
    CheckResult out;
    out.name = "cauchy";
    out.tolerance = tol.sampled;
    out.witnesses = {{ext.argmax, f(ext.argmax)}};
    double worst = infinity;
    int worst_j = coeffs.lowest;
    for (int j = coeffs.lowest; j <= coeffs.highest(); ++j) {
        const double scaled = std::abs(coeffs.at(j)) * std::pow(r, j);
        const double slack = big_m > 0.0 ? 1.0 - scaled / big_m : -scaled;
        if (slack < worst) {
            worst = slack;
            worst_j = j;
        }
    }
    out.residual = worst;
    out.detail = fmt::format("M={} tightest index j={}", big_m, worst_j);
    out = finish(std::move(out));
    if (out.verdict == Verdict::fail) {
        out.witnesses.push_back({Complex(r, 0.0), coeffs.at(worst_j)});
    }
    return out;
}

CheckResult verify_derivative_bound(const TruncatedSeries &f, double bound_m, double big_r,
                                    double r, std::size_t samples, const Tolerances &tol)
{
    if (!(r > 0.0) || !(r < big_r)) {
        throw Error(ErrorKind::invalid_input,
                    fmt::format("verify_derivative_bound needs 0 < r < R, got r={} R={}", r, big_r));
    }
    const Complex c = f.center();
    const Oracle shifted = [&f, c](Complex w) { return evaluate(f, c + w); };
    const double rho = big_r * (1.0 - 1e-2);
    const auto hyp = circle_extrema(shifted, rho, samples);
    if (hyp.max_value > bound_m * (1.0 + tol.sampled)) {
        return inconclusive("derivative-bound",
                            fmt::format("hypothesis sup|f| <= M fails by sampling: {} > {} at |z|={}",
                                        hyp.max_value, bound_m, rho),
                            {{hyp.argmax, shifted(hyp.argmax)}});
    }
    const auto df = derivative(f);
    const auto [rings, angles] = grid_shape(samples);
    double max_df = 0.0;
    Complex arg_df{};
    for (const auto &w : polar_grid(r, rings, angles)) {
        const double v = std::abs(evaluate(df, c + w));
        if (v > max_df) {
            max_df = v;
            arg_df = w;
        }
    }
    const double bound = bound_m / (big_r - r);
    CheckResult out;
    out.name = "derivative-bound";
    out.residual = (bound - max_df) / bound;
    out.tolerance = tol.sampled;
    out.witnesses = {{arg_df, evaluate(df, c + arg_df)}};
    out.detail = fmt::format("max|f'|={} bound M/(R-r)={}; sup|f|<=M checked by sampling only",
                             max_df, bound);
    return finish(std::move(out));
}

CheckResult detect_polynomial_degree(const Oracle &f, const DegreeClaim &claim,
                                     std::vector<double> radii, std::size_t order,
                                     const Tolerances & /*tol*/)
{
    if (radii.empty()) {
        throw Error(ErrorKind::invalid_input, "detect_polynomial_degree: no radii");
    }
    if (order <= claim.degree) {
        throw Error(ErrorKind::invalid_input,
                    "detect_polynomial_degree: order must exceed the claimed degree");
    }
    std::sort(radii.begin(), radii.end());
    if (!(radii.front() > 0.0)) {
        throw Error(ErrorKind::invalid_input, "detect_polynomial_degree: radii must be positive");
    }
    const double r0 = radii.front();
    constexpr std::size_t growth_samples = 256;
    std::vector<Complex> extracted(order + 1u);
    extracted[0] = f(Complex{});
    for (std::size_t n = 1; n <= order; ++n) {
        extracted[n] = alternating_coefficient_extract(f, n, Complex(r0, 0.0));
    }
    double scale = 0.0;
    for (const auto &a : extracted) {
        scale = std::max(scale, std::abs(a));
    }
    const double detect = 1e-8 * std::max(1.0, scale);
    std::size_t detected = 0;
    for (std::size_t n = 0; n <= order; ++n) {
        if (std::abs(extracted[n]) > detect) {
            detected = n;
        }
    }

    CheckResult out;
    out.name = "liouville";
    out.tolerance = 1e-8 * std::max(1.0, claim.a + claim.b);
    double worst = infinity;
    std::size_t worst_n = 0;
    double worst_r = r0;
    for (std::size_t n = 0; n <= order; ++n) {
        const double mag = std::abs(extracted[n]);
        for (const double r : radii) {
            const double bound =
                (claim.a + claim.b * std::pow(r, static_cast<double>(claim.degree)))
                / std::pow(r, static_cast<double>(n));
            if (const double slack = bound - mag; slack < worst) {
                worst = slack;
                worst_n = n;
                worst_r = r;
            }
        }
    }
    // Growth test: the claim itself, sampled on each circle. A sampled value
    // above A + B r^N is a genuine counterexample point.
    double growth = infinity;
    Witness growth_w{};
    double growth_r = r0;
    for (const double r : radii) {
        const auto ext = circle_extrema(f, r, growth_samples);
        const double bound = claim.a + claim.b * std::pow(r, static_cast<double>(claim.degree));
        if (const double slack = (bound - ext.max_value) / std::max(1.0, bound); slack < growth) {
            growth = slack;
            growth_w = {ext.argmax, f(ext.argmax)};
            growth_r = r;
        }
    }
    out.residual = std::min(worst, growth);
    out.classification = fmt::format("degree {}", detected);
    out = finish(std::move(out));
    if (out.verdict == Verdict::pass) {
        out.detail = fmt::format("consistent with degree <= {}; extracted at r = {}", claim.degree,
                                 r0);
        return out;
    }
    if (growth < -out.tolerance) {
        out.witnesses.push_back(growth_w);
        out.detail = fmt::format("|f| = {} exceeds A + B r^{} at r = {}", std::abs(growth_w.value),
                                 claim.degree, growth_r);
    }
    if (worst < -out.tolerance) {
        out.witnesses.push_back({Complex(worst_r, 0.0), extracted[worst_n]});
        out.detail += fmt::format("{}|a_{}| = {} outgrows (A + B r^{}) / r^{} at r = {}",
                                  out.detail.empty() ? "" : "; ", worst_n,
                                  std::abs(extracted[worst_n]), claim.degree, worst_n, worst_r);
    }
    return out;
}

CheckResult verify_schwarz(const TruncatedSeries &f, std::size_t samples, const Tolerances &tol)
{
    if (f.center() != Complex{}) {
        throw Error(ErrorKind::precondition, "verify_schwarz: series must be centered at 0");
    }
    if (std::abs(f[0]) > tol.zero) {
        throw Error(ErrorKind::precondition,
                    fmt::format("verify_schwarz: f(0) = {} is not zero", format_complex(f[0])));
    }
    const auto [rings, angles] = grid_shape(samples);
    const auto boundary = circle_extrema(series_oracle(f), 1.0, angles);
    if (boundary.max_value > 1.0 + tol.sampled) {
        return inconclusive("schwarz",
                            fmt::format("hypothesis |f| <= 1 fails by sampling: {}",
                                        boundary.max_value),
                            {{boundary.argmax, evaluate(f, boundary.argmax)}});
    }
    double energy = 0.0;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        energy += std::norm(f[n]);
    }
    CheckResult out;
    out.name = "schwarz";
    out.tolerance = tol.sampled;
    double worst = 1.0 - energy;
    std::optional<Witness> worst_pt;
    std::optional<Witness> equality_pt;
    for (std::size_t i = 1; i <= rings; ++i) {
        const double rho = static_cast<double>(i) / static_cast<double>(rings);
        for (std::size_t s = 0; s < angles; ++s) {
            const Complex z = circle_point(rho, s, angles);
            const Complex v = evaluate(f, z);
            if (const double slack = rho - std::abs(v); slack < worst) {
                worst = slack;
                worst_pt = Witness{z, v};
            }
            if (i < rings && !equality_pt && std::abs(v) >= rho * (1.0 - tol.sampled)) {
                equality_pt = Witness{z, v};
            }
        }
    }
    out.residual = worst;
    std::size_t mono_n = 0;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        if (std::abs(f[n]) >= 1.0 - tol.sampled) {
            mono_n = n;
            break;
        }
    }
    if (mono_n != 0) {
        out.classification = fmt::format("rotation-monomial omega={} n={}",
                                         format_complex(f[mono_n]), mono_n);
    } else if (equality_pt) {
        out.classification = fmt::format("rotation omega={}",
                                         format_complex(equality_pt->value / equality_pt->point));
        out.witnesses.push_back(*equality_pt);
    }
    out.detail = fmt::format("sum|a_n|^2={}", energy);
    out = finish(std::move(out));
    if (out.verdict == Verdict::fail && worst_pt) {
        out.witnesses.push_back(*worst_pt);
    } else if (out.verdict == Verdict::fail) {
        out.witnesses.push_back({Complex{}, Complex(energy, 0.0)});
    }
    return out;
}

CheckResult clunie_jack(const DifferentiableOracle &f, Complex alpha, std::size_t samples,
                        const Tolerances &tol)
{
    if (std::abs(std::abs(alpha) - 1.0) > 1e-12) {
        throw Error(ErrorKind::invalid_input, "clunie_jack: |alpha| must be 1");
    }
    const Complex fa = f.value(alpha);
    if (!(std::abs(fa) > tol.zero)) {
        throw Error(ErrorKind::degenerate, "clunie_jack: f(alpha) vanishes");
    }
    const Complex q = alpha * f.derivative(alpha) / fa;
    const auto ext = circle_extrema(f.value, 1.0, samples);
    if (ext.max_value > std::abs(fa) * (1.0 + tol.sampled)) {
        return inconclusive("clunie-jack",
                            fmt::format("alpha is not a sampled boundary maximum: |f| = {} at {}",
                                        ext.max_value, format_complex(ext.argmax)),
                            {{alpha, q}, {ext.argmax, f.value(ext.argmax)}});
    }
    const bool vanishes_at_0 = std::abs(f.value(Complex{})) <= tol.zero;
    double slack = std::min(-std::abs(q.imag()), q.real());
    if (vanishes_at_0) {
        slack = std::min(slack, q.real() - 1.0);
    }
    CheckResult out;
    out.name = "clunie-jack";
    out.residual = slack;
    out.tolerance = tol.sampled;
    out.witnesses = {{alpha, q}};
    out.detail = fmt::format("q={} f(0)=0:{} derivative={}", format_complex(q),
                             vanishes_at_0 ? "yes" : "no", to_string(f.source));
    return finish(std::move(out));
}

CheckResult classify_critical_point(const TruncatedSeries &f, Complex z0, const Tolerances &tol)
{
    if (const auto hint = f.radius_hint(); hint && !(std::abs(z0 - f.center()) < *hint)) {
        throw Error(ErrorKind::invalid_input,
                    "classify_critical_point: z0 lies outside the hinted disk");
    }
    const auto g = recenter(f, z0);
    const Complex v = g[0];
    const Complex d = g.order() >= 1 ? g[1] : Complex{};
    double scale = 1.0;
    for (const auto &c : g.coeffs()) {
        scale = std::max(scale, std::abs(c));
    }
    const double ctol = 10.0 * tol.identity * scale;
    const CriticalKind kind = std::abs(v) <= ctol   ? CriticalKind::zero
                              : std::abs(d) <= ctol ? CriticalKind::saddle
                                                    : CriticalKind::regular;

    const auto modulus = [&](Complex z) { return std::abs(evaluate(f, z)); };
    const double h = 1e-5;
    const double gx = (modulus(z0 + h) - modulus(z0 - h)) / (2.0 * h);
    const double gy = (modulus(z0 + Complex(0.0, h)) - modulus(z0 - Complex(0.0, h))) / (2.0 * h);
    const double grad = std::hypot(gx, gy);
    const double grad_tol = tol.derivative * scale;

    CheckResult out;
    out.name = "saddle";
    out.classification = to_string(kind);
    out.tolerance = 0.0;
    out.witnesses = {{z0, v}};
    std::string detail = fmt::format("f(z0)={} f'(z0)={} |grad|f||={}", format_complex(v),
                                     format_complex(d), grad);

    if (kind == CriticalKind::regular) {
        out.residual = grad - grad_tol;
        if (grad > grad_tol) {
            out.verdict = Verdict::pass;
        } else {
            out.verdict = std::abs(d) < 10.0 * grad_tol ? Verdict::inconclusive : Verdict::fail;
        }
        out.detail = std::move(detail);
        return out;
    }
    out.residual = grad_tol - grad;
    bool agrees = grad <= grad_tol;
    if (kind == CriticalKind::saddle) {
        const double eps = 1e-3;
        const double base = std::abs(v);
        double lo = infinity;
        double hi = -infinity;
        for (int q = 0; q < 4; ++q) {
            const Complex z = z0 + eps * unity_node(q, 2);
            const double delta = modulus(z) - base;
            lo = std::min(lo, delta);
            hi = std::max(hi, delta);
            out.witnesses.push_back({z, Complex(delta, 0.0)});
        }
        const bool both_signs = lo < 0.0 && hi > 0.0;
        out.residual = std::min(out.residual, std::min(hi, -lo));
        agrees = agrees && both_signs;
        detail += fmt::format(" directional range [{}, {}]", lo, hi);
    }
    out.verdict = agrees ? Verdict::pass : Verdict::fail;
    out.detail = std::move(detail);
    return out;
}

CheckResult verify_anti_calculus(const DifferentiableOracle &f, double big_r, std::size_t samples,
                                 const Tolerances &tol)
{
    if (!(big_r > 0.0)) {
        throw Error(ErrorKind::invalid_input, "verify_anti_calculus needs R > 0");
    }
    const auto [rings, angles] = grid_shape(samples);
    const auto pts = polar_grid(big_r, rings, angles);
    std::size_t imax = 0;
    std::size_t imin = 0;
    std::vector<double> mags(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        mags[i] = std::abs(f.value(pts[i]));
        if (mags[i] > mags[imax]) {
            imax = i;
        }
        if (mags[i] < mags[imin]) {
            imin = i;
        }
    }
    if (mags[imax] - mags[imin] <= tol.sampled * std::max(1.0, mags[imax])) {
        throw Error(ErrorKind::precondition, "verify_anti_calculus: f is constant on the sampled disk");
    }
    const std::size_t first_boundary = pts.size() - angles;
    const Complex amax = pts[imax];
    const Complex amin = pts[imin];
    const Complex dmax = f.derivative(amax);
    const Complex dmin = f.derivative(amin);
    const Complex fmin = f.value(amin);
    std::vector<Witness> witnesses = {{amax, dmax}, {amin, fmin}};

    const double spacing = std::max(big_r / static_cast<double>(rings),
                                    2.0 * pi * big_r / static_cast<double>(angles));
    const double near_zero = tol.sampled * mags[imax] + std::abs(dmin) * spacing;
    const bool min_is_zero = std::abs(fmin) <= near_zero;
    if (imax < first_boundary) {
        return inconclusive("anti-calculus", "sampled maximum of |f| is not on the boundary ring",
                            std::move(witnesses));
    }
    if (imin < first_boundary && !min_is_zero) {
        return inconclusive("anti-calculus",
                            "sampled minimum of |f| is interior without a detected zero",
                            std::move(witnesses));
    }
    const double thr = tol.derivative * mags[imax];
    const double max_slack = std::abs(dmax) - thr;
    const double min_slack = std::max(near_zero - std::abs(fmin), std::abs(dmin) - thr);
    CheckResult out;
    out.name = "anti-calculus";
    out.residual = std::min(max_slack, min_slack);
    out.tolerance = 0.0;
    out.witnesses = std::move(witnesses);
    out.classification = min_is_zero ? "minimum at a zero of f" : "minimum with f' != 0";
    out.detail = fmt::format("|f'(max)|={} |f(min)|={} |f'(min)|={} derivative={}", std::abs(dmax),
                             std::abs(fmin), std::abs(dmin), to_string(f.source));
    return finish(std::move(out));
}

CheckResult verify_boundary_max(const Oracle &f, double big_r, std::size_t interior_samples,
                                std::size_t boundary_samples, const Tolerances &tol)
{
    if (!(big_r > 0.0)) {
        throw Error(ErrorKind::invalid_input, "verify_boundary_max needs R > 0");
    }
    const auto [rings, angles] = grid_shape(interior_samples);
    // Interior rings stop strictly inside R.
    const auto pts = polar_grid(big_r * static_cast<double>(rings) / static_cast<double>(rings + 1),
                                rings, angles);
    double imax = -1.0;
    double imin = infinity;
    Complex arg_imax{};
    for (const auto &z : pts) {
        const double v = std::abs(f(z));
        if (v > imax) {
            imax = v;
            arg_imax = z;
        }
        imin = std::min(imin, v);
    }
    const auto ring = circle_extrema(f, big_r, boundary_samples);
    const double all_max = std::max(imax, ring.max_value);
    const double all_min = std::min(imin, ring.min_value);
    if (all_max - all_min <= tol.sampled * std::max(1.0, all_max)) {
        throw Error(ErrorKind::precondition, "verify_boundary_max: f is constant on the sampled disk");
    }
    CheckResult out;
    out.name = "boundary-max";
    out.residual = (ring.max_value - imax) / ring.max_value;
    out.tolerance = tol.sampled;
    out.witnesses = {{ring.argmax, f(ring.argmax)}, {arg_imax, f(arg_imax)}};
    out.detail = fmt::format("boundary max {} interior max {}", ring.max_value, imax);
    return finish(std::move(out));
}

CheckResult verify_open_image(const Oracle &f, double r, std::size_t target_count,
                              std::size_t solve_grid, std::uint64_t seed, const Tolerances &tol)
{
    if (!(r > 0.0) || target_count == 0 || solve_grid < 2) {
        throw Error(ErrorKind::invalid_input, "verify_open_image: bad radius or grid sizes");
    }
    const Complex f0 = f(Complex{});
    const std::size_t ring_samples = std::max<std::size_t>(64u, 4u * solve_grid);
    double delta = infinity;
    Complex arg_delta{};
    for (std::size_t s = 0; s < ring_samples; ++s) {
        const Complex z = circle_point(r, s, ring_samples);
        if (const double dist = std::abs(f(z) - f0); dist < delta) {
            delta = dist;
            arg_delta = z;
        }
    }
    if (delta <= tol.sampled * std::max(1.0, std::abs(f0))) {
        return inconclusive("open-image",
                            fmt::format("f(0) is (nearly) attained on |z| = {}: delta = {}", r, delta),
                            {{arg_delta, f(arg_delta)}});
    }

    const double step = 2.0 * r / static_cast<double>(solve_grid - 1);
    std::vector<std::pair<Complex, Complex>> grid;
    for (std::size_t a = 0; a < solve_grid; ++a) {
        for (std::size_t b = 0; b < solve_grid; ++b) {
            const Complex z(-r + step * static_cast<double>(a), -r + step * static_cast<double>(b));
            if (std::abs(z) <= r) {
                grid.emplace_back(z, f(z));
            }
        }
    }

    double worst = 0.0;
    Witness worst_w{};
    Complex worst_target{};
    for (std::size_t t = 0; t < target_count; ++t) {
        const double u1 = counter_uniform(seed, t, 0);
        const double u2 = counter_uniform(seed, t, 1);
        const Complex target = f0 + std::polar(0.5 * delta * std::sqrt(u1), 2.0 * pi * u2);
        Complex best = grid.front().first;
        double best_dist = infinity;
        for (const auto &[z, v] : grid) {
            if (const double dist = std::abs(target - v); dist < best_dist) {
                best_dist = dist;
                best = z;
            }
        }
        // Local refinement: successive 9x9 zooms around the best cell.
        double h = step;
        for (int level = 0; level < 24; ++level) {
            const Complex c = best;
            for (int a = -4; a <= 4; ++a) {
                for (int b = -4; b <= 4; ++b) {
                    const Complex z = c + Complex(h * a / 4.0, h * b / 4.0);
                    if (std::abs(z) > r) {
                        continue;
                    }
                    if (const double dist = std::abs(target - f(z)); dist < best_dist) {
                        best_dist = dist;
                        best = z;
                    }
                }
            }
            h /= 2.0;
        }
        if (best_dist >= worst) {
            worst = best_dist;
            worst_w = {best, f(best)};
            worst_target = target;
        }
    }
    CheckResult out;
    out.name = "open-image";
    out.residual = -worst;
    out.tolerance = 1e-3 * delta;
    out.witnesses = {worst_w};
    out.detail = fmt::format("delta={} worst target {} missed by {}", delta,
                             format_complex(worst_target), worst);
    return finish(std::move(out));
}

CheckResult verify_laurent_uniqueness(const LaurentSeries &l, const std::vector<double> &radii,
                                      std::size_t samples, std::optional<double> claimed_sup,
                                      const Tolerances &tol)
{
    if (radii.empty()) {
        throw Error(ErrorKind::invalid_input, "verify_laurent_uniqueness: no radii");
    }
    for (const double r : radii) {
        if (!l.annulus().contains(r)) {
            throw Error(ErrorKind::domain,
                        fmt::format("verify_laurent_uniqueness: r = {} outside the annulus", r));
        }
    }
    double sup = 0.0;
    if (claimed_sup) {
        sup = *claimed_sup;
    } else {
        for (const double r : radii) {
            sup = std::max(sup, circle_extrema(laurent_oracle(l), r, samples).max_value);
        }
    }
    CheckResult out;
    out.name = "laurent-uniqueness";
    double worst = infinity;
    int worst_j = 0;
    double worst_r = radii.front();
    double max_bound = 0.0;
    for (int j = l.lowest_index(); j <= l.highest_index(); ++j) {
        double bound = infinity;
        double best_r = radii.front();
        for (const double r : radii) {
            if (const double b = sup * std::pow(r, -j); b < bound) {
                bound = b;
                best_r = r;
            }
        }
        max_bound = std::max(max_bound, bound);
        if (const double slack = bound - std::abs(l.coefficient(j)); slack < worst) {
            worst = slack;
            worst_j = j;
            worst_r = best_r;
        }
    }
    out.residual = worst;
    out.tolerance = tol.zero + tol.identity * max_bound;
    out.classification = sup <= out.tolerance ? "vanishing: all coefficients zero" : "";
    out.detail = fmt::format("sup|L|={}{} tightest index j={}", sup, claimed_sup ? " (claimed)" : "",
                             worst_j);
    out = finish(std::move(out));
    if (out.verdict == Verdict::fail) {
        out.witnesses.push_back({Complex(worst_r, 0.0), l.coefficient(worst_j)});
        out.detail += fmt::format("; |a_{}| exceeds its bound at r = {}", worst_j, worst_r);
    }
    return out;
}

CheckResult verify_double_series(const SeriesFamily &family, double r, std::size_t k,
                                 std::size_t samples, const Tolerances &tol)
{
    for (const auto &f : family.members()) {
        if (f.radius_hint() && !(r < *f.radius_hint())) {
            throw Error(ErrorKind::invalid_input,
                        "verify_double_series: r must lie inside every member's hinted disk");
        }
    }
    const auto sum = double_series_sum(family, k);
    std::vector<TruncatedSeries> derivs;
    for (const auto &f : family.members()) {
        derivs.push_back(derivative(f, k));
    }
    const auto [rings, angles] = grid_shape(samples);
    double worst = 0.0;
    Witness worst_w{};
    for (const auto &w : polar_grid(r, rings, angles)) {
        const Complex z = family.center() + w;
        const Complex a = evaluate(sum.series, z);
        Complex b{};
        double mass = 0.0;
        for (const auto &d : derivs) {
            const Complex v = evaluate(d, z);
            b += v;
            mass += std::abs(v);
        }
        if (const double err = std::abs(a - b) / (1.0 + mass); err >= worst) {
            worst = err;
            worst_w = {z, a};
        }
    }
    CheckResult out;
    out.name = "double-series";
    out.residual = -worst;
    out.tolerance = tol.identity;
    out.witnesses = {worst_w};
    out.detail = fmt::format("members={} k={} coefficient discrepancy={}", family.members().size(),
                             k, sum.discrepancy);
    out = finish(std::move(out));
    if (sum.discrepancy > 1e-12) {
        out.verdict = Verdict::fail;
        out.detail += " exceeds 1e-12";
    }
    return out;
}

CheckResult verify_injectivity(const TruncatedSeries &f, std::size_t samples, const Tolerances &tol)
{
    const double radius = injectivity_radius(f, tol.zero);
    const double disk = std::isfinite(radius) ? radius : 1.0;
    const auto [rings, angles] = grid_shape(samples);
    std::vector<Complex> pts = polar_grid(disk, rings, angles);
    std::vector<Complex> vals;
    vals.reserve(pts.size());
    for (auto &p : pts) {
        p += f.center();
        vals.push_back(evaluate(f, p));
    }
    double qmin = infinity;
    Witness worst{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double q = std::abs(vals[i] - vals[j]) / std::abs(pts[i] - pts[j]);
            if (q < qmin) {
                qmin = q;
                worst = {pts[i], vals[i]};
            }
        }
    }
    CheckResult out;
    out.name = "injectivity";
    out.residual = qmin - std::abs(f[1]) / 2.0;
    out.tolerance = 1e-9;
    out.witnesses = {worst};
    out.detail = fmt::format("radius={} sampled disk={} min difference quotient={}", radius, disk,
                             qmin);
    return finish(std::move(out));
}

CheckResult verify_local_representation(const TruncatedSeries &f, const Tolerances &tol)
{
    const auto rep = local_representation(f, tol.zero);
    const auto rec = reconstruct(rep, f.center());
    double err = 0.0;
    double scale = 1.0;
    std::size_t worst_n = 0;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        scale = std::max(scale, std::abs(f[n]));
        if (const double e = std::abs(rec[n] - f[n]); e > err) {
            err = e;
            worst_n = n;
        }
    }
    CheckResult out;
    out.name = "local-rep";
    out.residual = -err / scale;
    out.tolerance = 1e-9;
    out.witnesses = {{f.center(), rep.phi.order() >= 1 ? rep.phi[1] : Complex{}}};
    out.classification = fmt::format("m={} a={}", rep.multiplicity_m,
                                     format_complex(rep.phi.order() >= 1 ? rep.phi[1] : Complex{}));
    out.detail = fmt::format("a0={} worst coefficient index {}", format_complex(rep.a0), worst_n);
    return finish(std::move(out));
}

} // namespace weier
