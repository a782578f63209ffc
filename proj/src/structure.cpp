#include <weier/structure.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace weier
{

namespace
{

// sum_{n>=2} n |a_n| r^{n-1}
double tail_derivative_bound(const TruncatedSeries &f, double r)
{
    double sum = 0.0;
    for (std::size_t n = f.order(); n >= 2; --n) {
        sum = sum * r + static_cast<double>(n) * std::abs(f[n]);
    }
    return sum * r;
}

} // namespace

double injectivity_radius(const TruncatedSeries &f, double threshold)
{
    const double a1 = f.order() >= 1 ? std::abs(f[1]) : 0.0;
    if (!(a1 > threshold)) {
        throw Error(ErrorKind::critical_center,
                    fmt::format("injectivity_radius: |f'(z0)| = {} is below the zero threshold", a1));
    }
    const double target = a1 / 2.0;
    const double cap = f.radius_hint() ? *f.radius_hint() / 2.0 : infinity;
    bool tail_zero = true;
    for (std::size_t n = 2; n <= f.order(); ++n) {
        tail_zero = tail_zero && f[n] == Complex{};
    }
    if (tail_zero) {
        return cap;
    }
    // Bracket [lo, hi] with the condition true at lo and false at hi.
    double lo = 0.0;
    double hi = std::isfinite(cap) ? cap : 1.0;
    while (tail_derivative_bound(f, hi) < target) {
        if (std::isfinite(cap) && hi >= cap) {
            return cap;
        }
        lo = hi;
        hi *= 2.0;
    }
    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (tail_derivative_bound(f, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::min(lo, cap);
}

LocalRepresentation local_representation(const TruncatedSeries &f, double threshold)
{
    const std::size_t order = f.order();
    std::size_t m = 1;
    while (m <= order && !(std::abs(f[m]) > threshold)) {
        ++m;
    }
    if (m > order) {
        throw Error(ErrorKind::degenerate,
                    "local_representation: f - f(z0) vanishes through the truncation order");
    }
    const Complex am = f[m];
    const double md = static_cast<double>(m);
    // A negative real a_m may carry -0 as imaginary part; keep arg in (-pi, pi].
    double angle = std::arg(am);
    if (angle <= -pi) {
        angle = pi;
    }
    const Complex a = std::polar(std::pow(std::abs(am), 1.0 / md), angle / md);

    // f - a0 = a_m w^m (1 + g(w)), g(0) = 0, g reliable through order N - m.
    const std::size_t g_order = order - m;
    std::vector<Complex> g(g_order + 1u);
    for (std::size_t i = 1; i <= g_order; ++i) {
        g[i] = f[m + i] / am;
    }
    std::vector<Complex> one_plus_big_g(g_order + 1u);
    if (g_order == 0) {
        one_plus_big_g[0] = 1.0;
    } else {
        // (1 + G)^m = 1 + g, via the m-th root binomial series composed with g.
        const auto root = compose(binomial_root_series(static_cast<unsigned>(m), g_order),
                                  TruncatedSeries(std::move(g)));
        one_plus_big_g.assign(root.coeffs().begin(), root.coeffs().end());
    }
    std::vector<Complex> phi(g_order + 2u);
    for (std::size_t i = 0; i <= g_order; ++i) {
        phi[i + 1] = a * one_plus_big_g[i];
    }
    return {f[0], m, TruncatedSeries(std::move(phi))};
}

TruncatedSeries reconstruct(const LocalRepresentation &rep, Complex center)
{
    // phi = w psi, so phi^m = w^m psi^m and psi^m through N - m fixes order N.
    const auto phi = rep.phi.coeffs();
    const TruncatedSeries psi(std::vector<Complex>(phi.begin() + 1, phi.end()));
    const auto psi_m = power(psi, static_cast<unsigned>(rep.multiplicity_m));
    std::vector<Complex> c(rep.multiplicity_m, Complex{});
    c.insert(c.end(), psi_m.coeffs().begin(), psi_m.coeffs().end());
    c[0] += rep.a0;
    return TruncatedSeries(std::move(c), center);
}

SeriesFamily::SeriesFamily(std::vector<TruncatedSeries> members) : m_members(std::move(members))
{
    if (m_members.empty()) {
        throw Error(ErrorKind::invalid_input, "a series family needs at least one member");
    }
    for (const auto &f : m_members) {
        if (f.center() != m_members.front().center() || f.order() != m_members.front().order()) {
            throw Error(ErrorKind::invalid_input,
                        "series family members must share center and order");
        }
    }
}

DoubleSeriesSum double_series_sum(const SeriesFamily &family, std::size_t k)
{
    if (k > family.order()) {
        throw Error(ErrorKind::invalid_input,
                    fmt::format("double_series_sum: k = {} exceeds the order {}", k,
                                family.order()));
    }
    std::optional<double> hint = infinity;
    std::vector<Complex> sum(family.order() + 1u);
    for (const auto &f : family.members()) {
        for (std::size_t n = 0; n <= family.order(); ++n) {
            sum[n] += f[n];
        }
        if (!f.radius_hint()) {
            hint.reset();
        } else if (hint) {
            hint = std::min(*hint, *f.radius_hint());
        }
    }
    const auto route_a = derivative(TruncatedSeries(std::move(sum), family.center(), hint), k);
    if (k == 0) {
        return {route_a, 0.0};
    }
    std::vector<Complex> b(route_a.order() + 1u);
    for (const auto &f : family.members()) {
        const auto df = derivative(f, k);
        for (std::size_t n = 0; n <= df.order(); ++n) {
            b[n] += df[n];
        }
    }
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t n = 0; n <= route_a.order(); ++n) {
        diff = std::max(diff, std::abs(route_a[n] - b[n]));
        scale = std::max(scale, std::abs(route_a[n]));
    }
    return {route_a, scale > 0.0 ? diff / scale : diff};
}

} // namespace weier
