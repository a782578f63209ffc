#include <weier/unity.hpp>

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace weier
{

Complex unity_node(std::int64_t k, std::size_t n) noexcept
{
    const auto period = static_cast<std::int64_t>(2 * n);
    const std::int64_t m = ((k % period) + period) % period;
    // Quarter turns: 2m / n in {0, 1, 2, 3} exactly.
    if ((2 * m) % static_cast<std::int64_t>(n) == 0) {
        switch ((2 * m) / static_cast<std::int64_t>(n)) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
        }
    }
    const double angle = pi * static_cast<double>(m) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

UnityGrid::UnityGrid(std::size_t n) : m_n(n)
{
    if (n == 0) {
        throw Error(ErrorKind::invalid_input, "unity grid needs n >= 1");
    }
    m_nodes.reserve(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        m_nodes.push_back(unity_node(static_cast<std::int64_t>(k), n));
    }
}

Complex UnityGrid::node(std::int64_t k) const noexcept
{
    const auto period = static_cast<std::int64_t>(m_nodes.size());
    return m_nodes[static_cast<std::size_t>(((k % period) + period) % period)];
}

Complex unity_power_sum(const UnityGrid &grid, std::int64_t j)
{
    Complex acc{};
    for (std::size_t k = 0; k < grid.size(); ++k) {
        // omega^{kj} is itself a node; index arithmetic keeps it exact.
        acc += grid.node(static_cast<std::int64_t>(k) * j);
    }
    return acc;
}

MeanValue polygonal_mean_value(const TruncatedSeries &p, Complex z0, Complex z, std::size_t n)
{
    const UnityGrid grid(n);
    Complex sum{};
    double max_sample = 0.0;
    for (const auto &w : grid.nodes()) {
        const Complex v = evaluate(p, z0 + z * w);
        sum += v;
        max_sample = std::max(max_sample, std::abs(v));
    }
    const Complex mean = sum / static_cast<double>(grid.size());
    return {mean, std::abs(mean - evaluate(p, z0)), 1e-10 * (1.0 + max_sample), n >= p.degree()};
}

Complex discrete_cauchy_derivative(const TruncatedSeries &p, Complex z0, Complex z, std::size_t j,
                                   std::size_t n)
{
    if (z == Complex{}) {
        throw Error(ErrorKind::singular_node, "discrete_cauchy_derivative: z must be nonzero");
    }
    if (j > n) {
        throw Error(ErrorKind::invalid_input,
                    fmt::format("discrete_cauchy_derivative: j = {} exceeds n = {}", j, n));
    }
    const UnityGrid grid(n);
    Complex sum{};
    for (const auto &w : grid.nodes()) {
        // zeta_k - z0 is formed as z omega^k directly rather than by subtraction.
        const Complex offset = z * w;
        sum += evaluate(p, z0 + offset) / std::pow(offset, static_cast<int>(j));
    }
    return sum / static_cast<double>(grid.size());
}

Complex alternating_coefficient_extract(const Oracle &f, std::size_t n, Complex z)
{
    if (n == 0) {
        throw Error(ErrorKind::invalid_input, "alternating_coefficient_extract: n must be positive");
    }
    if (z == Complex{}) {
        throw Error(ErrorKind::singular_node, "alternating_coefficient_extract: z must be nonzero");
    }
    const UnityGrid grid(n);
    Complex sum{};
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Complex v = f(z * grid.nodes()[k]);
        if (!is_finite(v)) {
            throw Error(ErrorKind::non_finite,
                        fmt::format("alternating_coefficient_extract: sample {} is not finite", k));
        }
        sum += (k % 2 == 0) ? v : -v;
    }
    return sum / (static_cast<double>(grid.size()) * std::pow(z, static_cast<int>(n)));
}

GutzmerSums gutzmer_identity_sum(const TruncatedSeries &p, Complex z, std::size_t n)
{
    const UnityGrid grid(n);
    double lhs = 0.0;
    for (const auto &w : grid.nodes()) {
        lhs += std::norm(evaluate(p, p.center() + z * w));
    }
    const double r2 = std::norm(z);
    double rhs = 0.0;
    double rpow = 1.0;
    for (const auto &a : p.coeffs()) {
        rhs += std::norm(a) * rpow;
        rpow *= r2;
    }
    return {lhs, static_cast<double>(grid.size()) * rhs};
}

Complex circle_point(double r, std::size_t s, std::size_t samples) noexcept
{
    // e^{2 pi i s / S} = e^{i pi (2s) / S}: reuse the exact quarter points.
    return r * unity_node(static_cast<std::int64_t>(2 * s), samples);
}

namespace
{

double checked_abs(const Oracle &f, Complex z, double angle)
{
    const Complex v = f(z);
    if (!is_finite(v)) {
        throw Error(ErrorKind::non_finite,
                    fmt::format("non-finite sample at angle {} (z = {}{:+}i)", angle, z.real(),
                                z.imag()));
    }
    return std::abs(v);
}

// Golden-section search for the extremum of g on [a, b]; sign = +1 maximizes.
double golden_section(const std::function<double(double)> &g, double a, double b, double sign)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = sign * g(c);
    double gd = sign * g(d);
    for (int it = 0; it < 100 && (b - a) > 1e-15 * (1.0 + std::abs(a)); ++it) {
        if (gc > gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = sign * g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = sign * g(d);
        }
    }
    return (a + b) / 2.0;
}

} // namespace

CircleExtrema circle_extrema(const Oracle &f, double r, std::size_t samples, bool polish)
{
    if (samples < 8) {
        throw Error(ErrorKind::invalid_input, "circle_extrema needs at least 8 samples");
    }
    if (!(r > 0.0)) {
        throw Error(ErrorKind::invalid_input, "circle_extrema needs a positive radius");
    }
    CircleExtrema out{r, infinity, -1.0, {}, {}, samples};
    std::size_t imin = 0;
    std::size_t imax = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const double angle = 2.0 * pi * static_cast<double>(s) / static_cast<double>(samples);
        const Complex z = circle_point(r, s, samples);
        const double v = checked_abs(f, z, angle);
        if (v < out.min_value) {
            out.min_value = v;
            out.argmin = z;
            imin = s;
        }
        if (v > out.max_value) {
            out.max_value = v;
            out.argmax = z;
            imax = s;
        }
    }
    if (polish) {
        const double step = 2.0 * pi / static_cast<double>(samples);
        const auto g = [&](double t) { return checked_abs(f, std::polar(r, t), t); };
        const double tmax = golden_section(g, step * (static_cast<double>(imax) - 1.0),
                                           step * (static_cast<double>(imax) + 1.0), 1.0);
        if (const double v = g(tmax); v > out.max_value) {
            out.max_value = v;
            out.argmax = std::polar(r, tmax);
        }
        const double tmin = golden_section(g, step * (static_cast<double>(imin) - 1.0),
                                           step * (static_cast<double>(imin) + 1.0), -1.0);
        if (const double v = g(tmin); v < out.min_value) {
            out.min_value = v;
            out.argmin = std::polar(r, tmin);
        }
    }
    return out;
}

double coefficient_power_sum(const IndexedCoeffs &coeffs, double r)
{
    if (!(r > 0.0)) {
        throw Error(ErrorKind::invalid_input, "coefficient_power_sum needs r > 0");
    }
    double sum = 0.0;
    for (int j = coeffs.lowest; j <= coeffs.highest(); ++j) {
        sum += std::norm(coeffs.at(j)) * std::pow(r, 2 * j);
    }
    return sum;
}

} // namespace weier
