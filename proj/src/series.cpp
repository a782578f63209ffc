#include <weier/series.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace weier
{

const char *to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::invalid_input:
            return "invalid input";
        case ErrorKind::domain:
            return "domain error";
        case ErrorKind::division_at_center:
            return "division at center";
        case ErrorKind::null_function:
            return "null function";
        case ErrorKind::precondition:
            return "precondition violated";
        case ErrorKind::degenerate:
            return "degenerate input";
        case ErrorKind::singular_node:
            return "singular node";
        case ErrorKind::critical_center:
            return "critical center";
        case ErrorKind::non_finite:
            return "non-finite value";
        case ErrorKind::parse:
            return "parse error";
        case ErrorKind::io:
            return "I/O error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), m_kind(kind) {}

namespace
{

std::optional<double> min_hint(const std::optional<double> &a, const std::optional<double> &b)
{
    if (a && b) {
        return std::min(*a, *b);
    }
    return std::nullopt;
}

void require_same_center(const TruncatedSeries &f, const TruncatedSeries &g, const char *op)
{
    if (f.center() != g.center()) {
        throw Error(ErrorKind::invalid_input,
                    fmt::format("{}: center mismatch ({}{:+}i vs {}{:+}i)", op, f.center().real(),
                                f.center().imag(), g.center().real(), g.center().imag()));
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, Complex center,
                                 std::optional<double> radius_hint)
    : m_coeffs(std::move(coeffs)), m_center(center), m_radius_hint(radius_hint)
{
    if (m_coeffs.empty()) {
        throw Error(ErrorKind::invalid_input, "a truncated series needs at least one coefficient");
    }
    for (std::size_t n = 0; n < m_coeffs.size(); ++n) {
        if (!is_finite(m_coeffs[n])) {
            throw Error(ErrorKind::non_finite, fmt::format("coefficient a_{} is not finite", n));
        }
    }
    if (!is_finite(m_center)) {
        throw Error(ErrorKind::non_finite, "series center is not finite");
    }
    if (m_radius_hint && !(*m_radius_hint > 0.0)) {
        throw Error(ErrorKind::invalid_input, "radius hint must be positive");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order, Complex center)
{
    return TruncatedSeries(std::vector<Complex>(order + 1u), center, infinity);
}

TruncatedSeries TruncatedSeries::constant(Complex c, std::size_t order, Complex center)
{
    std::vector<Complex> coeffs(order + 1u);
    coeffs[0] = c;
    return TruncatedSeries(std::move(coeffs), center, infinity);
}

TruncatedSeries TruncatedSeries::variable(std::size_t order, Complex center)
{
    std::vector<Complex> coeffs(order + 1u);
    coeffs[0] = center;
    if (order >= 1u) {
        coeffs[1] = 1.0;
    }
    return TruncatedSeries(std::move(coeffs), center, infinity);
}

std::size_t TruncatedSeries::degree() const noexcept
{
    for (std::size_t n = m_coeffs.size(); n-- > 0;) {
        if (m_coeffs[n] != Complex{}) {
            return n;
        }
    }
    return 0;
}

TruncatedSeries TruncatedSeries::with_radius_hint(std::optional<double> hint) const
{
    return TruncatedSeries(m_coeffs, m_center, hint);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order >= this->order()) {
        return *this;
    }
    return TruncatedSeries(std::vector<Complex>(m_coeffs.begin(), m_coeffs.begin() + order + 1),
                           m_center, m_radius_hint);
}

TruncatedSeries exp_series(std::size_t order)
{
    std::vector<Complex> c(order + 1u);
    double term = 1.0;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            term /= static_cast<double>(n);
        }
        c[n] = term;
    }
    return TruncatedSeries(std::move(c), {}, infinity);
}

TruncatedSeries sin_series(std::size_t order)
{
    auto e = exp_series(order);
    std::vector<Complex> c(order + 1u);
    for (std::size_t n = 1; n <= order; n += 2) {
        c[n] = ((n / 2) % 2 == 0) ? e[n] : -e[n];
    }
    return TruncatedSeries(std::move(c), {}, infinity);
}

TruncatedSeries cos_series(std::size_t order)
{
    auto e = exp_series(order);
    std::vector<Complex> c(order + 1u);
    for (std::size_t n = 0; n <= order; n += 2) {
        c[n] = ((n / 2) % 2 == 0) ? e[n] : -e[n];
    }
    return TruncatedSeries(std::move(c), {}, infinity);
}

TruncatedSeries geometric_series(std::size_t order)
{
    return TruncatedSeries(std::vector<Complex>(order + 1u, Complex{1.0}), {}, 1.0);
}

TruncatedSeries linear_combine(Complex lambda, const TruncatedSeries &f, Complex mu,
                               const TruncatedSeries &g)
{
    require_same_center(f, g, "linear_combine");
    const auto order = std::min(f.order(), g.order());
    std::vector<Complex> c(order + 1u);
    for (std::size_t n = 0; n <= order; ++n) {
        c[n] = lambda * f[n] + mu * g[n];
    }
    return TruncatedSeries(std::move(c), f.center(), min_hint(f.radius_hint(), g.radius_hint()));
}

TruncatedSeries cauchy_product(const TruncatedSeries &f, const TruncatedSeries &g)
{
    require_same_center(f, g, "cauchy_product");
    const auto order = std::min(f.order(), g.order());
    std::vector<Complex> c(order + 1u);
    for (std::size_t n = 0; n <= order; ++n) {
        Complex acc{};
        for (std::size_t j = 0; j <= n; ++j) {
            acc += f[j] * g[n - j];
        }
        c[n] = acc;
    }
    return TruncatedSeries(std::move(c), f.center(), min_hint(f.radius_hint(), g.radius_hint()));
}

TruncatedSeries power(const TruncatedSeries &f, unsigned p)
{
    if (p == 0) {
        throw Error(ErrorKind::invalid_input, "power: exponent must be positive");
    }
    auto result = f;
    for (unsigned i = 1; i < p; ++i) {
        result = cauchy_product(result, f);
    }
    return result;
}

TruncatedSeries derivative(const TruncatedSeries &f)
{
    if (f.order() == 0) {
        return TruncatedSeries(std::vector<Complex>(1u), f.center(), f.radius_hint());
    }
    std::vector<Complex> c(f.order());
    for (std::size_t n = 1; n <= f.order(); ++n) {
        c[n - 1] = static_cast<double>(n) * f[n];
    }
    return TruncatedSeries(std::move(c), f.center(), f.radius_hint());
}

TruncatedSeries derivative(const TruncatedSeries &f, std::size_t k)
{
    auto result = f;
    for (std::size_t i = 0; i < k; ++i) {
        result = derivative(result);
    }
    return result;
}

Complex evaluate(const TruncatedSeries &f, Complex z)
{
    const Complex w = z - f.center();
    const auto c = f.coeffs();
    Complex acc = c.back();
    for (std::size_t n = c.size() - 1; n-- > 0;) {
        acc = acc * w + c[n];
    }
    return acc;
}

RadiusEstimate radius_estimate(const TruncatedSeries &f, std::size_t tail_window, double threshold)
{
    if (tail_window == 0 || tail_window > f.order() + 1) {
        throw Error(ErrorKind::invalid_input,
                    fmt::format("radius_estimate: tail window {} outside [1, {}]", tail_window,
                                f.order() + 1));
    }
    double root_max = 0.0;
    for (std::size_t n = f.order() + 1 - tail_window; n <= f.order(); ++n) {
        const double mag = std::abs(f[n]);
        if (n == 0 || mag <= threshold) {
            continue;
        }
        root_max = std::max(root_max, std::pow(mag, 1.0 / static_cast<double>(n)));
    }
    return {root_max == 0.0 ? infinity : 1.0 / root_max, tail_window};
}

RadiusEstimate radius_estimate(const TruncatedSeries &f)
{
    return radius_estimate(f, std::max<std::size_t>(1u, (f.order() + 1) / 2));
}

TruncatedSeries recenter(const TruncatedSeries &f, Complex w)
{
    const Complex shift = w - f.center();
    const auto hint = f.radius_hint();
    if (hint && !(std::abs(shift) < *hint)) {
        throw Error(ErrorKind::invalid_input,
                    fmt::format("recenter: |w - z0| = {} is outside the hinted disk of radius {}",
                                std::abs(shift), *hint));
    }
    // Repeated synthetic division by (z - w): after pass i, b[i] is final.
    std::vector<Complex> b(f.coeffs().begin(), f.coeffs().end());
    const std::size_t order = f.order();
    if (shift != Complex{}) {
        for (std::size_t i = 0; i < order; ++i) {
            for (std::size_t j = order; j-- > i;) {
                b[j] += shift * b[j + 1];
            }
        }
    }
    std::optional<double> new_hint;
    if (hint) {
        new_hint = std::isinf(*hint) ? infinity : *hint - std::abs(shift);
    }
    return TruncatedSeries(std::move(b), w, new_hint);
}

TruncatedSeries reciprocal(const TruncatedSeries &f, double threshold)
{
    if (!(std::abs(f[0]) > threshold)) {
        throw Error(ErrorKind::division_at_center,
                    fmt::format("reciprocal: |a_0| = {} is not above the zero threshold {}",
                                std::abs(f[0]), threshold));
    }
    const Complex inv = 1.0 / f[0];
    std::vector<Complex> b(f.order() + 1u);
    b[0] = inv;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        Complex acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            acc += f[k] * b[n - k];
        }
        b[n] = -inv * acc;
    }
    return TruncatedSeries(std::move(b), f.center(), std::nullopt);
}

TruncatedSeries compose(const TruncatedSeries &f, const TruncatedSeries &g)
{
    const Complex inner = g[0];
    TruncatedSeries outer = f;
    if (inner != f.center()) {
        try {
            outer = recenter(f, inner);
        } catch (const Error &e) {
            throw Error(ErrorKind::domain, fmt::format("compose: {}", e.what()));
        }
    }
    const auto order = std::min(outer.order(), g.order());
    // h = g - g(center) has no constant term, so truncating every Horner step
    // at `order` is exact through that order.
    std::vector<Complex> h_coeffs(g.coeffs().begin(), g.coeffs().begin() + order + 1);
    h_coeffs[0] = 0.0;
    const TruncatedSeries h(std::move(h_coeffs), g.center(), std::nullopt);

    auto acc = TruncatedSeries::constant(outer[order], order, g.center());
    for (std::size_t n = order; n-- > 0;) {
        auto next = cauchy_product(acc, h);
        std::vector<Complex> c(next.coeffs().begin(), next.coeffs().end());
        c[0] += outer[n];
        acc = TruncatedSeries(std::move(c), g.center(), std::nullopt);
    }
    const bool entire = f.radius_hint() && std::isinf(*f.radius_hint()) && g.radius_hint()
                        && std::isinf(*g.radius_hint());
    return acc.with_radius_hint(entire ? std::optional<double>(infinity) : std::nullopt);
}

TruncatedSeries binomial_root_series(unsigned p, std::size_t order)
{
    if (p == 0) {
        throw Error(ErrorKind::invalid_input, "binomial_root_series: p must be positive");
    }
    const double alpha = 1.0 / static_cast<double>(p);
    std::vector<Complex> c(order + 1u);
    double term = 1.0;
    c[0] = term;
    for (std::size_t n = 1; n <= order; ++n) {
        term *= (alpha - static_cast<double>(n - 1)) / static_cast<double>(n);
        c[n] = term;
    }
    return TruncatedSeries(std::move(c), {}, p == 1 ? infinity : 1.0);
}

ZeroFactorization zero_factorization(const TruncatedSeries &f, double threshold)
{
    if (std::abs(f[0]) > threshold) {
        throw Error(ErrorKind::precondition,
                    fmt::format("zero_factorization: |f(z0)| = {} is above the zero threshold",
                                std::abs(f[0])));
    }
    std::size_t k = 0;
    while (k <= f.order() && !(std::abs(f[k]) > threshold)) {
        ++k;
    }
    if (k > f.order()) {
        throw Error(ErrorKind::null_function,
                    "zero_factorization: every coefficient is below the zero threshold");
    }
    std::vector<Complex> phi(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end());
    return {k, TruncatedSeries(std::move(phi), f.center(), f.radius_hint())};
}

TruncatedSeries reconstruct(const ZeroFactorization &zf)
{
    std::vector<Complex> c(zf.order_k, Complex{});
    c.insert(c.end(), zf.cofactor.coeffs().begin(), zf.cofactor.coeffs().end());
    return TruncatedSeries(std::move(c), zf.cofactor.center(), zf.cofactor.radius_hint());
}

LaurentSeries::LaurentSeries(std::vector<Complex> neg, std::vector<Complex> pos, Annulus annulus)
    : m_neg(std::move(neg)), m_pos(std::move(pos)), m_annulus(annulus)
{
    if (m_pos.empty()) {
        m_pos.push_back(0.0);
    }
    if (!(m_annulus.inner >= 0.0) || !(m_annulus.inner < m_annulus.outer)) {
        throw Error(ErrorKind::invalid_input,
                    fmt::format("Laurent annulus needs 0 <= r1 < r2, got ({}, {})", m_annulus.inner,
                                m_annulus.outer));
    }
    for (const auto &c : m_neg) {
        if (!is_finite(c)) {
            throw Error(ErrorKind::non_finite, "Laurent coefficient is not finite");
        }
    }
    for (const auto &c : m_pos) {
        if (!is_finite(c)) {
            throw Error(ErrorKind::non_finite, "Laurent coefficient is not finite");
        }
    }
}

Complex LaurentSeries::coefficient(int j) const noexcept
{
    if (j >= 0) {
        return j <= highest_index() ? m_pos[static_cast<std::size_t>(j)] : Complex{};
    }
    return -j <= static_cast<int>(m_neg.size()) ? m_neg[static_cast<std::size_t>(-j - 1)] : Complex{};
}

Complex laurent_evaluate(const LaurentSeries &l, Complex z)
{
    const double r = std::abs(z);
    if (!l.annulus().contains(r)) {
        throw Error(ErrorKind::domain,
                    fmt::format("laurent_evaluate: |z| = {} outside the annulus ({}, {})", r,
                                l.annulus().inner, l.annulus().outer));
    }
    Complex neg{};
    const auto nc = l.neg_coeffs();
    if (!nc.empty()) {
        const Complex w = 1.0 / z;
        for (std::size_t m = nc.size(); m-- > 0;) {
            neg = (neg + nc[m]) * w;
        }
    }
    const auto pc = l.pos_coeffs();
    Complex pos = pc.back();
    for (std::size_t k = pc.size() - 1; k-- > 0;) {
        pos = pos * z + pc[k];
    }
    return neg + pos;
}

LaurentSeries to_laurent(const TruncatedSeries &f)
{
    if (f.center() != Complex{}) {
        throw Error(ErrorKind::invalid_input, "only series centered at 0 convert to Laurent form");
    }
    return LaurentSeries({}, std::vector<Complex>(f.coeffs().begin(), f.coeffs().end()),
                         Annulus{0.0, f.radius_hint().value_or(infinity)});
}

namespace
{

Annulus intersect(const Annulus &a, const Annulus &b)
{
    return {std::max(a.inner, b.inner), std::min(a.outer, b.outer)};
}

LaurentSeries from_indexed(int lowest, const std::vector<Complex> &values, Annulus annulus)
{
    std::vector<Complex> neg;
    std::vector<Complex> pos;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int j = lowest + static_cast<int>(i);
        if (j < 0) {
            neg.resize(std::max<std::size_t>(neg.size(), static_cast<std::size_t>(-j)));
            neg[static_cast<std::size_t>(-j - 1)] = values[i];
        } else {
            pos.push_back(values[i]);
        }
    }
    return LaurentSeries(std::move(neg), std::move(pos), annulus);
}

} // namespace

LaurentSeries laurent_linear_combine(Complex lambda, const LaurentSeries &f, Complex mu,
                                     const LaurentSeries &g)
{
    const int lo = std::min(f.lowest_index(), g.lowest_index());
    const int hi = std::max(f.highest_index(), g.highest_index());
    std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1));
    for (int j = lo; j <= hi; ++j) {
        v[static_cast<std::size_t>(j - lo)] = lambda * f.coefficient(j) + mu * g.coefficient(j);
    }
    return from_indexed(lo, v, intersect(f.annulus(), g.annulus()));
}

LaurentSeries laurent_product(const LaurentSeries &f, const LaurentSeries &g)
{
    const int lo = f.lowest_index() + g.lowest_index();
    const int hi = f.highest_index() + g.highest_index();
    std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1));
    for (int a = f.lowest_index(); a <= f.highest_index(); ++a) {
        for (int b = g.lowest_index(); b <= g.highest_index(); ++b) {
            v[static_cast<std::size_t>(a + b - lo)] += f.coefficient(a) * g.coefficient(b);
        }
    }
    return from_indexed(lo, v, intersect(f.annulus(), g.annulus()));
}

Complex IndexedCoeffs::at(int j) const noexcept
{
    if (j < lowest || j > highest()) {
        return {};
    }
    return values[static_cast<std::size_t>(j - lowest)];
}

IndexedCoeffs IndexedCoeffs::from(const TruncatedSeries &f)
{
    return {0, std::vector<Complex>(f.coeffs().begin(), f.coeffs().end())};
}

IndexedCoeffs IndexedCoeffs::from(const LaurentSeries &l)
{
    IndexedCoeffs out{l.lowest_index(), {}};
    for (int j = l.lowest_index(); j <= l.highest_index(); ++j) {
        out.values.push_back(l.coefficient(j));
    }
    return out;
}

} // namespace weier
