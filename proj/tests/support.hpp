#ifndef WEIER_TESTS_SUPPORT_HPP
#define WEIER_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include <weier/core.hpp>
#include <weier/random.hpp>
#include <weier/series.hpp>

namespace testing_support
{

using weier::Complex;

// Small deterministic generator for property tests.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : m_seed(seed) {}

    double uniform()
    {
        return weier::counter_uniform(m_seed, 0, m_counter++);
    }
    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform();
    }
    std::size_t index(std::size_t lo, std::size_t hi)
    {
        return lo + static_cast<std::size_t>(uniform() * static_cast<double>(hi - lo + 1));
    }
    // Uniform in the unit box [-1, 1] x [-1, 1].
    Complex box()
    {
        return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    }
    Complex unimodular()
    {
        return std::polar(1.0, uniform(0.0, 2.0 * weier::pi));
    }
    // Uniform in the disk of the given radius.
    Complex disk(double radius)
    {
        return std::polar(radius * std::sqrt(uniform()), uniform(0.0, 2.0 * weier::pi));
    }
    // Unit-box coefficients with a leading coefficient of modulus >= 0.25.
    std::vector<Complex> poly_coeffs(std::size_t degree)
    {
        std::vector<Complex> c(degree + 1);
        for (auto &x : c) {
            x = box();
        }
        while (std::abs(c.back()) < 0.25) {
            c.back() = box();
        }
        return c;
    }
    weier::TruncatedSeries poly(std::size_t degree, std::size_t order)
    {
        auto c = poly_coeffs(degree);
        c.resize(std::max(order, degree) + 1);
        return weier::TruncatedSeries(std::move(c), {}, weier::infinity);
    }

private:
    std::uint64_t m_seed;
    std::uint64_t m_counter = 0;
};

// Direct sum of a_n z^n with std::pow, independent of Horner.
inline Complex naive_eval(const std::vector<Complex> &c, Complex z)
{
    Complex acc{};
    for (std::size_t n = 0; n < c.size(); ++n) {
        acc += c[n] * std::pow(z, static_cast<int>(n));
    }
    return acc;
}

inline double binom(std::size_t n, std::size_t k)
{
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

inline double rel_err(Complex got, Complex want)
{
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

} // namespace testing_support

#endif
