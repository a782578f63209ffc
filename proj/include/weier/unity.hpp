#ifndef WEIER_UNITY_HPP
#define WEIER_UNITY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <weier/core.hpp>
#include <weier/series.hpp>

namespace weier
{

using Oracle = std::function<Complex(Complex)>;

/// The 2n nodes omega^k, omega = e^{i pi / n}, k = 0..2n-1.
///
/// Nodes come from their angles, never from repeated multiplication, and the
/// quarter points (1, i, -1, -i) are exact whenever they belong to the grid.
class UnityGrid
{
public:
    explicit UnityGrid(std::size_t n);

    std::size_t n() const noexcept
    {
        return m_n;
    }
    std::size_t size() const noexcept
    {
        return m_nodes.size();
    }
    Complex omega() const noexcept
    {
        return m_nodes[1];
    }
    std::span<const Complex> nodes() const noexcept
    {
        return m_nodes;
    }
    /// omega^k for any integer k.
    Complex node(std::int64_t k) const noexcept;

private:
    std::size_t m_n;
    std::vector<Complex> m_nodes;
};

/// Unit-modulus point e^{i pi k / n}, exact at multiples of pi/2.
Complex unity_node(std::int64_t k, std::size_t n) noexcept;

/// sum_k omega^{kj}: 2n when 2n divides j, zero otherwise.
Complex unity_power_sum(const UnityGrid &grid, std::int64_t j);

struct MeanValue {
    Complex mean;
    double residual;
    /// 1e-10 (1 + max_k |P(zeta_k)|): the residual must stay below it.
    double bound;
    /// n >= degree(P); the identity is not guaranteed otherwise.
    bool contract_ok;
};

/// (1/2n) sum_k P(z0 + z omega^k) against P(z0).
MeanValue polygonal_mean_value(const TruncatedSeries &p, Complex z0, Complex z, std::size_t n);

/// (1/2n) sum_k P(zeta_k) / (zeta_k - z0)^j with zeta_k = z0 + z omega^k,
/// which is P^{(j)}(z0) / j! for n >= degree(P) and 0 <= j <= n.
Complex discrete_cauchy_derivative(const TruncatedSeries &p, Complex z0, Complex z, std::size_t j,
                                   std::size_t n);

/// [sum_k (-1)^k f(z omega^k)] / (2n z^n) with omega = e^{i pi / n}.
///
/// Approximates a_n of f's Taylor series at 0; the first contaminating index is
/// 3n, so the relative error is O(|z|^{2n}). The alternating sum cancels every
/// index below n, which magnifies the oracle's rounding by 1/(2n |z|^n): see
/// wide.hpp for a multiprecision overload when |z|^n nears machine epsilon.
Complex alternating_coefficient_extract(const Oracle &f, std::size_t n, Complex z);

struct GutzmerSums {
    double lhs;
    double rhs;
};

/// lhs = sum_k |P(z omega^k)|^2, rhs = 2n sum_j |a_j|^2 |z|^{2j}.
GutzmerSums gutzmer_identity_sum(const TruncatedSeries &p, Complex z, std::size_t n);

struct CircleExtrema {
    double radius;
    double min_value;
    double max_value;
    Complex argmin;
    Complex argmax;
    std::size_t sample_count;
};

/// Grid point r e^{2 pi i s / samples}.
Complex circle_point(double r, std::size_t s, std::size_t samples) noexcept;

/// min/max of |f| on the uniform grid of |z| = r; ties go to the lowest index.
/// With `polish`, a golden-section search around the best cells may replace the
/// grid extrema with better off-grid points.
CircleExtrema circle_extrema(const Oracle &f, double r, std::size_t samples, bool polish = false);

/// sum_j |a_j|^2 r^{2j} over every stored index, negative ones included.
double coefficient_power_sum(const IndexedCoeffs &coeffs, double r);

} // namespace weier

#endif
