#ifndef WEIER_STRUCTURE_HPP
#define WEIER_STRUCTURE_HPP

#include <cstddef>
#include <vector>

#include <weier/core.hpp>
#include <weier/series.hpp>

namespace weier
{

/// Largest r (bisection, relative precision 1e-6) with
/// sum_{n>=2} n |a_n| r^{n-1} < |a_1| / 2, capped at radius_hint / 2.
///
/// This is a sufficient condition for injectivity on D(z0, r), hence a
/// conservative bound rather than the true injectivity radius. Returns +inf
/// when the tail vanishes and no finite hint caps it.
double injectivity_radius(const TruncatedSeries &f, double threshold = zero_threshold);

/// f(z) = a0 + phi(z - z0)^m with phi(w) = a w (1 + G(w)), a^m = a_m.
struct LocalRepresentation {
    Complex a0;
    std::size_t multiplicity_m;
    /// Centered at 0 in w = z - z0; reliable through order N - m + 1.
    TruncatedSeries phi;
};

/// Principal branch: arg(a) in (-pi/m, pi/m].
LocalRepresentation local_representation(const TruncatedSeries &f,
                                         double threshold = zero_threshold);

/// a0 + phi(w)^m about the original center, at order N.
TruncatedSeries reconstruct(const LocalRepresentation &rep, Complex center);

/// Finitely many series f_mu sharing center and order.
class SeriesFamily
{
public:
    explicit SeriesFamily(std::vector<TruncatedSeries> members);

    const std::vector<TruncatedSeries> &members() const noexcept
    {
        return m_members;
    }
    Complex center() const noexcept
    {
        return m_members.front().center();
    }
    std::size_t order() const noexcept
    {
        return m_members.front().order();
    }

private:
    std::vector<TruncatedSeries> m_members;
};

struct DoubleSeriesSum {
    TruncatedSeries series;
    /// max |route A - route B| over coefficients, relative to the largest
    /// coefficient; zero when k == 0.
    double discrepancy;
};

/// k-th derivative of sum_mu f_mu, computed both as the derivative of the
/// coefficientwise sum and as the sum of member derivatives.
DoubleSeriesSum double_series_sum(const SeriesFamily &family, std::size_t k);

} // namespace weier

#endif
