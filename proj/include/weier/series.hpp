#ifndef WEIER_SERIES_HPP
#define WEIER_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <weier/core.hpp>

namespace weier
{

/// Taylor coefficients a_0..a_N of sum a_n (z - z0)^n.
///
/// The order N is the highest retained index and is user-meaningful: trailing
/// zeros are never trimmed. Binary operations truncate to the smaller order,
/// which is the longest prefix both operands determine. The optional radius
/// hint is a caller-supplied lower bound for the radius of convergence; it is
/// propagated but never certified.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(std::vector<Complex> coeffs, Complex center = {},
                             std::optional<double> radius_hint = std::nullopt);

    static TruncatedSeries zero(std::size_t order, Complex center = {});
    static TruncatedSeries constant(Complex c, std::size_t order, Complex center = {});
    /// The series of z itself about `center` (coefficients [center, 1, 0, ...]).
    static TruncatedSeries variable(std::size_t order, Complex center = {});

    Complex center() const noexcept
    {
        return m_center;
    }
    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1u;
    }
    std::span<const Complex> coeffs() const noexcept
    {
        return m_coeffs;
    }
    const Complex &operator[](std::size_t n) const
    {
        return m_coeffs[n];
    }
    std::optional<double> radius_hint() const noexcept
    {
        return m_radius_hint;
    }

    /// Highest index with an exactly nonzero coefficient; 0 for the zero series.
    std::size_t degree() const noexcept;

    TruncatedSeries with_radius_hint(std::optional<double> hint) const;
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<Complex> m_coeffs;
    Complex m_center;
    std::optional<double> m_radius_hint;
};

// Entire builtins, radius hint +inf.
TruncatedSeries exp_series(std::size_t order);
TruncatedSeries sin_series(std::size_t order);
TruncatedSeries cos_series(std::size_t order);
/// All-ones coefficients, i.e. 1/(1 - z), radius hint 1.
TruncatedSeries geometric_series(std::size_t order);

TruncatedSeries linear_combine(Complex lambda, const TruncatedSeries &f, Complex mu,
                               const TruncatedSeries &g);
TruncatedSeries cauchy_product(const TruncatedSeries &f, const TruncatedSeries &g);
/// f^p by repeated Cauchy products, p >= 1.
TruncatedSeries power(const TruncatedSeries &f, unsigned p);
TruncatedSeries derivative(const TruncatedSeries &f);
TruncatedSeries derivative(const TruncatedSeries &f, std::size_t k);

/// Horner evaluation of the partial sum, highest coefficient first.
Complex evaluate(const TruncatedSeries &f, Complex z);

struct RadiusEstimate {
    double value;
    std::size_t tail_window;
};

/// Windowed stand-in for the Cauchy-Hadamard limsup: 1 / max |a_n|^(1/n) over
/// the last `tail_window` indices (n = 0 and near-zero coefficients skipped).
RadiusEstimate radius_estimate(const TruncatedSeries &f, std::size_t tail_window,
                               double threshold = zero_threshold);
/// Same with the default window: the last half of the coefficients.
RadiusEstimate radius_estimate(const TruncatedSeries &f);

/// Re-expands f about w. Exact (up to rounding) on the truncated polynomial.
TruncatedSeries recenter(const TruncatedSeries &f, Complex w);

TruncatedSeries reciprocal(const TruncatedSeries &f, double threshold = zero_threshold);

/// Taylor coefficients of f(g(z)) about g.center(). When g's value at its
/// center differs from f.center(), f is first recentered there.
TruncatedSeries compose(const TruncatedSeries &f, const TruncatedSeries &g);

/// Coefficients binom(1/p, n), n = 0..order: a p-th root of 1 + z on |z| < 1.
TruncatedSeries binomial_root_series(unsigned p, std::size_t order);

struct ZeroFactorization {
    std::size_t order_k;
    TruncatedSeries cofactor;
};

ZeroFactorization zero_factorization(const TruncatedSeries &f, double threshold = zero_threshold);
/// (z - z0)^k * phi, at the order of the factorized series.
TruncatedSeries reconstruct(const ZeroFactorization &zf);

/// sum_{m=1}^{n} a_{-m} z^{-m} + sum_{k=0}^{m} a_k z^k on an annulus about 0.
class LaurentSeries
{
public:
    /// neg holds a_{-1}, a_{-2}, ...; pos holds a_0, a_1, ... (at least a_0).
    LaurentSeries(std::vector<Complex> neg, std::vector<Complex> pos, Annulus annulus = {});

    std::span<const Complex> neg_coeffs() const noexcept
    {
        return m_neg;
    }
    std::span<const Complex> pos_coeffs() const noexcept
    {
        return m_pos;
    }
    const Annulus &annulus() const noexcept
    {
        return m_annulus;
    }

    int lowest_index() const noexcept
    {
        return -static_cast<int>(m_neg.size());
    }
    int highest_index() const noexcept
    {
        return static_cast<int>(m_pos.size()) - 1;
    }
    /// a_j, zero outside the stored range.
    Complex coefficient(int j) const noexcept;

    friend bool operator==(const LaurentSeries &a, const LaurentSeries &b)
    {
        return a.m_neg == b.m_neg && a.m_pos == b.m_pos && a.m_annulus.inner == b.m_annulus.inner
               && a.m_annulus.outer == b.m_annulus.outer;
    }

private:
    std::vector<Complex> m_neg;
    std::vector<Complex> m_pos;
    Annulus m_annulus;
};

Complex laurent_evaluate(const LaurentSeries &l, Complex z);

/// Promotes a power series centered at 0 to a Laurent series on D(0, hint).
LaurentSeries to_laurent(const TruncatedSeries &f);

// Laurent polynomial ring operations used by expression elaboration. The
// annulus of a result is the intersection of the operands' annuli.
LaurentSeries laurent_linear_combine(Complex lambda, const LaurentSeries &f, Complex mu,
                                     const LaurentSeries &g);
LaurentSeries laurent_product(const LaurentSeries &f, const LaurentSeries &g);

/// a_j for j = lowest .. lowest + values.size() - 1.
struct IndexedCoeffs {
    int lowest = 0;
    std::vector<Complex> values;

    int highest() const noexcept
    {
        return lowest + static_cast<int>(values.size()) - 1;
    }
    Complex at(int j) const noexcept;

    static IndexedCoeffs from(const TruncatedSeries &f);
    static IndexedCoeffs from(const LaurentSeries &l);
};

} // namespace weier

#endif
