#ifndef WEIER_VERIFY_HPP
#define WEIER_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <weier/core.hpp>
#include <weier/series.hpp>
#include <weier/structure.hpp>
#include <weier/unity.hpp>

namespace weier
{

enum class Verdict { pass, fail, inconclusive };

const char *to_string(Verdict v) noexcept;

struct Witness {
    Complex point;
    Complex value;
};

/// One verifier outcome.
///
/// `residual` is a signed slack: an inequality check passes exactly when
/// residual >= -tolerance. Identity checks report minus their error, so the
/// same rule applies. `classification` names an equality or critical-point
/// case when the check produces one; `detail` is free-form.
struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::inconclusive;
    double residual = 0.0;
    double tolerance = 0.0;
    std::vector<Witness> witnesses;
    std::string classification;
    std::string detail;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<CheckResult> results;
};

struct Tolerances {
    /// Exact algebraic identities, relative.
    double identity = 1e-10;
    /// Inequalities whose sides come from sampling.
    double sampled = 1e-6;
    /// Derivative significance, relative to the local |f| scale.
    double derivative = 1e-6;
    /// Absolute "is zero" threshold.
    double zero = zero_threshold;
};

enum class DerivativeSource { symbolic, central_difference };

const char *to_string(DerivativeSource s) noexcept;

/// An oracle paired with its derivative.
struct DifferentiableOracle {
    Oracle value;
    Oracle derivative;
    DerivativeSource source;

    /// f' from the coefficient list.
    static DifferentiableOracle from_series(const TruncatedSeries &f);
    /// f' by central differences with real step 1e-6 * scale.
    static DifferentiableOracle from_function(Oracle f, double scale = 1.0);
};

Oracle series_oracle(const TruncatedSeries &f);
Oracle laurent_oracle(const LaurentSeries &l);

struct ParsevalOptions {
    /// The oracle is exactly the (Laurent) polynomial of `coeffs`, so the lower
    /// inequality m^2 <= S applies as well.
    bool exact_polynomial = true;
    /// r must lie in this region (the convergence disk or Laurent annulus).
    Annulus validity = {};
    Tolerances tol = {};
};

/// m(r)^2 <= sum |a_j|^2 r^{2j} <= M(r)^2 on a sampled circle.
///
/// The upper side uses the sampled M as is. The lower side deflates the sampled
/// m by max|f'| times the arc step, which bounds how far the true minimum can
/// sit below the grid minimum; the guard size is reported in `detail`.
CheckResult verify_parseval(const IndexedCoeffs &coeffs, const Oracle &f, double r,
                            std::size_t samples, const ParsevalOptions &opts = {});
CheckResult verify_parseval(const TruncatedSeries &f, double r, std::size_t samples,
                            const Tolerances &tol = {});
CheckResult verify_parseval(const LaurentSeries &l, double r, std::size_t samples,
                            const Tolerances &tol = {});

/// |a_j| <= M(r) / r^j for every stored index. The residual is the relative
/// slack min_j (1 - |a_j| r^j / M(r)).
CheckResult verify_cauchy_bounds(const IndexedCoeffs &coeffs, const Oracle &f, double r,
                                 std::size_t samples = 1024, Annulus validity = {},
                                 const Tolerances &tol = {});

/// max over the sampled closed disk D(0, r) of |f'| <= M / (R - r), given
/// sup |f| <= M on D(0, R). The hypothesis is only checked by sampling a
/// circle just inside R; a sampled violation makes the result inconclusive.
CheckResult verify_derivative_bound(const TruncatedSeries &f, double bound_m, double big_r,
                                    double r, std::size_t samples = 1024,
                                    const Tolerances &tol = {});

struct DegreeClaim {
    double a;
    double b;
    std::size_t degree;
};

/// Checks the Gutzmer consequence |a_n| <= (A + B r^N) / r^n of a growth claim
/// |f(z)| <= A + B |z|^N for every n <= order and every radius. Coefficients
/// come from alternating-sum extraction at the smallest radius. A fail means
/// some a_n with n > N outgrows the claim; the witness carries that radius.
/// The claim itself is also sampled on every circle (growth test); a sampled
/// |f| above A + B r^N fails with that point as witness. The detected degree
/// is reported in `classification`.
CheckResult detect_polynomial_degree(const Oracle &f, const DegreeClaim &claim,
                                     std::vector<double> radii, std::size_t order,
                                     const Tolerances &tol = {});

/// Schwarz lemma checks for f(0) = 0 and |f| <= 1 on the unit disk.
CheckResult verify_schwarz(const TruncatedSeries &f, std::size_t samples = 10000,
                           const Tolerances &tol = {});

/// q = alpha f'(alpha) / f(alpha) at a boundary maximum alpha on |z| = 1:
/// real and positive, and >= 1 when f(0) = 0. The first witness is (alpha, q).
CheckResult clunie_jack(const DifferentiableOracle &f, Complex alpha, std::size_t samples = 1024,
                        const Tolerances &tol = {});

enum class CriticalKind { saddle, zero, regular };

const char *to_string(CriticalKind k) noexcept;

/// Classification of z0 for the landscape |f|, cross-checked by a central
/// difference gradient of |f| and, for saddles, by directional samples.
/// The kind is in `classification`.
CheckResult classify_critical_point(const TruncatedSeries &f, Complex z0,
                                    const Tolerances &tol = {});

/// Extrema of |f| on a sampled closed disk: the maximum must sit on the boundary
/// with f' != 0 there; the minimum is a zero of f or has f' != 0.
CheckResult verify_anti_calculus(const DifferentiableOracle &f, double big_r,
                                 std::size_t samples = 4096, const Tolerances &tol = {});

/// max |f| over an interior grid <= max over the boundary ring.
CheckResult verify_boundary_max(const Oracle &f, double big_r, std::size_t interior_samples = 4096,
                                std::size_t boundary_samples = 1024, const Tolerances &tol = {});

/// Every sampled target in D(f(0), delta / 2), delta = dist(f(0), f(|z| = r)),
/// is attained on the closed disk to within 1e-3 delta.
CheckResult verify_open_image(const Oracle &f, double r, std::size_t target_count = 16,
                              std::size_t solve_grid = 101, std::uint64_t seed = 0,
                              const Tolerances &tol = {});

/// With s the sampled sup of |L| over the given circles (or a claimed bound),
/// every |a_j| <= s min_r r^{-j}. A vanishing s forces all coefficients to 0.
CheckResult verify_laurent_uniqueness(const LaurentSeries &l, const std::vector<double> &radii,
                                      std::size_t samples = 1024,
                                      std::optional<double> claimed_sup = std::nullopt,
                                      const Tolerances &tol = {});

/// The k-th derivative of the summed family agrees with the sum of member
/// derivatives at sampled points of |z| <= r.
CheckResult verify_double_series(const SeriesFamily &family, double r, std::size_t k,
                                 std::size_t samples = 512, const Tolerances &tol = {});

/// Difference quotients on a sampled disk of injectivity_radius(f) stay above
/// |a_1| / 2.
CheckResult verify_injectivity(const TruncatedSeries &f, std::size_t samples = 1000,
                               const Tolerances &tol = {});

/// a0 + phi^m reproduces f through its order.
CheckResult verify_local_representation(const TruncatedSeries &f, const Tolerances &tol = {});

} // namespace weier

#endif
