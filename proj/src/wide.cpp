#include <weier/wide.hpp>

#include <boost/math/constants/constants.hpp>
#include <fmt/format.h>

namespace weier
{

WideComplex to_wide(Complex z)
{
    return WideComplex(WideReal(z.real()), WideReal(z.imag()));
}

Complex to_narrow(const WideComplex &z)
{
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

WideComplex alternating_coefficient_extract(const WideOracle &f, std::size_t n,
                                            const WideComplex &z)
{
    if (n == 0) {
        throw Error(ErrorKind::invalid_input, "alternating_coefficient_extract: n must be positive");
    }
    if (z == WideComplex(0)) {
        throw Error(ErrorKind::singular_node, "alternating_coefficient_extract: z must be nonzero");
    }
    const WideReal wide_pi = boost::math::constants::pi<WideReal>();
    WideComplex sum(0);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        const WideReal angle = wide_pi * WideReal(k) / WideReal(n);
        const WideComplex node(cos(angle), sin(angle));
        const WideComplex v = f(z * node);
        if (!is_finite(to_narrow(v))) {
            throw Error(ErrorKind::non_finite,
                        fmt::format("alternating_coefficient_extract: sample {} is not finite", k));
        }
        if (k % 2 == 0) {
            sum += v;
        } else {
            sum -= v;
        }
    }
    return sum / (WideReal(2 * n) * pow(z, static_cast<int>(n)));
}

WideComplex evaluate_wide(const TruncatedSeries &f, const WideComplex &z)
{
    const WideComplex w = z - to_wide(f.center());
    const auto c = f.coeffs();
    WideComplex acc = to_wide(c.back());
    for (std::size_t n = c.size() - 1; n-- > 0;) {
        acc = acc * w + to_wide(c[n]);
    }
    return acc;
}

} // namespace weier
