#ifndef WEIER_WIDE_HPP
#define WEIER_WIDE_HPP

#include <cstddef>
#include <functional>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <weier/core.hpp>
#include <weier/series.hpp>

namespace weier
{

// 50 decimal digits: enough headroom for coefficient extraction at |z|^n far
// below double epsilon.
using WideReal = boost::multiprecision::cpp_bin_float_50;
using WideComplex = boost::multiprecision::cpp_complex_50;
using WideOracle = std::function<WideComplex(const WideComplex &)>;

WideComplex to_wide(Complex z);
Complex to_narrow(const WideComplex &z);

/// Multiprecision overload of the alternating-sum coefficient extractor.
WideComplex alternating_coefficient_extract(const WideOracle &f, std::size_t n,
                                            const WideComplex &z);

/// Horner evaluation in wide arithmetic; the double coefficients convert exactly.
WideComplex evaluate_wide(const TruncatedSeries &f, const WideComplex &z);

} // namespace weier

#endif
