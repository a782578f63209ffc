#ifndef WEIER_CORE_HPP
#define WEIER_CORE_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace weier
{

using Complex = std::complex<double>;

/// Absolute threshold below which a coefficient or value counts as zero.
inline constexpr double zero_threshold = 1e-12;

inline constexpr double infinity = std::numeric_limits<double>::infinity();

inline constexpr double pi = 3.141592653589793238462643383279502884;

enum class ErrorKind {
    invalid_input,
    domain,
    division_at_center,
    null_function,
    precondition,
    degenerate,
    singular_node,
    critical_center,
    non_finite,
    parse,
    io,
};

const char *to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what);

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }

private:
    ErrorKind m_kind;
};

inline bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Open annulus inner < |z| < outer. A disk is the case inner == 0.
struct Annulus {
    double inner = 0.0;
    double outer = infinity;

    bool contains(double r) const noexcept
    {
        return inner < r && r < outer;
    }
};

} // namespace weier

#endif
