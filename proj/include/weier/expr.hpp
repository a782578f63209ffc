#ifndef WEIER_EXPR_HPP
#define WEIER_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <weier/core.hpp>
#include <weier/series.hpp>

namespace weier
{

enum class ExprKind {
    literal,  // non-negative real or imaginary number
    variable, // z
    builtin,  // bare exp, sin or cos: the series itself
    neg,
    add,
    sub,
    mul,
    div,
    pow,
    call, // exp sin cos recip root compose recenter derive laurent
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind = ExprKind::literal;
    Complex value{};
    /// Exponent of pow, p of root.
    unsigned integer = 0;
    /// Builtin or function name.
    std::string name;
    std::vector<ExprPtr> args;
    /// laurent only: args[0, split) is the negative list, the rest the positive list.
    std::size_t split = 0;
};

/// Structural equality.
bool operator==(const Expr &a, const Expr &b);

/// Recursive descent with precedence ^ > unary - > * / > + -. Errors are
/// ErrorKind::parse with a "line L, column C" prefix; `first_line` numbers the
/// first line of `text`.
ExprPtr parse_series_expr(std::string_view text, std::size_t first_line = 1);

/// Fully parenthesized text that parses back to an equal tree.
std::string print_expr(const Expr &e);

using Elaborated = std::variant<TruncatedSeries, LaurentSeries>;

/// Builds the series of `e` about 0 at the given truncation order.
Elaborated elaborate(const Expr &e, std::size_t order);

} // namespace weier

#endif
