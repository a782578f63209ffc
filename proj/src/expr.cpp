#include <weier/expr.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <utility>

#include <fmt/format.h>

namespace weier
{

bool operator==(const Expr &a, const Expr &b)
{
    if (a.kind != b.kind || a.value != b.value || a.integer != b.integer || a.name != b.name
        || a.split != b.split || a.args.size() != b.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!(*a.args[i] == *b.args[i])) {
            return false;
        }
    }
    return true;
}

namespace
{

enum class Tok { number, imaginary, ident, punct, end };

struct Token {
    Tok type;
    std::string text;
    double number = 0.0;
    std::size_t line;
    std::size_t column;
};

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string &msg)
{
    throw Error(ErrorKind::parse, fmt::format("line {}, column {}: {}", line, column, msg));
}

std::vector<Token> lex(std::string_view s, std::size_t first_line)
{
    std::vector<Token> out;
    std::size_t line = first_line;
    std::size_t col = 1;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
                ++i;
            }
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
                    ++j;
                }
                if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    i = j;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                        ++i;
                    }
                }
            }
            const std::string text(s.substr(start, i - start));
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
                fail_at(line, col, fmt::format("malformed number '{}'", text));
            }
            Tok type = Tok::number;
            if (i < s.size() && s[i] == 'i' && (i + 1 >= s.size() || !ident_char(s[i + 1]))) {
                type = Tok::imaginary;
                ++i;
            }
            out.push_back({type, std::string(s.substr(start, i - start)), value, line, col});
            col += i - start;
            continue;
        }
        if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i])) {
                ++i;
            }
            out.push_back({Tok::ident, std::string(s.substr(start, i - start)), 0.0, line, col});
            col += i - start;
            continue;
        }
        if (std::string_view("()+-*/^,;").find(c) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, c), 0.0, line, col});
            ++col;
            ++i;
            continue;
        }
        fail_at(line, col, fmt::format("unexpected character '{}'", c));
    }
    out.push_back({Tok::end, "", 0.0, line, col});
    return out;
}

ExprPtr make(Expr e)
{
    return std::make_shared<const Expr>(std::move(e));
}

ExprPtr make_literal(Complex v)
{
    Expr e;
    e.kind = ExprKind::literal;
    e.value = v;
    return make(std::move(e));
}

ExprPtr make_binary(ExprKind kind, ExprPtr a, ExprPtr b)
{
    Expr e;
    e.kind = kind;
    e.args = {std::move(a), std::move(b)};
    return make(std::move(e));
}

bool is_builtin(const std::string &name)
{
    return name == "exp" || name == "sin" || name == "cos";
}

class Parser
{
public:
    explicit Parser(std::vector<Token> toks) : m_toks(std::move(toks)) {}

    ExprPtr parse_all()
    {
        auto e = expr();
        if (peek().type != Tok::end) {
            error(peek(), fmt::format("unexpected '{}'", peek().text));
        }
        return e;
    }

private:
    std::vector<Token> m_toks;
    std::size_t m_pos = 0;

    const Token &peek() const
    {
        return m_toks[m_pos];
    }
    const Token &advance()
    {
        return m_toks[m_pos++];
    }
    bool at_punct(char c) const
    {
        return peek().type == Tok::punct && peek().text[0] == c;
    }
    [[noreturn]] static void error(const Token &t, const std::string &msg)
    {
        fail_at(t.line, t.column, msg);
    }
    void expect(char c)
    {
        if (!at_punct(c)) {
            error(peek(), fmt::format("expected '{}' but found '{}'", c,
                                      peek().type == Tok::end ? "end of input" : peek().text));
        }
        ++m_pos;
    }

    ExprPtr expr()
    {
        auto lhs = term();
        while (at_punct('+') || at_punct('-')) {
            const auto kind = advance().text[0] == '+' ? ExprKind::add : ExprKind::sub;
            lhs = make_binary(kind, lhs, term());
        }
        return lhs;
    }

    ExprPtr term()
    {
        auto lhs = unary();
        while (at_punct('*') || at_punct('/')) {
            const auto kind = advance().text[0] == '*' ? ExprKind::mul : ExprKind::div;
            lhs = make_binary(kind, lhs, unary());
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (at_punct('-')) {
            ++m_pos;
            Expr e;
            e.kind = ExprKind::neg;
            e.args = {unary()};
            return make(std::move(e));
        }
        return power();
    }

    unsigned positive_integer(const char *what)
    {
        const Token &t = peek();
        if (t.type != Tok::number || t.number < 1.0 || t.number != std::floor(t.number)
            || t.number > 4096.0) {
            error(t, fmt::format("{} must be a positive integer literal", what));
        }
        ++m_pos;
        return static_cast<unsigned>(t.number);
    }

    ExprPtr power()
    {
        auto base = primary();
        while (at_punct('^')) {
            ++m_pos;
            Expr e;
            e.kind = ExprKind::pow;
            e.integer = positive_integer("exponent");
            e.args = {base};
            base = make(std::move(e));
        }
        return base;
    }

    std::vector<ExprPtr> arg_list(char stop)
    {
        std::vector<ExprPtr> out;
        if (at_punct(stop)) {
            return out;
        }
        out.push_back(expr());
        while (at_punct(',')) {
            ++m_pos;
            out.push_back(expr());
        }
        return out;
    }

    ExprPtr primary()
    {
        const Token &t = peek();
        switch (t.type) {
            case Tok::number:
                ++m_pos;
                return make_literal({t.number, 0.0});
            case Tok::imaginary:
                ++m_pos;
                return make_literal({0.0, t.number});
            case Tok::punct:
                if (at_punct('(')) {
                    ++m_pos;
                    auto e = expr();
                    expect(')');
                    return e;
                }
                error(t, fmt::format("unexpected '{}'", t.text));
            case Tok::end:
                error(t, "unexpected end of input");
            case Tok::ident:
                break;
        }
        ++m_pos;
        if (t.text == "i") {
            return make_literal({0.0, 1.0});
        }
        if (t.text == "z") {
            Expr e;
            e.kind = ExprKind::variable;
            return make(std::move(e));
        }
        const bool known = is_builtin(t.text) || t.text == "recip" || t.text == "root"
                           || t.text == "compose" || t.text == "recenter" || t.text == "derive"
                           || t.text == "laurent";
        if (!known) {
            error(t, fmt::format("unknown identifier '{}'", t.text));
        }
        if (!at_punct('(')) {
            if (is_builtin(t.text)) {
                Expr e;
                e.kind = ExprKind::builtin;
                e.name = t.text;
                return make(std::move(e));
            }
            error(peek(), fmt::format("'{}' must be called with arguments", t.text));
        }
        ++m_pos;
        Expr e;
        e.kind = ExprKind::call;
        e.name = t.text;
        if (t.text == "laurent") {
            e.args = arg_list(';');
            e.split = e.args.size();
            expect(';');
            auto pos = arg_list(')');
            e.args.insert(e.args.end(), pos.begin(), pos.end());
            expect(')');
            return make(std::move(e));
        }
        if (t.text == "root") {
            e.args = {expr()};
            expect(',');
            e.integer = positive_integer("root index");
            expect(')');
            return make(std::move(e));
        }
        e.args = arg_list(')');
        expect(')');
        const std::size_t arity = (t.text == "compose" || t.text == "recenter") ? 2u : 1u;
        if (e.args.size() != arity) {
            error(t, fmt::format("'{}' takes {} argument{}, got {}", t.text, arity,
                                 arity == 1 ? "" : "s", e.args.size()));
        }
        return make(std::move(e));
    }
};

std::string print_literal(Complex v)
{
    if (v.imag() == 0.0 && !std::signbit(v.real())) {
        return fmt::format("{}", v.real());
    }
    if (v.real() == 0.0 && !std::signbit(v.imag())) {
        return fmt::format("{}i", v.imag());
    }
    return fmt::format("({} + {}i)", v.real(), v.imag());
}

} // namespace

ExprPtr parse_series_expr(std::string_view text, std::size_t first_line)
{
    return Parser(lex(text, first_line)).parse_all();
}

std::string print_expr(const Expr &e)
{
    const auto bin = [&](const char *op) {
        return fmt::format("({} {} {})", print_expr(*e.args[0]), op, print_expr(*e.args[1]));
    };
    switch (e.kind) {
        case ExprKind::literal:
            return print_literal(e.value);
        case ExprKind::variable:
            return "z";
        case ExprKind::builtin:
            return e.name;
        case ExprKind::neg:
            return fmt::format("(-{})", print_expr(*e.args[0]));
        case ExprKind::add:
            return bin("+");
        case ExprKind::sub:
            return bin("-");
        case ExprKind::mul:
            return bin("*");
        case ExprKind::div:
            return bin("/");
        case ExprKind::pow:
            return fmt::format("({}^{})", print_expr(*e.args[0]), e.integer);
        case ExprKind::call:
            break;
    }
    std::string out = e.name + "(";
    if (e.name == "root") {
        return out + fmt::format("{}, {})", print_expr(*e.args[0]), e.integer);
    }
    for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (e.name == "laurent" && i == e.split) {
            out += "; ";
        } else if (i > 0) {
            out += ", ";
        }
        out += print_expr(*e.args[i]);
    }
    if (e.name == "laurent" && e.split == e.args.size()) {
        out += ";";
    }
    return out + ")";
}

namespace
{

LaurentSeries as_laurent(const Elaborated &v)
{
    if (const auto *l = std::get_if<LaurentSeries>(&v)) {
        return *l;
    }
    return to_laurent(std::get<TruncatedSeries>(v));
}

const TruncatedSeries &as_series(const Elaborated &v, const char *what)
{
    if (const auto *f = std::get_if<TruncatedSeries>(&v)) {
        return *f;
    }
    throw Error(ErrorKind::invalid_input, fmt::format("{} needs a power series, not a Laurent series", what));
}

Complex as_constant(const Elaborated &v, const char *what)
{
    const auto l = as_laurent(v);
    for (int j = l.lowest_index(); j <= l.highest_index(); ++j) {
        if (j != 0 && l.coefficient(j) != Complex{}) {
            throw Error(ErrorKind::invalid_input, fmt::format("{} must be a constant", what));
        }
    }
    return l.coefficient(0);
}

TruncatedSeries builtin_series(const std::string &name, std::size_t order)
{
    if (name == "exp") {
        return exp_series(order);
    }
    if (name == "sin") {
        return sin_series(order);
    }
    return cos_series(order);
}

LaurentSeries laurent_derivative(const LaurentSeries &l)
{
    std::vector<Complex> neg;
    std::vector<Complex> pos;
    // d/dz a_j z^j = j a_j z^{j-1}
    for (int j = l.lowest_index(); j <= l.highest_index(); ++j) {
        const Complex c = static_cast<double>(j) * l.coefficient(j);
        const int k = j - 1;
        if (k < 0) {
            neg.resize(std::max<std::size_t>(neg.size(), static_cast<std::size_t>(-k)));
            neg[static_cast<std::size_t>(-k - 1)] = c;
        } else {
            pos.resize(std::max<std::size_t>(pos.size(), static_cast<std::size_t>(k + 1)));
            pos[static_cast<std::size_t>(k)] = c;
        }
    }
    return LaurentSeries(std::move(neg), std::move(pos), l.annulus());
}

Elaborated root_of(const TruncatedSeries &f, unsigned p, std::size_t order)
{
    const Complex a0 = f[0];
    if (!(std::abs(a0) > zero_threshold)) {
        throw Error(ErrorKind::division_at_center, "root: the argument vanishes at the center");
    }
    const double pd = static_cast<double>(p);
    double angle = std::arg(a0);
    if (angle <= -pi) {
        angle = pi;
    }
    const Complex scale = std::polar(std::pow(std::abs(a0), 1.0 / pd), angle / pd);
    // f = a0 (1 + u), u = f / a0 - 1
    const auto one = TruncatedSeries::constant(1.0, f.order(), f.center());
    const auto u = linear_combine(1.0 / a0, f, -1.0, one);
    const auto b = binomial_root_series(p, order);
    const auto r = compose(b, TruncatedSeries(std::vector<Complex>(u.coeffs().begin(), u.coeffs().end())));
    const auto scaled = linear_combine(scale, r, 0.0, r);
    return TruncatedSeries(std::vector<Complex>(scaled.coeffs().begin(), scaled.coeffs().end()),
                           f.center());
}

} // namespace

Elaborated elaborate(const Expr &e, std::size_t order)
{
    if (order == 0) {
        throw Error(ErrorKind::invalid_input, "truncation order must be at least 1");
    }
    const auto sub = [order](const ExprPtr &p) { return elaborate(*p, order); };
    switch (e.kind) {
        case ExprKind::literal:
            return TruncatedSeries::constant(e.value, order).with_radius_hint(infinity);
        case ExprKind::variable:
            return TruncatedSeries::variable(order).with_radius_hint(infinity);
        case ExprKind::builtin:
            return builtin_series(e.name, order);
        case ExprKind::neg: {
            const auto a = sub(e.args[0]);
            if (const auto *f = std::get_if<TruncatedSeries>(&a)) {
                return linear_combine(-1.0, *f, 0.0, *f);
            }
            const auto &l = std::get<LaurentSeries>(a);
            return laurent_linear_combine(-1.0, l, 0.0, l);
        }
        case ExprKind::add:
        case ExprKind::sub: {
            const auto a = sub(e.args[0]);
            const auto b = sub(e.args[1]);
            const Complex mu = e.kind == ExprKind::add ? 1.0 : -1.0;
            const auto *fa = std::get_if<TruncatedSeries>(&a);
            const auto *fb = std::get_if<TruncatedSeries>(&b);
            if (fa && fb) {
                return linear_combine(1.0, *fa, mu, *fb);
            }
            return laurent_linear_combine(1.0, as_laurent(a), mu, as_laurent(b));
        }
        case ExprKind::mul: {
            const auto a = sub(e.args[0]);
            const auto b = sub(e.args[1]);
            const auto *fa = std::get_if<TruncatedSeries>(&a);
            const auto *fb = std::get_if<TruncatedSeries>(&b);
            if (fa && fb) {
                return cauchy_product(*fa, *fb);
            }
            return laurent_product(as_laurent(a), as_laurent(b));
        }
        case ExprKind::div: {
            const auto a = sub(e.args[0]);
            const auto inv = reciprocal(as_series(sub(e.args[1]), "division"));
            if (const auto *fa = std::get_if<TruncatedSeries>(&a)) {
                return cauchy_product(*fa, inv);
            }
            return laurent_product(std::get<LaurentSeries>(a), to_laurent(inv));
        }
        case ExprKind::pow: {
            const auto a = sub(e.args[0]);
            if (const auto *f = std::get_if<TruncatedSeries>(&a)) {
                return power(*f, e.integer);
            }
            const auto &l = std::get<LaurentSeries>(a);
            auto acc = l;
            for (unsigned k = 1; k < e.integer; ++k) {
                acc = laurent_product(acc, l);
            }
            return acc;
        }
        case ExprKind::call:
            break;
    }
    if (is_builtin(e.name)) {
        return compose(builtin_series(e.name, order), as_series(sub(e.args[0]), e.name.c_str()));
    }
    if (e.name == "recip") {
        return reciprocal(as_series(sub(e.args[0]), "recip"));
    }
    if (e.name == "root") {
        return root_of(as_series(sub(e.args[0]), "root"), e.integer, order);
    }
    if (e.name == "compose") {
        return compose(as_series(sub(e.args[0]), "compose"), as_series(sub(e.args[1]), "compose"));
    }
    if (e.name == "recenter") {
        return recenter(as_series(sub(e.args[0]), "recenter"),
                        as_constant(sub(e.args[1]), "recenter point"));
    }
    if (e.name == "derive") {
        const auto a = sub(e.args[0]);
        if (const auto *f = std::get_if<TruncatedSeries>(&a)) {
            return derivative(*f);
        }
        return laurent_derivative(std::get<LaurentSeries>(a));
    }
    // laurent(neg; pos)
    std::vector<Complex> neg;
    std::vector<Complex> pos;
    for (std::size_t i = 0; i < e.args.size(); ++i) {
        const Complex c = as_constant(sub(e.args[i]), "a Laurent coefficient");
        (i < e.split ? neg : pos).push_back(c);
    }
    return LaurentSeries(std::move(neg), std::move(pos));
}

} // namespace weier
