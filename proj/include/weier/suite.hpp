#ifndef WEIER_SUITE_HPP
#define WEIER_SUITE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <weier/expr.hpp>
#include <weier/verify.hpp>

namespace weier
{

/// One `name = expression` line of a definitions file.
struct Definition {
    std::string name;
    ExprPtr expr;
    std::size_t line;
};

/// Parses a definitions file: one `name = expression` per line, `#` starts a
/// comment, blank lines are skipped. Names match [A-Za-z][A-Za-z0-9_.-]*.
std::vector<Definition> parse_definitions(std::string_view text);

/// The corpus compiled into the binary.
std::string_view default_corpus();

enum class ReportFormat { json, csv };

struct SuiteConfig {
    std::string suite = "all";
    Tolerances tol = {};
    std::size_t order = 32;
    std::size_t samples = 1024;
    std::uint64_t seed = 0;
    std::vector<double> radii = {0.5, 1.0};
};

/// Every suite name accepted by run_suite, `all` last.
const std::vector<std::string> &suite_names();

/// Runs one suite (or all of them, in suite_names() order) over the
/// definitions. A definition named `<suite>.<label>` only takes part in that
/// suite; any other name takes part in every suite that is run. Verifier
/// precondition failures become inconclusive results.
Report run_suite(const SuiteConfig &config, const std::vector<Definition> &definitions);

/// Byte-deterministic serialization.
std::string render_report(const Report &report, ReportFormat format);
void emit_report(const Report &report, ReportFormat format, const std::filesystem::path &path);

/// Command-line entry point; returns the process exit code (0 no fails,
/// 1 some fail, 2 usage or input error).
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace weier

#endif
