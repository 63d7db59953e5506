#pragma once

#include <json.hpp>

#include "ksp/koszul.hpp"

namespace ksp::cli {

inline constexpr int kSchemaVersion = 1;
// soft guard for enumeration-heavy commands, overridable with --force up to
// the hard library guard
inline constexpr int kSoftGuard = 7;

struct RunConfig {
    int trunc = 10;
    int n_max = 6;
    std::string out = "text";  // "text" | "json"
    bool force = false;
};

// Parses the small series expression language:
//   names:     X E L Cosh Sinh J0 I0
//   infix:     f + g, f - g, f * g
//   functions: inv(f) cinv(f) d(f) point(f) had(f,g) comp(f,g)
//              fix_rooted(f) fix_schroeder(f)
// Throws ksp::error with the offending position on malformed input.
Egf eval_series_expr(const std::string& expr, int trunc);

struct CliResult {
    int exit_code = 0;
    nlohmann::json report;
};

CliResult cmd_series(const std::string& expr, const RunConfig& cfg);
CliResult cmd_poset(const std::string& kind, const std::string& name, int n,
                    std::vector<std::string> actions, const RunConfig& cfg);
CliResult cmd_koszul(const std::string& kind, const std::string& name,
                     const RunConfig& cfg);
CliResult cmd_verify(const std::string& which, const RunConfig& cfg);

// Plain-text rendering of a report produced by the commands above.
std::string render_text(const nlohmann::json& report);

// Machine-readable error payload used by every failure path.
nlohmann::json error_report(const std::string& command,
                            const std::string& message);

}  // namespace ksp::cli
