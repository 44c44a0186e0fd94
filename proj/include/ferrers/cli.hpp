#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ferrers::cli {

// Process exit status.
enum class ExitCode : int {
    Ok = 0,
    Violation = 1,    // a checked property failed
    Usage = 2,        // bad flags or unparsable payload
    Domain = 3,       // partition does not fit the grid, ell < 0, ...
    CapExceeded = 4,  // path listing refused
    Precondition = 5, // tp2 corollary input fails its hypothesis
};

inline constexpr const char* schema_version = "1.0";
inline constexpr const char* format_env_var = "FERRERS_FORMAT";

struct Environment {
    // Output format used when --format is absent ("json" or "csv").
    std::optional<std::string> default_format;

    static Environment from_process();
};

// Runs one invocation. `args` excludes the program name. Results go to
// `out`; diagnostics, usage text and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

} // namespace ferrers::cli
