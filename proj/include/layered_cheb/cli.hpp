#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace layered_cheb::cli {

/// Exit statuses of the layered-cheb command.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kResourceLimit = 3,
};

/// Environment variable mirroring --max-n-override.
inline constexpr const char* kMaxLengthEnv = "LAYERED_CHEB_MAX_N";

/// Runs one invocation; `args` excludes the program name. `env_max_n` is the
/// value of kMaxLengthEnv, or empty when unset.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_max_n = {});

}  // namespace layered_cheb::cli
