#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace commgraph::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,   // unreadable/malformed input or invalid arguments
    kCapExceeded = 2,
    kSentinel = 3,     // DisconnectedOther: a counterexample to the classification
    kCheckFailed = 4,  // paper-verify: some check failed
};

/// Environment variable consulted for the default element cap.
inline constexpr const char* kCapEnv = "COMMGRAPH_CAP";

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commgraph::cli
