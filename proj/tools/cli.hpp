#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hqdeform::cli {

// Exit status: 0 pass, 1 verified failure, 2 usage or config error.
enum Exit : int { kPass = 0, kFail = 1, kUsage = 2 };

// args excludes the program name. The JSON report goes to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqdeform::cli
