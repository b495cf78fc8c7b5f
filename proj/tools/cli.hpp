// SPDX-License-Identifier: Apache-2.0
//
// The sublrc command line, callable in-process so tests can drive it.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sublrc::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInconsistent = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sublrc::cli
