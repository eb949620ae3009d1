// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavekit::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kNumericError = 3,
};

/// Runs `wavekit <args...>`; args excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wavekit::cli
