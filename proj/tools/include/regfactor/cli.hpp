// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace regfactor::cli {

inline constexpr std::string_view kSchema = "regfactor/1";
inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kCounterexample = 2 };

/// Runs one command. `args` excludes the program name. Exactly one output
/// envelope is written to `out`; diagnostics go to `err`. Graph arguments
/// that are absent are read line by line from `in`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace regfactor::cli
