// Copyright 2026 The lrchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

/// @file
/// Artifact plumbing shared by the CLI and the check runner: 17-digit
/// float formatting for bit-exact diffs, CSV metadata headers that echo
/// the effective run configuration as JSON, and small file helpers.

#include <string>

namespace lrchain {

inline constexpr const char* LRCHAIN_VERSION = "1.0.0";

/// Shortest round-trip decimal form ("%.17g"): '.' decimal point,
/// no locale dependence.
std::string format_g17(double x);

/// Comment block placed at the top of every artifact:
///   # lrchain <version>
///   # command: <name>
///   # config: <one-line JSON echo>
/// Re-running with the echoed config reproduces the file byte for byte.
std::string metadata_header(const std::string& command,
                            const std::string& config_json);

/// Writes content to path; throws ConfigError if the file cannot be opened.
void write_text_file(const std::string& path, const std::string& content);

/// Reads a whole file; throws ConfigError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace lrchain
