// Copyright 2026 The ergoqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ergo::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;
/// Overrides the default output directory; --out still wins.
inline constexpr const char* kOutDirEnv = "ERGO_OUT_DIR";

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kBadInput = 2 };

/// args excludes the program name. Verdict lines go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts plain reals and multiples of pi: "1.2", "pi", "-pi/3", "0.25pi", "3pi/4".
double parse_angle(const std::string& text);

}  // namespace ergo::cli
