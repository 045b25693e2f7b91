// Copyright 2026 The Ore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ore {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

inline constexpr uint64_t kDefaultPolicyMaxQ = uint64_t{1} << 16;
inline constexpr int kDefaultMaxRounds = 16;
inline constexpr int kScenarioSamples = 20;

// Runs one command. args excludes the program name. JSON results go to
// `out`, diagnostics and usage text to `err`; plaintexts and ciphertexts for
// encrypt and decrypt are read from `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace ore
