// Copyright 2026 The weur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `weur` command-line program as a library, so tests can drive it
// in-process.
//
// Subcommands: bound, sweep-random, sweep-qutrit, steering, validate.
// Exit codes: 0 success, 2 validation error, 3 numerical diagnostic,
// 1 anything unexpected.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace weur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Environment variable holding the default seed for randomized commands.
inline constexpr const char* kSeedEnv = "WEUR_SEED";
inline constexpr std::uint64_t kFallbackSeed = 0x5eed5eedULL;

/// `args` excludes the program name. Normal output goes to `out` (or the
/// --out file); errors go to `err` as one JSON object per line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed from WEUR_SEED (decimal or 0x-prefixed hex), else kFallbackSeed.
std::uint64_t default_seed();

}  // namespace weur::cli
