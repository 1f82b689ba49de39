// Copyright 2026 The dqbreak Authors
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

#ifndef DQBREAK_CLI_HPP_
#define DQBREAK_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dqbreak::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTrue = 10;
inline constexpr int kExitFalse = 20;
inline constexpr int kExitBudget = 30;

// Runs one command line. args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dqbreak::cli

#endif  // DQBREAK_CLI_HPP_
