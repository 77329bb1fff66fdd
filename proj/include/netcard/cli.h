// Copyright 2026 The Netcard Authors
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

#ifndef NETCARD_CLI_H_
#define NETCARD_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace netcard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitIoError = 2;

// Runs the netcard command line. `args` excludes the program name. Card and
// rendered content go to `out`; every diagnostic goes to `err`. The path "-"
// reads from `in` or writes to `out`.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace netcard::cli

#endif  // NETCARD_CLI_H_
