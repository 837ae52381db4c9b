// Copyright 2026 The Chronoglot Authors.
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

#ifndef CHRONOGLOT_CLI_H_
#define CHRONOGLOT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace chronoglot {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 1;
inline constexpr int kExitDataError = 2;

// Runs one of the subcommands timeline, search, serve or validate. args
// excludes the program name. Returns 0 on success, 1 on a user error
// (bad flags, unknown or ambiguous entity), 2 on a data error.
int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace chronoglot

#endif  // CHRONOGLOT_CLI_H_
