// Copyright 2026 The codeg Authors
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

#ifndef CODEG_CLI_HPP_
#define CODEG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace codeg {

// Exit codes: 0 verified or success, 1 refuted, 2 inapplicable, 3 usage or
// input error. args excludes the program name.
inline constexpr int kExitUsage = 3;

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codeg

#endif  // CODEG_CLI_HPP_
