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

#ifndef CODEG_SRC_TEXT_LINES_HPP_
#define CODEG_SRC_TEXT_LINES_HPP_

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace codeg::internal {

struct TokenLine {
  std::size_t number;  // 1-based
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens, dropping '#' comments and blank
// lines but keeping the original line numbers.
inline std::vector<TokenLine> TokenizeLines(std::string_view text) {
  std::vector<TokenLine> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    TokenLine l{number, {}};
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

}  // namespace codeg::internal

#endif  // CODEG_SRC_TEXT_LINES_HPP_
