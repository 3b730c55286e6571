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

#ifndef CODEG_REPORT_HPP_
#define CODEG_REPORT_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace codeg {

using Json = nlohmann::ordered_json;

enum class Verdict { kVerified, kRefuted, kInapplicable };

std::string_view VerdictName(Verdict v);
// 0 verified, 1 refuted, 2 inapplicable.
int ExitCode(Verdict v);

inline constexpr std::string_view kReportSchema = "codeg-report/1";

// Outcome of one checker run. Parameters keep insertion order so that the
// rendered document is reproducible byte for byte.
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::kInapplicable;
  Json witness;  // null when absent
  std::string narrative;

  VerificationReport& Param(std::string key, std::string value);
  // Throws InvariantViolation for a refutation without a witness.
  void Validate() const;

  Json ToJson() const;
  // Empty timestamp means none is printed.
  std::string RenderText(std::string_view timestamp = {}) const;
  std::string RenderJson(std::string_view timestamp = {}) const;
};

VerificationReport MakeReport(std::string claim, Verdict verdict, std::string narrative,
                              Json witness = nullptr);

}  // namespace codeg

#endif  // CODEG_REPORT_HPP_
