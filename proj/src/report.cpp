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

#include "codeg/report.hpp"

#include "codeg/errors.hpp"

namespace codeg {

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return "verified";
    case Verdict::kRefuted: return "refuted";
    case Verdict::kInapplicable: return "inapplicable";
  }
  return "inapplicable";
}

int ExitCode(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return 0;
    case Verdict::kRefuted: return 1;
    case Verdict::kInapplicable: return 2;
  }
  return 2;
}

VerificationReport& VerificationReport::Param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
  return *this;
}

void VerificationReport::Validate() const {
  if (verdict == Verdict::kRefuted && witness.is_null()) {
    throw InvariantViolation("refutation carries a witness", "report for " + claim + " has none");
  }
}

Json VerificationReport::ToJson() const {
  Validate();
  Json j;
  j["claim"] = claim;
  j["verdict"] = std::string(VerdictName(verdict));
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = std::move(p);
  j["witness"] = witness;
  j["narrative"] = narrative;
  return j;
}

std::string VerificationReport::RenderText(std::string_view timestamp) const {
  Validate();
  std::string out = "[" + claim + "] " + std::string(VerdictName(verdict)) + "\n";
  if (!timestamp.empty()) out += "  generated: " + std::string(timestamp) + "\n";
  for (const auto& [k, v] : params) out += "  " + k + ": " + v + "\n";
  if (!witness.is_null()) out += "  witness: " + witness.dump() + "\n";
  if (!narrative.empty()) out += narrative + "\n";
  return out;
}

std::string VerificationReport::RenderJson(std::string_view timestamp) const {
  Json doc;
  doc["schema"] = std::string(kReportSchema);
  if (!timestamp.empty()) doc["generated"] = std::string(timestamp);
  doc["report"] = ToJson();
  return doc.dump(2) + "\n";
}

VerificationReport MakeReport(std::string claim, Verdict verdict, std::string narrative,
                              Json witness) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.verdict = verdict;
  r.narrative = std::move(narrative);
  r.witness = std::move(witness);
  return r;
}

}  // namespace codeg
