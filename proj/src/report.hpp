// Copyright 2026 The pathspec Authors
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

#ifndef PATHSPEC_REPORT_HPP
#define PATHSPEC_REPORT_HPP

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

namespace pathspec {

/// Outcome of one theorem, lemma or conjecture check.
///
/// `asserted` separates checks whose failure is a real defect from
/// exploratory ones that are only recorded (for instance containment for
/// n not divisible by 4). A report with `passed == false` always carries at
/// least one witness; `finish()` enforces that.
struct Report {
  std::string check_name;
  nlohmann::json subject = nlohmann::json::object();
  bool passed = false;
  bool asserted = true;
  nlohmann::json witnesses = nlohmann::json::object();
  std::optional<double> tolerance;  // nullopt means the comparison was exact

  Report() = default;
  Report(std::string name, nlohmann::json subj)
      : check_name(std::move(name)), subject(std::move(subj)) {}

  Report& finish(bool ok) {
    passed = ok;
    if (!passed && witnesses.empty()) witnesses["reason"] = "check failed";
    return *this;
  }

  bool failed_assertion() const { return asserted && !passed; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["check"] = check_name;
    j["subject"] = subject;
    j["passed"] = passed;
    j["asserted"] = asserted;
    if (tolerance)
      j["tolerance"] = *tolerance;
    else
      j["tolerance"] = "exact";
    j["witnesses"] = witnesses;
    return j;
  }
};

}  // namespace pathspec

#endif  // PATHSPEC_REPORT_HPP
