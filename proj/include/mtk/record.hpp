// Copyright 2023 The Authors.
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

#pragma once

#include <string>

#include "json.hpp"
#include "mtk/core.hpp"

namespace mtk {

enum class Verdict { kHolds, kViolated, kSkipped };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

struct VerificationRecord {
  std::string claim;
  std::string provenance;
  std::string lhs;
  std::string rhs;
  std::string relation;
  Verdict verdict = Verdict::kHolds;
  nlohmann::json witness = nlohmann::json::object();

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["claim"] = claim;
    j["provenance"] = provenance;
    j["lhs"] = lhs;
    j["relation"] = relation;
    j["rhs"] = rhs;
    j["verdict"] = verdict_name(verdict);
    j["witness"] = witness;
    return j;
  }
};

// Builds a record from a boolean outcome.
inline VerificationRecord make_record(std::string claim, std::string provenance,
                                      std::string lhs, std::string relation,
                                      std::string rhs, bool ok) {
  VerificationRecord r;
  r.claim = std::move(claim);
  r.provenance = std::move(provenance);
  r.lhs = std::move(lhs);
  r.relation = std::move(relation);
  r.rhs = std::move(rhs);
  r.verdict = ok ? Verdict::kHolds : Verdict::kViolated;
  return r;
}

}  // namespace mtk
