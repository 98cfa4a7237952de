// Copyright 2026 The Skyblight Authors. All Rights Reserved.
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

#include "skyblight/metrics/eval_table.h"

#include <set>

#include "json.hpp"
#include "skyblight/core/error.h"

namespace skyblight {
namespace {

using Json = nlohmann::json;

void CheckAp(double ap) {
  if (!(ap >= 0.0 && ap <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "AP value " + std::to_string(ap) + " outside [0, 1]");
  }
}

}  // namespace

void EvalTable::set_ap_clean(double ap) {
  CheckAp(ap);
  ap_clean_ = ap;
}

void EvalTable::Set(CorruptionKind kind, Severity severity, double ap) {
  CheckAp(ap);
  cells_[{KindIndex(kind), severity.level()}] = ap;
}

std::optional<double> EvalTable::Get(CorruptionKind kind,
                                     Severity severity) const {
  const auto it = cells_.find({KindIndex(kind), severity.level()});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::vector<CorruptionKind> EvalTable::kinds() const {
  std::set<int> seen;
  for (const auto& [key, ap] : cells_) seen.insert(key.first);
  std::vector<CorruptionKind> out;
  for (int k : seen) out.push_back(kAllKinds[k]);
  return out;
}

double KindMean(const EvalTable& table, CorruptionKind kind) {
  double sum = 0.0;
  for (Severity sev : kAllSeverities) {
    const auto ap = table.Get(kind, sev);
    if (!ap) {
      throw Error(ErrorCode::kIncompleteTable,
                  "model '" + table.model() + "' has no AP for " +
                      std::string(KindName(kind)) + " severity " +
                      std::to_string(sev.level()));
    }
    sum += *ap;
  }
  return sum / kNumSeverities;
}

double ApCor(const EvalTable& table) {
  const std::vector<CorruptionKind> kinds = table.kinds();
  if (kinds.empty()) {
    throw Error(ErrorCode::kIncompleteTable,
                "model '" + table.model() + "' has no corruption cells");
  }
  double sum = 0.0;
  for (CorruptionKind kind : kinds) sum += KindMean(table, kind);
  return sum / static_cast<double>(kinds.size());
}

double Degradation(double ap_clean, double ap_cor) { return ap_clean - ap_cor; }

std::string SerializeEvalTables(const std::vector<EvalTable>& tables) {
  Json models = Json::array();
  for (const EvalTable& t : tables) {
    Json cells = Json::array();
    for (CorruptionKind kind : kAllKinds) {
      for (Severity sev : kAllSeverities) {
        if (const auto ap = t.Get(kind, sev)) {
          cells.push_back({{"corruption", KindName(kind)},
                           {"severity", sev.level()},
                           {"ap", *ap}});
        }
      }
    }
    Json model{{"model", t.model()},
               {"ap_clean", t.ap_clean() ? Json(*t.ap_clean()) : Json()},
               {"cells", cells}};
    try {
      model["ap_cor"] = ApCor(t);
    } catch (const Error&) {
      model["ap_cor"] = nullptr;
    }
    models.push_back(model);
  }
  return Json{{"metric", "AP@0.5, all-point interpolation"},
              {"models", models}}
             .dump(2) +
         "\n";
}

std::vector<EvalTable> ParseEvalTables(std::string_view text) {
  std::vector<EvalTable> tables;
  try {
    const Json root = Json::parse(text);
    for (const Json& m : root.at("models")) {
      EvalTable t(m.at("model").get<std::string>());
      if (m.contains("ap_clean") && !m.at("ap_clean").is_null()) {
        t.set_ap_clean(m.at("ap_clean").get<double>());
      }
      for (const Json& c : m.at("cells")) {
        t.Set(KindFromName(c.at("corruption").get<std::string>()),
              Severity(c.at("severity").get<int>()), c.at("ap").get<double>());
      }
      tables.push_back(std::move(t));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad eval table JSON: ") + e.what());
  }
  return tables;
}

}  // namespace skyblight
