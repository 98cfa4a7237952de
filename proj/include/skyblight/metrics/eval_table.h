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

#ifndef SKYBLIGHT_METRICS_EVAL_TABLE_H_
#define SKYBLIGHT_METRICS_EVAL_TABLE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skyblight/core/types.h"

namespace skyblight {

// AP values in [0, 1] for one model.
class EvalTable {
 public:
  EvalTable() = default;
  explicit EvalTable(std::string model) : model_(std::move(model)) {}

  const std::string& model() const { return model_; }

  const std::optional<double>& ap_clean() const { return ap_clean_; }
  void set_ap_clean(double ap);

  // Throws kInvalidArgument when ap is outside [0, 1].
  void Set(CorruptionKind kind, Severity severity, double ap);
  std::optional<double> Get(CorruptionKind kind, Severity severity) const;

  // Kinds with at least one cell, canonical order.
  std::vector<CorruptionKind> kinds() const;
  std::size_t cell_count() const { return cells_.size(); }

  friend bool operator==(const EvalTable&, const EvalTable&) = default;

 private:
  std::string model_;
  std::optional<double> ap_clean_;
  std::map<std::pair<int, int>, double> cells_;  // (kind index, level)
};

// Mean over the four severities of one kind; kIncompleteTable if any is
// missing.
double KindMean(const EvalTable& table, CorruptionKind kind);

// Mean over severities, then over the evaluated kinds. kIncompleteTable when
// the table is empty or an evaluated kind lacks a severity.
double ApCor(const EvalTable& table);

// Absolute drop ap_clean - ap_cor, same units as the inputs.
double Degradation(double ap_clean, double ap_cor);

// eval_table.json: full-precision values.
std::string SerializeEvalTables(const std::vector<EvalTable>& tables);
std::vector<EvalTable> ParseEvalTables(std::string_view text);

}  // namespace skyblight

#endif  // SKYBLIGHT_METRICS_EVAL_TABLE_H_
