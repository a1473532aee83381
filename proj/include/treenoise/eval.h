// Copyright 2026 The TreeNoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Before/after comparison of classifiers trained on original and perturbed
// data.

#ifndef TREENOISE_EVAL_H_
#define TREENOISE_EVAL_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "treenoise/dataset.h"
#include "treenoise/error.h"
#include "treenoise/perturb.h"
#include "treenoise/tree.h"

namespace treenoise {

inline double Accuracy(const DecisionTree& tree, const Dataset& ds) {
  if (ds.num_rows() == 0) throw DataError("accuracy of an empty dataset");
  const std::size_t cls = ds.ColumnIndex(tree.class_name());
  std::size_t correct = 0;
  for (std::size_t r = 0; r < ds.num_rows(); ++r) {
    if (tree.Classify(ds, r) == ds.label(cls, r)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(ds.num_rows());
}

struct AttributeDistortion {
  AttributeKind kind = AttributeKind::kNumeric;
  double mean_delta = 0.0;      // numeric only
  double mean_abs_delta = 0.0;  // numeric only
  double max_abs_delta = 0.0;   // numeric only
  double changed_fraction = 0.0;

  friend bool operator==(const AttributeDistortion&, const AttributeDistortion&) = default;
};

// Per-column differences between two aligned datasets (same schema, same
// row order). Deltas are perturbed - original.
inline std::map<std::string, AttributeDistortion> Distortion(const Dataset& original,
                                                             const Dataset& perturbed) {
  if (original.schema() != perturbed.schema()) {
    throw DataError("distortion: datasets have different schemas");
  }
  if (original.num_rows() != perturbed.num_rows()) {
    throw DataError("distortion: datasets have different row counts");
  }
  const auto n = static_cast<double>(original.num_rows());
  std::map<std::string, AttributeDistortion> out;
  for (std::size_t c = 0; c < original.num_columns(); ++c) {
    const AttributeDescriptor& attr = original.attribute(c);
    AttributeDistortion d;
    d.kind = attr.kind;
    std::size_t changed = 0;
    for (std::size_t r = 0; r < original.num_rows(); ++r) {
      if (attr.is_numeric()) {
        const double delta = perturbed.numeric(c, r) - original.numeric(c, r);
        d.mean_delta += delta;
        d.mean_abs_delta += std::abs(delta);
        d.max_abs_delta = std::max(d.max_abs_delta, std::abs(delta));
        if (delta != 0.0) ++changed;
      } else if (perturbed.label(c, r) != original.label(c, r)) {
        ++changed;
      }
    }
    d.mean_delta /= n;
    d.mean_abs_delta /= n;
    d.changed_fraction = static_cast<double>(changed) / n;
    out.emplace(attr.name, d);
  }
  return out;
}

struct EvalReport {
  double accuracy_original_train = 0.0;
  double accuracy_original_test = 0.0;
  double accuracy_perturbed_train = 0.0;
  double accuracy_perturbed_test = 0.0;
  double tree_similarity = 0.0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  bool stratified = true;
  std::map<std::string, AttributeDistortion> distortion;
  PerturbReport perturb_report;
  nlohmann::ordered_json config_echo;

  double test_gap() const { return std::abs(accuracy_original_test - accuracy_perturbed_test); }

  nlohmann::ordered_json ToJson() const {
    nlohmann::ordered_json j;
    j["accuracy"] = {
        {"original_train", accuracy_original_train},
        {"original_test", accuracy_original_test},
        {"perturbed_train", accuracy_perturbed_train},
        {"perturbed_test", accuracy_perturbed_test},
    };
    j["tree_similarity"] = tree_similarity;
    j["train_size"] = train_size;
    j["test_size"] = test_size;
    j["stratified"] = stratified;
    nlohmann::ordered_json dist = nlohmann::ordered_json::object();
    for (const auto& [name, d] : distortion) {
      nlohmann::ordered_json e;
      e["kind"] = d.kind == AttributeKind::kNumeric ? "numeric" : "categorical";
      if (d.kind == AttributeKind::kNumeric) {
        e["mean_delta"] = d.mean_delta;
        e["mean_abs_delta"] = d.mean_abs_delta;
        e["max_abs_delta"] = d.max_abs_delta;
      }
      e["changed_fraction"] = d.changed_fraction;
      dist[name] = e;
    }
    j["distortion"] = dist;
    j["perturbation"] = perturb_report.ToJson();
    j["config"] = config_echo;
    return j;
  }

  // Aligned table with Before/After columns.
  std::string ToTable() const {
    const auto pct = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * v);
      return std::string(buf);
    };
    const auto row = [](const std::string& a, const std::string& b, const std::string& c) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%-20s %20s %20s\n", a.c_str(), b.c_str(), c.c_str());
      return std::string(buf);
    };
    std::string out = row("", "Before Perturbation", "After Perturbation");
    out += row("Training accuracy", pct(accuracy_original_train), pct(accuracy_perturbed_train));
    out += row("Test accuracy", pct(accuracy_original_test), pct(accuracy_perturbed_test));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "Tree similarity: %.3f\n", tree_similarity);
    out += buf;
    return out;
  }
};

using DomainOverrides = std::map<std::string, std::pair<double, double>>;

// Splits `ds`, builds T on the original training part, perturbs the training
// part with the pipeline, builds T' on the perturbed training part, and
// scores T and T' against the original train and test records.
inline EvalReport CompareRuns(const Dataset& ds, const BuildParams& build_params,
                              const PerturbConfig& cfg, double test_fraction,
                              std::uint64_t seed,
                              const DomainOverrides& domain_overrides = {}) {
  const TrainTestSplit split = SplitTrainTest(ds, test_fraction, seed);
  PipelineResult run = RunPipeline(split.train, build_params, cfg, domain_overrides);
  const DecisionTree perturbed_tree = DecisionTree::Build(run.perturbed, build_params);

  EvalReport report;
  report.train_size = split.train.num_rows();
  report.test_size = split.test.num_rows();
  report.stratified = split.stratified;
  report.accuracy_original_train = Accuracy(run.tree, split.train);
  report.accuracy_original_test = Accuracy(run.tree, split.test);
  report.accuracy_perturbed_train = Accuracy(perturbed_tree, split.train);
  report.accuracy_perturbed_test = Accuracy(perturbed_tree, split.test);
  report.tree_similarity = Similarity(run.tree, perturbed_tree, ThresholdMatch::kIgnore);
  report.distortion = Distortion(split.train, run.perturbed);
  report.perturb_report = std::move(run.report);
  return report;
}

}  // namespace treenoise

#endif  // TREENOISE_EVAL_H_
