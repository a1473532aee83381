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

// Declarative run configuration (one JSON document per experiment).
//
//   {
//     "dataset": "boston_housing.csv",        // or "builtin:liver"
//     "has_header": true,
//     "schema": [
//       {"name": "CRIM", "kind": "numeric", "role": "feature"},
//       {"name": "CHAS", "kind": "numeric", "role": "ignored"},
//       {"name": "MEDV", "kind": "numeric", "role": "class"}
//     ],
//     "class_from_percentile": {"percentile": 80,
//                               "low_label": "bottom80", "high_label": "top20"},
//     "domains": {"AGE": [1, 100]},
//     "build": {"min_records_to_split": 2, "criterion": "gain", "max_depth": null},
//     "perturb": {"p": 0.9, "noise_mode": "per-record", "scale_lrpa": 0.05,
//                 "scale_lwpa": 0.15, "noise_mean": 0, "wrap": "modular",
//                 "lwpa_scope": "all", "capt_target": "class",
//                 "capt_sibling_rule": "literal",
//                 "inject_shift": {"PatientsWeight": -4.26}},
//     "seed": 42,
//     "test_fraction": 0.3,
//     "output": "perturbed.csv",
//     "report": "report.json"
//   }
//
// Relative paths resolve against the directory holding the config file.

#ifndef TREENOISE_CONFIG_H_
#define TREENOISE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "treenoise/dataset.h"
#include "treenoise/error.h"
#include "treenoise/eval.h"
#include "treenoise/paths.h"
#include "treenoise/perturb.h"
#include "treenoise/tree.h"

namespace treenoise {

inline constexpr std::string_view kBuiltinLiver = "builtin:liver";

namespace internal {

template <typename Enum>
using EnumNames = std::vector<std::pair<std::string_view, Enum>>;

template <typename Enum>
Enum ParseEnum(const std::string& what, const std::string& value,
               const EnumNames<Enum>& names) {
  std::string options;
  for (const auto& [name, e] : names) {
    if (name == value) return e;
    options += (options.empty() ? "" : ", ") + std::string(name);
  }
  throw ConfigError(what + ": unknown value '" + value + "' (expected one of " +
                    options + ")");
}

template <typename Enum>
std::string EnumName(Enum value, const EnumNames<Enum>& names) {
  for (const auto& [name, e] : names) {
    if (e == value) return std::string(name);
  }
  return "?";
}

inline const EnumNames<AttributeKind>& KindNames() {
  static const EnumNames<AttributeKind> n = {{"numeric", AttributeKind::kNumeric},
                                             {"categorical", AttributeKind::kCategorical}};
  return n;
}
inline const EnumNames<AttributeRole>& RoleNames() {
  static const EnumNames<AttributeRole> n = {{"feature", AttributeRole::kFeature},
                                             {"class", AttributeRole::kClass},
                                             {"ignored", AttributeRole::kIgnored}};
  return n;
}
inline const EnumNames<SplitCriterion>& CriterionNames() {
  static const EnumNames<SplitCriterion> n = {{"gain", SplitCriterion::kGain},
                                              {"gain-ratio", SplitCriterion::kGainRatio}};
  return n;
}

}  // namespace internal

inline const internal::EnumNames<NoiseMode>& NoiseModeNames() {
  static const internal::EnumNames<NoiseMode> n = {
      {"per-record", NoiseMode::kPerRecord},
      {"per-attribute", NoiseMode::kPerAttributeConstant}};
  return n;
}
inline const internal::EnumNames<WrapMode>& WrapModeNames() {
  static const internal::EnumNames<WrapMode> n = {{"modular", WrapMode::kModular},
                                                  {"paper-literal", WrapMode::kPaperLiteral}};
  return n;
}
inline const internal::EnumNames<LwpaScope>& LwpaScopeNames() {
  static const internal::EnumNames<LwpaScope> n = {{"tree", LwpaScope::kTreeTested},
                                                   {"all", LwpaScope::kAllFeatures}};
  return n;
}
inline const internal::EnumNames<CaptTarget>& CaptTargetNames() {
  static const internal::EnumNames<CaptTarget> n = {
      {"class", CaptTarget::kClassColumn},
      {"all-categorical", CaptTarget::kAllCategorical},
      {"off", CaptTarget::kOff}};
  return n;
}
inline const internal::EnumNames<SiblingRule>& SiblingRuleNames() {
  static const internal::EnumNames<SiblingRule> n = {
      {"literal", SiblingRule::kLiteral},
      {"leaf-siblings-only", SiblingRule::kLeafSiblingsOnly}};
  return n;
}

struct RunConfig {
  std::string dataset = std::string(kBuiltinLiver);
  std::vector<AttributeDescriptor> schema;
  CsvOptions csv;
  std::optional<DomainOverrides> domain_overrides;
  BuildParams build;
  PerturbConfig perturb;
  double test_fraction = 0.3;
  std::string output;
  std::string report;

  bool is_builtin_liver() const { return dataset == kBuiltinLiver; }

  // Domain overrides to use: explicit ones, else the Liver fixture's.
  DomainOverrides EffectiveDomainOverrides() const {
    if (domain_overrides) return *domain_overrides;
    if (is_builtin_liver()) return LiverSampleDomainOverrides();
    return {};
  }

  static RunConfig FromJson(const nlohmann::json& j,
                            const std::filesystem::path& base_dir = {}) {
    using internal::ParseEnum;
    RunConfig cfg;
    try {
      if (!j.is_object()) throw ConfigError("config must be a JSON object");
      const auto resolve = [&](const std::string& p) {
        const std::filesystem::path path(p);
        if (path.is_absolute() || base_dir.empty()) return path.string();
        return (base_dir / path).lexically_normal().string();
      };
      if (j.contains("dataset")) {
        const std::string d = j.at("dataset").get<std::string>();
        cfg.dataset = d == kBuiltinLiver ? d : resolve(d);
      }
      cfg.csv.has_header = j.value("has_header", true);
      if (j.contains("schema")) {
        for (const auto& col : j.at("schema")) {
          AttributeDescriptor attr;
          attr.name = col.at("name").get<std::string>();
          attr.kind = ParseEnum("schema kind", col.value("kind", std::string("numeric")),
                                internal::KindNames());
          attr.role = ParseEnum("schema role", col.value("role", std::string("feature")),
                                internal::RoleNames());
          cfg.schema.push_back(std::move(attr));
        }
      }
      if (j.contains("class_from_percentile")) {
        const auto& rule = j.at("class_from_percentile");
        PercentileClassRule r;
        r.percentile = rule.value("percentile", r.percentile);
        r.low_label = rule.value("low_label", r.low_label);
        r.high_label = rule.value("high_label", r.high_label);
        cfg.csv.class_rule = r;
      }
      if (j.contains("domains")) {
        DomainOverrides overrides;
        for (const auto& [name, range] : j.at("domains").items()) {
          if (!range.is_array() || range.size() != 2) {
            throw ConfigError("domain for '" + name + "' must be [low, high]");
          }
          overrides[name] = {range[0].get<double>(), range[1].get<double>()};
        }
        cfg.domain_overrides = std::move(overrides);
      }
      if (j.contains("build")) {
        const auto& b = j.at("build");
        cfg.build.min_records_to_split =
            b.value("min_records_to_split", cfg.build.min_records_to_split);
        if (b.contains("criterion")) {
          cfg.build.criterion = ParseEnum("build.criterion",
                                          b.at("criterion").get<std::string>(),
                                          internal::CriterionNames());
        }
        if (b.contains("max_depth") && !b.at("max_depth").is_null()) {
          cfg.build.max_depth = b.at("max_depth").get<int>();
        }
      }
      if (j.contains("perturb")) {
        const auto& p = j.at("perturb");
        PerturbConfig& pc = cfg.perturb;
        pc.p = p.value("p", pc.p);
        pc.noise_scale_lrpa = p.value("scale_lrpa", pc.noise_scale_lrpa);
        pc.noise_scale_lwpa = p.value("scale_lwpa", pc.noise_scale_lwpa);
        pc.noise_mean = p.value("noise_mean", pc.noise_mean);
        pc.num_workers = p.value("workers", pc.num_workers);
        if (p.contains("noise_mode")) {
          pc.noise_mode = ParseEnum("perturb.noise_mode", p.at("noise_mode").get<std::string>(),
                                    NoiseModeNames());
        }
        if (p.contains("wrap")) {
          pc.wrap_mode = ParseEnum("perturb.wrap", p.at("wrap").get<std::string>(),
                                   WrapModeNames());
        }
        if (p.contains("lwpa_scope")) {
          pc.lwpa_scope = ParseEnum("perturb.lwpa_scope", p.at("lwpa_scope").get<std::string>(),
                                    LwpaScopeNames());
        }
        if (p.contains("capt_target")) {
          pc.capt_target = ParseEnum("perturb.capt_target",
                                     p.at("capt_target").get<std::string>(), CaptTargetNames());
        }
        if (p.contains("capt_sibling_rule")) {
          pc.capt_sibling_rule =
              ParseEnum("perturb.capt_sibling_rule",
                        p.at("capt_sibling_rule").get<std::string>(), SiblingRuleNames());
        }
        if (p.contains("inject_shift")) {
          for (const auto& [name, v] : p.at("inject_shift").items()) {
            pc.injected_shifts[name] = v.get<double>();
          }
        }
      }
      cfg.perturb.seed = j.value("seed", cfg.perturb.seed);
      cfg.test_fraction = j.value("test_fraction", cfg.test_fraction);
      if (j.contains("output")) cfg.output = resolve(j.at("output").get<std::string>());
      if (j.contains("report")) cfg.report = resolve(j.at("report").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
    cfg.Validate();
    return cfg;
  }

  void Validate() const {
    if (!is_builtin_liver()) {
      if (schema.empty()) throw ConfigError("config: a CSV dataset needs a schema");
      ValidateSchema(schema, csv.class_rule.has_value());
    }
    perturb.Validate();
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
      throw ConfigError("config: test_fraction must be in (0, 1)");
    }
  }

  nlohmann::ordered_json ToJson() const {
    using internal::EnumName;
    nlohmann::ordered_json j;
    j["dataset"] = dataset;
    j["has_header"] = csv.has_header;
    j["schema"] = nlohmann::ordered_json::array();
    for (const AttributeDescriptor& a : schema) {
      j["schema"].push_back({{"name", a.name},
                             {"kind", EnumName(a.kind, internal::KindNames())},
                             {"role", EnumName(a.role, internal::RoleNames())}});
    }
    if (csv.class_rule) {
      j["class_from_percentile"] = {{"percentile", csv.class_rule->percentile},
                                    {"low_label", csv.class_rule->low_label},
                                    {"high_label", csv.class_rule->high_label}};
    }
    nlohmann::ordered_json domains = nlohmann::ordered_json::object();
    for (const auto& [name, range] : EffectiveDomainOverrides()) {
      domains[name] = {range.first, range.second};
    }
    j["domains"] = domains;
    j["build"] = {{"min_records_to_split", build.min_records_to_split},
                  {"criterion", EnumName(build.criterion, internal::CriterionNames())},
                  {"max_depth", build.max_depth ? nlohmann::ordered_json(*build.max_depth)
                                                : nlohmann::ordered_json(nullptr)}};
    j["perturb"] = {
        {"p", perturb.p},
        {"noise_mode", EnumName(perturb.noise_mode, NoiseModeNames())},
        {"scale_lrpa", perturb.noise_scale_lrpa},
        {"scale_lwpa", perturb.noise_scale_lwpa},
        {"noise_mean", perturb.noise_mean},
        {"wrap", EnumName(perturb.wrap_mode, WrapModeNames())},
        {"lwpa_scope", EnumName(perturb.lwpa_scope, LwpaScopeNames())},
        {"capt_target", EnumName(perturb.capt_target, CaptTargetNames())},
        {"capt_sibling_rule", EnumName(perturb.capt_sibling_rule, SiblingRuleNames())},
        {"inject_shift", perturb.injected_shifts},
    };
    j["seed"] = perturb.seed;
    j["test_fraction"] = test_fraction;
    return j;
  }
};

inline RunConfig LoadRunConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return RunConfig::FromJson(j, std::filesystem::path(path).parent_path());
}

inline Dataset LoadDataset(const RunConfig& cfg) {
  if (cfg.is_builtin_liver()) return EmbeddedLiverSample();
  return LoadCsv(cfg.dataset, cfg.schema, cfg.csv);
}

}  // namespace treenoise

#endif  // TREENOISE_CONFIG_H_
