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

// treenoise: build trees, perturb datasets and compare classifiers.
//
//   treenoise tree    [--config run.json] [--format text|json] [--out tree.json]
//   treenoise perturb [--config run.json] [--out perturbed.csv] [--report r.json]
//   treenoise eval    [--config run.json] [--report eval.json]
//   treenoise demo
//
// Exit codes: 0 success, 2 configuration error, 3 data error, 4 failed
// internal check.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treenoise/treenoise.h"

namespace {

using treenoise::Error;
using treenoise::ErrorKind;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

struct Flags {
  std::string config;
  std::string dataset;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string report;
  std::string format = "text";
  std::vector<std::string> inject_shift;
  std::optional<double> p;
  std::string noise_mode;
  std::optional<double> scale_lrpa;
  std::optional<double> scale_lwpa;
  std::string wrap;
  std::string lwpa_scope;
  std::string capt_target;
  std::string criterion;
  std::optional<int> workers;
};

void AddCommonFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Run configuration (JSON)");
  cmd->add_option("--dataset", f.dataset, "CSV path or builtin:liver (overrides config)");
  cmd->add_option("--seed", f.seed, "Seed for splitting and noise");
  cmd->add_option("--out", f.out, "Output file");
  cmd->add_option("--report", f.report, "Report file (JSON)");
  cmd->add_option("--format", f.format, "Console output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--criterion", f.criterion, "Split criterion")
      ->check(CLI::IsMember({"gain", "gain-ratio"}));
}

void AddPerturbFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--inject-shift", f.inject_shift,
                  "Fixed shift replacing the noise draw, as ATTR=VALUE (repeatable)");
  cmd->add_option("--p", f.p, "Probability a shuffled-leaf record keeps its label");
  cmd->add_option("--noise-mode", f.noise_mode)
      ->check(CLI::IsMember({"per-record", "per-attribute"}));
  cmd->add_option("--scale-lrpa", f.scale_lrpa, "Noise sd / attribute sd on the leaf path");
  cmd->add_option("--scale-lwpa", f.scale_lwpa, "Noise sd / attribute sd off the leaf path");
  cmd->add_option("--wrap", f.wrap)->check(CLI::IsMember({"modular", "paper-literal"}));
  cmd->add_option("--lwpa-scope", f.lwpa_scope)->check(CLI::IsMember({"tree", "all"}));
  cmd->add_option("--capt-target", f.capt_target)
      ->check(CLI::IsMember({"class", "all-categorical", "off"}));
  cmd->add_option("--workers", f.workers, "Worker threads for perturbation");
}

treenoise::RunConfig ResolveConfig(const Flags& f) {
  using namespace treenoise;
  RunConfig cfg = f.config.empty() ? RunConfig{} : LoadRunConfig(f.config);
  if (!f.dataset.empty()) cfg.dataset = f.dataset;
  if (f.seed) cfg.perturb.seed = *f.seed;
  if (!f.out.empty()) cfg.output = f.out;
  if (!f.report.empty()) cfg.report = f.report;
  if (!f.criterion.empty()) {
    cfg.build.criterion = f.criterion == "gain" ? SplitCriterion::kGain
                                                : SplitCriterion::kGainRatio;
  }
  for (const std::string& spec : f.inject_shift) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("--inject-shift expects ATTR=VALUE, got '" + spec + "'");
    }
    const std::optional<double> v = internal::ParseDouble(spec.substr(eq + 1));
    if (!v) throw ConfigError("--inject-shift: bad number in '" + spec + "'");
    cfg.perturb.injected_shifts[spec.substr(0, eq)] = *v;
  }
  if (f.p) cfg.perturb.p = *f.p;
  if (f.scale_lrpa) cfg.perturb.noise_scale_lrpa = *f.scale_lrpa;
  if (f.scale_lwpa) cfg.perturb.noise_scale_lwpa = *f.scale_lwpa;
  if (f.workers) cfg.perturb.num_workers = *f.workers;
  if (!f.noise_mode.empty()) {
    cfg.perturb.noise_mode = internal::ParseEnum("--noise-mode", f.noise_mode, NoiseModeNames());
  }
  if (!f.wrap.empty()) {
    cfg.perturb.wrap_mode = internal::ParseEnum("--wrap", f.wrap, WrapModeNames());
  }
  if (!f.lwpa_scope.empty()) {
    cfg.perturb.lwpa_scope = internal::ParseEnum("--lwpa-scope", f.lwpa_scope, LwpaScopeNames());
  }
  if (!f.capt_target.empty()) {
    cfg.perturb.capt_target =
        internal::ParseEnum("--capt-target", f.capt_target, CaptTargetNames());
  }
  cfg.Validate();
  return cfg;
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw treenoise::ConfigError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw treenoise::DataError("failed writing '" + path + "'");
}

int CmdTree(const Flags& f) {
  const treenoise::RunConfig cfg = ResolveConfig(f);
  const treenoise::Dataset ds = treenoise::LoadDataset(cfg);
  const treenoise::DecisionTree tree = treenoise::DecisionTree::Build(ds, cfg.build);
  const std::string json = tree.ToJson().dump(2) + "\n";
  std::cout << (f.format == "json" ? json : tree.ToText());
  if (!cfg.output.empty()) WriteFile(cfg.output, json);
  return kExitOk;
}

int CmdPerturb(const Flags& f) {
  const treenoise::RunConfig cfg = ResolveConfig(f);
  const treenoise::Dataset ds = treenoise::LoadDataset(cfg);
  const treenoise::PipelineResult result = treenoise::RunPipeline(
      ds, cfg.build, cfg.perturb, cfg.EffectiveDomainOverrides());
  nlohmann::ordered_json report;
  report["perturbation"] = result.report.ToJson();
  report["config"] = cfg.ToJson();
  if (cfg.output.empty()) {
    std::cout << result.perturbed.ToCsv();
  } else {
    WriteFile(cfg.output, result.perturbed.ToCsv());
    std::cout << "wrote " << result.perturbed.num_rows() << " records to " << cfg.output
              << "\n";
  }
  if (!cfg.report.empty()) WriteFile(cfg.report, report.dump(2) + "\n");
  return kExitOk;
}

int CmdEval(const Flags& f) {
  const treenoise::RunConfig cfg = ResolveConfig(f);
  const treenoise::Dataset ds = treenoise::LoadDataset(cfg);
  treenoise::EvalReport report =
      treenoise::CompareRuns(ds, cfg.build, cfg.perturb, cfg.test_fraction,
                             cfg.perturb.seed, cfg.EffectiveDomainOverrides());
  report.config_echo = cfg.ToJson();
  const std::string json = report.ToJson().dump(2) + "\n";
  std::cout << (f.format == "json" ? json : report.ToTable());
  if (!cfg.report.empty()) WriteFile(cfg.report, json);
  return kExitOk;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

// Liver walkthrough: entropy figures, induced tree, constant-shift
// perturbation and the tree comparison.
int CmdDemo() {
  using namespace treenoise;
  const Dataset ds = EmbeddedLiverSample();
  const std::size_t cls = ds.class_index();
  std::vector<std::string> failures;
  const auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  ClassDistribution all;
  for (std::size_t r = 0; r < ds.num_rows(); ++r) all.Add(ds.label(cls, r));
  const auto partition_by = [&](const std::string& attr) {
    const std::size_t col = ds.ColumnIndex(attr);
    std::map<std::string, ClassDistribution> parts;
    for (std::size_t r = 0; r < ds.num_rows(); ++r) parts[ds.label(col, r)].Add(ds.label(cls, r));
    std::vector<ClassDistribution> out;
    for (auto& [label, d] : parts) out.push_back(d);
    return out;
  };
  const std::vector<ClassDistribution> by_size = partition_by("LiverSize");
  const std::vector<ClassDistribution> by_pizza = partition_by("EatsPizza");
  const double info = Entropy(all);
  const double info_size = PartitionEntropy(by_size);
  const double gain_size = Gain(all, by_size);
  const double gain_pizza = Gain(all, by_pizza);
  const std::optional<NumericSplit> weight =
      BestNumericSplit(ds, "PatientsWeight", SplitCriterion::kGain);
  check(weight.has_value(), "PatientsWeight has a split");
  const double gain_weight = weight ? weight->score : 0.0;

  std::cout << "Liver sample: " << ds.num_rows() << " records (CLASS1: "
            << all.counts["CLASS1"] << ", CLASS2: " << all.counts["CLASS2"] << ")\n\n";
  std::cout << "Info(S)                 = " << Fixed(info, 3) << " bits\n";
  std::cout << "Info_LiverSize(S)       = " << Fixed(info_size, 3) << " bits\n";
  std::cout << "Gain(LiverSize)         = " << Fixed(info, 3) << " - " << Fixed(info_size, 3)
            << " = " << Fixed(std::round(info * 1000) / 1000 - std::round(info_size * 1000) / 1000, 3)
            << "  (unrounded " << Fixed(gain_size, 5) << ")\n";
  std::cout << "Gain(EatsPizza)         = " << Fixed(gain_pizza, 3) << " bits\n";
  std::cout << "Gain(PatientsWeight)    = " << Fixed(gain_weight, 3) << " bits (threshold "
            << internal::FormatNumber(weight ? weight->threshold : 0.0) << ")\n";
  std::cout << "GainRatio(LiverSize)    = " << Fixed(GainRatio(all, by_size), 3) << "\n\n";
  check(std::abs(info - 0.940) <= 1e-3, "Info(S) = 0.940");
  check(std::abs(info_size - 0.694) <= 1e-3, "Info_LiverSize(S) = 0.694");
  check(std::abs(gain_size - 0.246) <= 1e-3, "Gain(LiverSize) = 0.246");
  check(std::abs(gain_pizza - 0.048) <= 1e-3, "Gain(EatsPizza) = 0.048");
  check(std::abs(gain_weight - 0.103) <= 1e-3, "Gain(PatientsWeight) = 0.103");

  const DecisionTree tree = DecisionTree::Build(ds);
  std::cout << "Induced tree:\n" << tree.ToText() << "\n";
  check(tree.root().test && tree.root().test->attribute == "LiverSize", "root tests LiverSize");

  PerturbConfig cfg = PerturbConfig::Identity();
  cfg.noise_mode = NoiseMode::kPerAttributeConstant;
  cfg.injected_shifts["PatientsWeight"] = -4.26;
  const PipelineResult run = RunPipeline(ds, BuildParams{}, cfg, LiverSampleDomainOverrides());
  const std::size_t w = ds.ColumnIndex("PatientsWeight");
  std::cout << "PatientsWeight  original -> perturbed (shift -4.26)\n";
  for (std::size_t r = 0; r < ds.num_rows(); ++r) {
    std::cout << "  " << ds.label(0, r) << std::string(10 - ds.label(0, r).size(), ' ')
              << internal::FormatNumber(ds.numeric(w, r)) << " -> "
              << Fixed(run.perturbed.numeric(w, r), 2) << "\n";
    check(std::abs(run.perturbed.numeric(w, r) - (ds.numeric(w, r) - 4.26)) < 1e-9,
          "row " + std::to_string(r + 1) + " shifted by -4.26");
  }

  const DecisionTree shifted = DecisionTree::Build(run.perturbed);
  const double similarity = Similarity(tree, shifted, ThresholdMatch::kIgnore);
  std::cout << "\nTree on perturbed data:\n" << shifted.ToText();
  std::cout << "\nTree similarity (thresholds ignored): " << Fixed(similarity, 3) << "\n";
  check(similarity == 1.0, "similarity 1.000");
  for (std::size_t i = 0; i < tree.num_nodes() && i < shifted.num_nodes(); ++i) {
    const TreeNode& a = tree.node(static_cast<int>(i));
    const TreeNode& b = shifted.node(static_cast<int>(i));
    if (a.test && b.test && a.test->is_numeric()) {
      std::cout << "Threshold " << a.test->attribute << ": "
                << internal::FormatNumber(a.test->threshold) << " -> "
                << internal::FormatNumber(b.test->threshold) << "\n";
      check(std::abs(b.test->threshold - a.test->threshold + 4.26) < 1e-9,
            "threshold shifted by -4.26");
    }
  }

  if (!failures.empty()) {
    for (const std::string& what : failures) std::cerr << "check failed: " << what << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
      return kExitConfig;
    case ErrorKind::kData:
      return kExitData;
    case ErrorKind::kInternal:
      return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-guided noise addition for privacy-preserving classification"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* tree = app.add_subcommand("tree", "Induce and print a decision tree");
  CLI::App* perturb = app.add_subcommand("perturb", "Write a perturbed copy of a dataset");
  CLI::App* eval = app.add_subcommand("eval", "Compare classifiers before/after perturbation");
  app.add_subcommand("demo", "Run the built-in Liver walkthrough");
  for (CLI::App* cmd : {tree, perturb, eval}) AddCommonFlags(cmd, flags);
  for (CLI::App* cmd : {perturb, eval}) AddPerturbFlags(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  const char* stage = "demo";
  try {
    if (tree->parsed()) {
      stage = "tree";
      return CmdTree(flags);
    }
    if (perturb->parsed()) {
      stage = "perturb";
      return CmdPerturb(flags);
    }
    if (eval->parsed()) {
      stage = "eval";
      return CmdEval(flags);
    }
    return CmdDemo();
  } catch (const Error& e) {
    std::cerr << "treenoise " << stage << ": " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "treenoise " << stage << ": internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
