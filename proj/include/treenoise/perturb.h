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

// Tree-guided perturbation of a dataset.
//
// Given a tree induced on the original data, each record is routed to its
// leaf and its attributes are perturbed according to their role on that
// record's path:
//
//  * numeric attributes on the leaf-reaching path (LRPA) get Gaussian noise
//    with standard deviation noise_scale_lrpa * sigma(attribute);
//  * numeric attributes off the path (LWPA) get noise_scale_lwpa * sigma;
//  * categorical targets (the class column by default) are shuffled per
//    leaf (the CAPT step): in a heterogeneous leaf without siblings a record
//    is resampled with probability 1 - p using weights
//        q   = m / (m + k)          for the majority label,
//        l_i = n_i / (n_i + k)      for minority label i,
//    where m is the majority count, n_i the minority counts and k = sum n_i;
//    in a leaf with siblings the record takes the leaf's majority label.
//
// Values pushed outside their domain [a, a + D] are wrapped back (VWrap).
// All stages route against the original tree and read original values, so
// they touch disjoint cells and their order does not matter.

#ifndef TREENOISE_PERTURB_H_
#define TREENOISE_PERTURB_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "treenoise/dataset.h"
#include "treenoise/error.h"
#include "treenoise/paths.h"
#include "treenoise/rng.h"
#include "treenoise/tree.h"

namespace treenoise {

enum class NoiseMode {
  kPerRecord,             // independent draw per (record, attribute)
  kPerAttributeConstant,  // one draw per attribute, applied to every record
};

enum class WrapMode {
  kModular,       // modulo the domain; always lands inside it
  kPaperLiteral,  // a + d - 1 for both overflow and underflow
};

enum class CaptTarget { kOff, kClassColumn, kAllCategorical };

struct PerturbConfig {
  double p = 0.9;  // probability a record in a shuffled leaf keeps its label
  NoiseMode noise_mode = NoiseMode::kPerRecord;
  double noise_scale_lrpa = 0.05;
  double noise_scale_lwpa = 0.15;
  double noise_mean = 0.0;
  WrapMode wrap_mode = WrapMode::kModular;
  LwpaScope lwpa_scope = LwpaScope::kAllFeatures;
  CaptTarget capt_target = CaptTarget::kClassColumn;
  SiblingRule capt_sibling_rule = SiblingRule::kLiteral;
  std::uint64_t seed = 42;
  // Fixed shifts that replace the noise draw for the named attributes.
  std::map<std::string, double> injected_shifts;
  int num_workers = 1;

  void Validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must be in [0, 1]");
    if (!(noise_scale_lrpa >= 0.0) || !(noise_scale_lwpa >= 0.0)) {
      throw ConfigError("noise scales must be non-negative");
    }
    if (!std::isfinite(noise_mean)) throw ConfigError("noise mean must be finite");
    if (num_workers < 1) throw ConfigError("num_workers must be at least 1");
    for (const auto& [name, shift] : injected_shifts) {
      if (!std::isfinite(shift)) {
        throw ConfigError("injected shift for '" + name + "' must be finite");
      }
    }
  }

  // Zero noise and no shuffling.
  static PerturbConfig Identity() {
    PerturbConfig cfg;
    cfg.p = 1.0;
    cfg.noise_scale_lrpa = 0.0;
    cfg.noise_scale_lwpa = 0.0;
    cfg.capt_target = CaptTarget::kOff;
    return cfg;
  }
};

// Maps an out-of-domain value back into [low, low + width]. In-domain values
// are returned unchanged in both modes.
//
// kModular on an integral domain wraps on the lattice of width + 1 points,
// so an overflow by d lands on low + d - 1; fractional results are clamped
// to the domain. On a continuous domain it wraps modulo the width.
// kPaperLiteral applies low + d - 1 with d = value - high on overflow and
// d = value - low on underflow; underflow results fall below the domain.
inline double VWrap(double value, const DomainRange& domain, WrapMode mode) {
  if (!(domain.width >= 0.0)) throw ConfigError("domain width must be non-negative");
  if (!std::isfinite(value)) throw DataError("cannot wrap a non-finite value");
  if (domain.Contains(value)) return value;
  if (mode == WrapMode::kPaperLiteral) {
    const double d = value > domain.high() ? value - domain.high() : value - domain.low;
    return domain.low + d - 1.0;
  }
  if (domain.integral) {
    const double period = domain.width + 1.0;
    double r = std::fmod(value - domain.low, period);
    if (r < 0.0) r += period;
    return std::clamp(domain.low + r, domain.low, domain.high());
  }
  if (domain.width == 0.0) return domain.low;
  double r = std::fmod(value - domain.low, domain.width);
  if (r < 0.0) r += domain.width;
  return std::min(domain.low + r, domain.high());
}

struct CaptLeafStats {
  std::string column;
  int leaf_id = -1;
  bool has_siblings = false;
  std::string majority;
  std::int64_t m = 0;
  std::vector<std::pair<std::string, std::int64_t>> minorities;  // n_i
  std::int64_t k = 0;
  double q = 0.0;
  std::map<std::string, double> l;  // l_i per minority label
  std::int64_t relabeled = 0;
};

struct PerturbReport {
  std::map<std::string, std::int64_t> changed_cells;
  std::map<std::string, std::int64_t> wrap_events;
  std::int64_t capt_relabels = 0;
  // Per-attribute shift applied in constant mode or by injection.
  std::map<std::string, double> realized_shifts;
  std::set<std::string> injected_attributes;
  std::vector<CaptLeafStats> capt_leaves;

  void Merge(const PerturbReport& other) {
    for (const auto& [k, v] : other.changed_cells) changed_cells[k] += v;
    for (const auto& [k, v] : other.wrap_events) wrap_events[k] += v;
    capt_relabels += other.capt_relabels;
    for (const auto& [k, v] : other.realized_shifts) realized_shifts[k] = v;
    injected_attributes.insert(other.injected_attributes.begin(),
                               other.injected_attributes.end());
    capt_leaves.insert(capt_leaves.end(), other.capt_leaves.begin(),
                       other.capt_leaves.end());
  }

  nlohmann::ordered_json ToJson() const {
    nlohmann::ordered_json j;
    j["changed_cells"] = changed_cells;
    j["wrap_events"] = wrap_events;
    j["capt_relabels"] = capt_relabels;
    j["realized_shifts"] = realized_shifts;
    j["injected_attributes"] = injected_attributes;
    j["capt_leaves"] = nlohmann::ordered_json::array();
    for (const CaptLeafStats& s : capt_leaves) {
      nlohmann::ordered_json leaf;
      leaf["column"] = s.column;
      leaf["leaf_id"] = s.leaf_id;
      leaf["has_siblings"] = s.has_siblings;
      leaf["majority"] = s.majority;
      leaf["m"] = s.m;
      nlohmann::ordered_json minorities = nlohmann::ordered_json::object();
      for (const auto& [label, n] : s.minorities) minorities[label] = n;
      leaf["n"] = minorities;
      leaf["t"] = s.minorities.size();
      leaf["k"] = s.k;
      leaf["q"] = s.q;
      leaf["l"] = s.l;
      leaf["relabeled"] = s.relabeled;
      j["capt_leaves"].push_back(std::move(leaf));
    }
    return j;
  }
};

namespace internal {

// Runs fn(begin, end, worker) over contiguous blocks of [0, n). The first
// exception thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void ParallelFor(std::size_t n, int workers, Fn&& fn) {
  const std::size_t w = std::max<std::size_t>(
      1, std::min<std::size_t>(static_cast<std::size_t>(workers), n));
  if (w == 1) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  {
    std::vector<std::jthread> threads;
    const std::size_t block = (n + w - 1) / w;
    for (std::size_t i = 0; i < w; ++i) {
      const std::size_t begin = std::min(n, i * block);
      const std::size_t end = std::min(n, begin + block);
      threads.emplace_back([&, begin, end, i] {
        try {
          fn(begin, end, i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

enum class NoiseStage { kLrpa, kLwpa };

inline void CheckInjectedShifts(const DecisionTree& tree, const PerturbConfig& cfg) {
  for (const auto& [name, shift] : cfg.injected_shifts) {
    const bool known = std::any_of(
        tree.features().begin(), tree.features().end(),
        [&](const AttributeDescriptor& f) { return f.name == name && f.is_numeric(); });
    if (!known) {
      throw ConfigError("injected shift names '" + name +
                        "', which is not a numeric feature");
    }
  }
}

// Adds noise to the stage's attribute set of every record. Reads `original`,
// writes `out` (a copy of `original` or of an earlier stage's output).
inline PerturbReport AddPathNoise(const Dataset& original, const DecisionTree& tree,
                                  const std::map<std::string, NormalFit>& fits,
                                  const std::map<std::string, DomainRange>& domains,
                                  const PerturbConfig& cfg, NoiseStage stage,
                                  Dataset& out) {
  cfg.Validate();
  CheckInjectedShifts(tree, cfg);
  if (out.num_rows() != original.num_rows()) {
    throw InternalError("output dataset has a different row count");
  }
  const double alpha =
      stage == NoiseStage::kLrpa ? cfg.noise_scale_lrpa : cfg.noise_scale_lwpa;
  const LwpaScope scope = cfg.lwpa_scope;
  const auto stage_key = static_cast<std::uint64_t>(
      stage == NoiseStage::kLrpa ? RngStage::kLrpaNoise : RngStage::kLwpaNoise);

  struct Target {
    std::size_t column = 0;
    const NormalFit* fit = nullptr;
    const DomainRange* domain = nullptr;
    std::optional<double> constant_shift;
  };
  std::map<std::string, Target> targets;
  for (const AttributeDescriptor& f : tree.features()) {
    if (!f.is_numeric()) continue;
    Target t;
    t.column = original.ColumnIndex(f.name);
    if (auto it = fits.find(f.name); it != fits.end()) t.fit = &it->second;
    if (auto it = domains.find(f.name); it != domains.end()) t.domain = &it->second;
    if (auto it = cfg.injected_shifts.find(f.name); it != cfg.injected_shifts.end()) {
      t.constant_shift = it->second;
    } else if (cfg.noise_mode == NoiseMode::kPerAttributeConstant && t.fit) {
      // One draw per attribute, shared by both stages (keyed without the
      // stage) so every record of the attribute moves by the same amount.
      KeyedStream rng(cfg.seed, {static_cast<std::uint64_t>(RngStage::kConstantShift),
                                 static_cast<std::uint64_t>(t.column)});
      t.constant_shift =
          cfg.noise_mean + cfg.noise_scale_lrpa * t.fit->stddev * rng.NextGaussian();
    }
    targets.emplace(f.name, t);
  }

  const int workers = cfg.num_workers;
  std::vector<PerturbReport> local(static_cast<std::size_t>(workers));
  ParallelFor(original.num_rows(), workers,
              [&](std::size_t begin, std::size_t end, std::size_t w) {
    PerturbReport& report = local[w];
    for (std::size_t row = begin; row < end; ++row) {
      const RoutedPath path = Route(tree, original, row);
      const PathAttributeSets sets = PathSets(path, tree, scope);
      const std::set<std::string>& attrs =
          stage == NoiseStage::kLrpa ? sets.lrpa : sets.lwpa;
      for (const std::string& name : attrs) {
        const auto it = targets.find(name);
        if (it == targets.end()) continue;  // categorical
        const Target& t = it->second;
        if (!t.fit) throw DataError("no normal fit for attribute '" + name + "'");
        if (!t.domain) throw DataError("no domain for attribute '" + name + "'");
        double noise = 0.0;
        if (t.constant_shift) {
          noise = *t.constant_shift;
          report.realized_shifts[name] = noise;
          if (cfg.injected_shifts.contains(name)) report.injected_attributes.insert(name);
        } else {
          KeyedStream rng(cfg.seed, {stage_key, static_cast<std::uint64_t>(row),
                                     static_cast<std::uint64_t>(t.column)});
          noise = cfg.noise_mean + alpha * t.fit->stddev * rng.NextGaussian();
        }
        const double before = original.numeric(t.column, row);
        double after = before + noise;
        if (!t.domain->Contains(after)) {
          after = VWrap(after, *t.domain, cfg.wrap_mode);
          ++report.wrap_events[name];
        }
        out.SetNumeric(t.column, row, after);
        if (after != before) ++report.changed_cells[name];
      }
    }
  });
  PerturbReport merged;
  for (const PerturbReport& r : local) merged.Merge(r);
  return merged;
}

inline std::vector<std::size_t> CaptColumns(const Dataset& ds, CaptTarget target) {
  std::vector<std::size_t> cols;
  if (target == CaptTarget::kOff) return cols;
  cols.push_back(ds.class_index());
  if (target == CaptTarget::kAllCategorical) {
    for (std::size_t c : ds.FeatureColumns()) {
      if (ds.attribute(c).is_categorical()) cols.push_back(c);
    }
  }
  return cols;
}

inline PerturbReport ApplyCapt(const Dataset& original, const DecisionTree& tree,
                               const PerturbConfig& cfg, Dataset& out) {
  cfg.Validate();
  PerturbReport report;
  for (std::size_t col : CaptColumns(original, cfg.capt_target)) {
    const std::string& name = original.attribute(col).name;
    for (const auto& [leaf_id, pop] : LeafPopulations(tree, original, col)) {
      if (pop.empty()) continue;
      CaptLeafStats stats;
      stats.column = name;
      stats.leaf_id = leaf_id;
      stats.has_siblings = LeafHasSiblings(tree, leaf_id, cfg.capt_sibling_rule);
      stats.majority = pop.majority;
      stats.m = pop.majority_count;
      stats.minorities = pop.minorities;
      for (const auto& [label, n] : pop.minorities) stats.k += n;
      stats.q = static_cast<double>(stats.m) / static_cast<double>(stats.m + stats.k);
      for (const auto& [label, n] : pop.minorities) {
        stats.l[label] = static_cast<double>(n) / static_cast<double>(n + stats.k);
      }

      for (std::size_t row : pop.rows) {
        const std::string& current = original.label(col, row);
        std::string next = current;
        if (stats.has_siblings) {
          next = pop.majority;
        } else if (pop.heterogeneous()) {
          KeyedStream rng(cfg.seed, {static_cast<std::uint64_t>(RngStage::kCapt),
                                     static_cast<std::uint64_t>(row),
                                     static_cast<std::uint64_t>(col)});
          if (rng.NextUniform() < 1.0 - cfg.p) {
            // q and l_i need not sum to 1; they are used as relative weights.
            double total = stats.q;
            for (const auto& [label, w] : stats.l) total += w;
            double pick = rng.NextUniform() * total;
            next = pop.majority;
            if (pick >= stats.q) {
              pick -= stats.q;
              for (const auto& [label, w] : stats.l) {
                next = label;
                if (pick < w) break;
                pick -= w;
              }
            }
          }
        }
        if (next != current) {
          out.SetLabel(col, row, next);
          ++stats.relabeled;
          ++report.capt_relabels;
          ++report.changed_cells[name];
        }
      }
      report.capt_leaves.push_back(std::move(stats));
    }
  }
  return report;
}

}  // namespace internal

// Noise on each record's leaf-reaching-path numeric attributes.
inline std::pair<Dataset, PerturbReport> PerturbLeafReachingPath(
    const Dataset& ds, const DecisionTree& tree,
    const std::map<std::string, NormalFit>& fits,
    const std::map<std::string, DomainRange>& domains, const PerturbConfig& cfg) {
  Dataset out = ds;
  PerturbReport report = internal::AddPathNoise(ds, tree, fits, domains, cfg,
                                                internal::NoiseStage::kLrpa, out);
  return {std::move(out), std::move(report)};
}

// Noise on each record's leaf-wrong-path numeric attributes.
inline std::pair<Dataset, PerturbReport> PerturbLeafWrongPath(
    const Dataset& ds, const DecisionTree& tree,
    const std::map<std::string, NormalFit>& fits,
    const std::map<std::string, DomainRange>& domains, const PerturbConfig& cfg) {
  Dataset out = ds;
  PerturbReport report = internal::AddPathNoise(ds, tree, fits, domains, cfg,
                                                internal::NoiseStage::kLwpa, out);
  return {std::move(out), std::move(report)};
}

// Leaf-level shuffle of categorical targets.
inline std::pair<Dataset, PerturbReport> Capt(const Dataset& ds, const DecisionTree& tree,
                                              const PerturbConfig& cfg) {
  Dataset out = ds;
  PerturbReport report = internal::ApplyCapt(ds, tree, cfg, out);
  return {std::move(out), std::move(report)};
}

struct PipelineResult {
  Dataset perturbed;
  DecisionTree tree;
  PerturbReport report;
  std::map<std::string, DomainRange> domains;
  std::map<std::string, NormalFit> fits;
};

// Builds the tree on `ds`, fits domains and normals on `ds`, then runs the
// LRPA noise, LWPA noise and CAPT stages, each against the original data.
inline PipelineResult RunPipeline(
    const Dataset& ds, const BuildParams& build_params, const PerturbConfig& cfg,
    const std::map<std::string, std::pair<double, double>>& domain_overrides = {}) {
  cfg.Validate();
  PipelineResult result;
  result.tree = DecisionTree::Build(ds, build_params);
  internal::CheckInjectedShifts(result.tree, cfg);
  result.domains = ComputeDomains(ds, domain_overrides);
  result.fits = FitNormals(ds);
  result.perturbed = ds;
  result.report.Merge(internal::AddPathNoise(ds, result.tree, result.fits, result.domains,
                                             cfg, internal::NoiseStage::kLrpa,
                                             result.perturbed));
  result.report.Merge(internal::AddPathNoise(ds, result.tree, result.fits, result.domains,
                                             cfg, internal::NoiseStage::kLwpa,
                                             result.perturbed));
  result.report.Merge(internal::ApplyCapt(ds, result.tree, cfg, result.perturbed));
  return result;
}

}  // namespace treenoise

#endif  // TREENOISE_PERTURB_H_
