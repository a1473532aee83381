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

// C4.5-style decision tree induction.
//
// Split selection uses the classic entropy measures:
//
//   info(S)        = -sum_i p_i log2 p_i            over class frequencies
//   info_A(S)      =  sum_j |S_j|/|S| info(S_j)     over the partitions of A
//   gain(A)        =  info(S) - info_A(S)
//   split_info(A)  = -sum_j |S_j|/|S| log2 |S_j|/|S|
//   gain_ratio(A)  =  gain(A) / split_info(A)
//
// Categorical attributes split multiway (one branch per value present at the
// node) and are consumed once per path. Numeric attributes split binary at
// midpoints between consecutive distinct values and stay reusable. There is
// no pruning: leaf populations are the exact training partitions.

#ifndef TREENOISE_TREE_H_
#define TREENOISE_TREE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "treenoise/dataset.h"
#include "treenoise/error.h"

namespace treenoise {

// Gains in (-kGainClampEpsilon, 0) are rounding noise and read as 0.
inline constexpr double kGainClampEpsilon = 1e-9;
// Minimum score for a candidate split to count as informative.
inline constexpr double kMinSplitScore = 1e-12;
// Scores closer than this are tied and fall through to the tie-break rule.
inline constexpr double kScoreTieEpsilon = 1e-12;

// Class label -> record count. Ordered by label so iteration and tie-breaks
// are deterministic.
struct ClassDistribution {
  std::map<std::string, std::int64_t> counts;

  ClassDistribution() = default;
  ClassDistribution(std::initializer_list<std::pair<const std::string, std::int64_t>> init)
      : counts(init) {}

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [label, n] : counts) t += n;
    return t;
  }

  void Add(const std::string& label, std::int64_t n = 1) { counts[label] += n; }

  // Most frequent label; ties go to the lexicographically smallest label.
  const std::string& Majority() const {
    if (counts.empty()) throw DataError("majority of an empty distribution");
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    return best->first;
  }

  std::size_t NumNonzero() const {
    return static_cast<std::size_t>(std::count_if(
        counts.begin(), counts.end(), [](const auto& kv) { return kv.second > 0; }));
  }

  friend bool operator==(const ClassDistribution&, const ClassDistribution&) = default;
};

namespace internal {

// Entropy of raw counts; zero counts contribute nothing.
template <typename Counts>
double EntropyOfCounts(const Counts& counts, double total) {
  double h = 0.0;
  for (const auto n : counts) {
    if (n <= 0) continue;
    const double p = static_cast<double>(n) / total;
    h -= p * std::log2(p);
  }
  return h;
}

inline std::vector<std::int64_t> CountsOf(const ClassDistribution& dist) {
  std::vector<std::int64_t> out;
  for (const auto& [label, n] : dist.counts) out.push_back(n);
  return out;
}

inline double ClampGain(double g) {
  return (g < 0.0 && g > -kGainClampEpsilon) ? 0.0 : g;
}

}  // namespace internal

inline double Entropy(const ClassDistribution& dist) {
  const std::int64_t total = dist.total();
  if (total <= 0) throw DataError("entropy of an empty distribution");
  for (const auto& [label, n] : dist.counts) {
    if (n < 0) throw DataError("negative class count for '" + label + "'");
  }
  return internal::EntropyOfCounts(internal::CountsOf(dist), static_cast<double>(total));
}

// Weighted mean entropy of the partitions. Empty partitions carry no weight.
inline double PartitionEntropy(std::span<const ClassDistribution> partitions) {
  std::int64_t total = 0;
  for (const ClassDistribution& p : partitions) total += p.total();
  if (total <= 0) throw DataError("partition entropy: all partitions are empty");
  double info = 0.0;
  for (const ClassDistribution& p : partitions) {
    const std::int64_t size = p.total();
    if (size == 0) continue;
    info += static_cast<double>(size) / static_cast<double>(total) * Entropy(p);
  }
  return info;
}

inline double Gain(const ClassDistribution& parent,
                   std::span<const ClassDistribution> partitions) {
  std::int64_t total = 0;
  for (const ClassDistribution& p : partitions) total += p.total();
  if (total != parent.total()) {
    throw DataError("gain: partition totals (" + std::to_string(total) +
                    ") do not sum to the parent total (" +
                    std::to_string(parent.total()) + ")");
  }
  return internal::ClampGain(Entropy(parent) - PartitionEntropy(partitions));
}

// Zero for a single non-empty partition; callers guard the division.
inline double SplitInfo(std::span<const ClassDistribution> partitions) {
  std::vector<std::int64_t> sizes;
  std::int64_t total = 0;
  for (const ClassDistribution& p : partitions) {
    sizes.push_back(p.total());
    total += p.total();
  }
  if (total <= 0) throw DataError("split info: all partitions are empty");
  return internal::EntropyOfCounts(sizes, static_cast<double>(total));
}

// Defined as 0 when the split information is 0, so an unsplittable
// candidate is never preferred.
inline double GainRatio(const ClassDistribution& parent,
                        std::span<const ClassDistribution> partitions) {
  const double split = SplitInfo(partitions);
  const double g = Gain(parent, partitions);
  if (split <= 0.0) return 0.0;
  return g / split;
}

enum class SplitCriterion { kGain, kGainRatio };

struct BuildParams {
  int min_records_to_split = 2;
  SplitCriterion criterion = SplitCriterion::kGain;
  std::optional<int> max_depth;
};

enum class SplitForm { kCategoricalMultiway, kNumericThreshold };

struct SplitTest {
  std::string attribute;
  SplitForm form = SplitForm::kNumericThreshold;
  double threshold = 0.0;                   // numeric: left branch is <= threshold
  std::vector<std::string> branch_labels;  // categorical: sorted, one per child

  bool is_numeric() const { return form == SplitForm::kNumericThreshold; }

  friend bool operator==(const SplitTest&, const SplitTest&) = default;
};

struct TreeNode {
  std::optional<SplitTest> test;  // engaged for internal nodes
  std::vector<int> children;      // node indices
  int parent = -1;
  // Position in `children` of the child with the most build-time records;
  // unseen categorical values are routed there.
  int heaviest_child = 0;
  int leaf_id = -1;
  int depth = 0;
  ClassDistribution distribution;  // build-time records reaching this node
  std::string majority;

  bool is_leaf() const { return children.empty(); }
};

struct NumericSplit {
  double threshold = 0.0;
  double score = 0.0;
};

namespace internal {

inline double ScoreCounts(const std::vector<std::int64_t>& parent,
                          const std::vector<std::vector<std::int64_t>>& parts,
                          SplitCriterion criterion) {
  double total = 0.0;
  for (auto n : parent) total += static_cast<double>(n);
  double info = 0.0;
  std::vector<double> sizes;
  for (const auto& part : parts) {
    double size = 0.0;
    for (auto n : part) size += static_cast<double>(n);
    sizes.push_back(size);
    if (size > 0.0) info += size / total * EntropyOfCounts(part, size);
  }
  const double gain = ClampGain(EntropyOfCounts(parent, total) - info);
  if (criterion == SplitCriterion::kGain) return gain;
  const double split = EntropyOfCounts(sizes, total);
  return split > 0.0 ? gain / split : 0.0;
}

// Best midpoint threshold for `values` (paired with class codes) among the
// given rows. Ties keep the lowest threshold.
inline std::optional<NumericSplit> BestNumericSplitOnRows(
    std::span<const double> values, std::span<const std::int32_t> classes,
    std::size_t num_classes, std::span<const std::size_t> rows,
    SplitCriterion criterion) {
  std::vector<std::pair<double, std::int32_t>> sorted;
  sorted.reserve(rows.size());
  for (std::size_t r : rows) sorted.emplace_back(values[r], classes[r]);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2 || sorted.front().first == sorted.back().first) {
    return std::nullopt;
  }
  std::vector<std::int64_t> parent(num_classes, 0);
  for (const auto& [v, c] : sorted) ++parent[static_cast<std::size_t>(c)];
  std::vector<std::vector<std::int64_t>> parts = {
      std::vector<std::int64_t>(num_classes, 0), parent};
  std::optional<NumericSplit> best;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const auto c = static_cast<std::size_t>(sorted[i].second);
    ++parts[0][c];
    --parts[1][c];
    if (sorted[i].first == sorted[i + 1].first) continue;
    const double score = ScoreCounts(parent, parts, criterion);
    if (!best || score > best->score + kScoreTieEpsilon) {
      best = NumericSplit{(sorted[i].first + sorted[i + 1].first) / 2.0, score};
    }
  }
  return best;
}

}  // namespace internal

// Best threshold for a numeric attribute over the whole dataset; nullopt when
// the column has fewer than two distinct values.
inline std::optional<NumericSplit> BestNumericSplit(const Dataset& ds,
                                                    std::string_view attribute,
                                                    SplitCriterion criterion) {
  const std::size_t col = ds.ColumnIndex(attribute);
  if (!ds.attribute(col).is_numeric()) {
    throw ConfigError("attribute '" + std::string(attribute) + "' is not numeric");
  }
  std::vector<std::size_t> rows(ds.num_rows());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
  return internal::BestNumericSplitOnRows(
      ds.numeric_column(col), ds.code_column(ds.class_index()),
      ds.labels(ds.class_index()).size(), rows, criterion);
}

class DecisionTree {
 public:
  DecisionTree() = default;

  static DecisionTree Build(const Dataset& ds, const BuildParams& params = {});

  const TreeNode& root() const { return nodes_.at(0); }
  const TreeNode& node(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }
  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_leaves() const { return leaf_nodes_.size(); }
  int LeafNodeIndex(int leaf_id) const { return leaf_nodes_.at(static_cast<std::size_t>(leaf_id)); }
  const TreeNode& leaf(int leaf_id) const { return node(LeafNodeIndex(leaf_id)); }

  const std::string& class_name() const { return class_name_; }
  const std::vector<AttributeDescriptor>& features() const { return features_; }

  // Attributes used by at least one internal test.
  std::set<std::string> TestedAttributes() const {
    std::set<std::string> out;
    for (const TreeNode& n : nodes_) {
      if (n.test) out.insert(n.test->attribute);
    }
    return out;
  }

  int Depth() const {
    int d = 0;
    for (const TreeNode& n : nodes_) d = std::max(d, n.depth);
    return d;
  }

  // Child node index reached from internal node `index` by record `row`.
  // Sets *fallback when an unseen categorical value was routed to the
  // heaviest child.
  int Step(int index, const Dataset& ds, std::size_t row, bool* fallback = nullptr) const {
    const TreeNode& n = node(index);
    const SplitTest& test = *n.test;
    const std::size_t col = ds.ColumnIndex(test.attribute);
    if (test.is_numeric()) {
      return n.children[ds.numeric(col, row) <= test.threshold ? 0 : 1];
    }
    const std::string& value = ds.label(col, row);
    const auto it = std::lower_bound(test.branch_labels.begin(), test.branch_labels.end(), value);
    if (it != test.branch_labels.end() && *it == value) {
      return n.children[static_cast<std::size_t>(it - test.branch_labels.begin())];
    }
    if (fallback) *fallback = true;
    return n.children[static_cast<std::size_t>(n.heaviest_child)];
  }

  int LeafFor(const Dataset& ds, std::size_t row) const {
    int index = 0;
    while (!node(index).is_leaf()) index = Step(index, ds, row);
    return node(index).leaf_id;
  }

  // Majority label of the leaf reached by `row`.
  const std::string& Classify(const Dataset& ds, std::size_t row) const {
    return leaf(LeafFor(ds, row)).majority;
  }

  // C4.5-style indented listing, e.g.
  //   LiverSize = ENLARGED: CLASS1 (4)
  //   LiverSize = NORMAL:
  //   |   PatientsWeight <= 77.5: CLASS1 (2)
  std::string ToText() const {
    std::ostringstream os;
    if (root().is_leaf()) {
      os << ": " << LeafText(root()) << '\n';
    } else {
      WriteText(0, 0, os);
    }
    return os.str();
  }

  nlohmann::ordered_json ToJson() const {
    nlohmann::ordered_json out;
    out["class"] = class_name_;
    out["features"] = nlohmann::ordered_json::array();
    for (const AttributeDescriptor& f : features_) {
      out["features"].push_back(
          {{"name", f.name}, {"kind", f.is_numeric() ? "numeric" : "categorical"}});
    }
    out["num_nodes"] = nodes_.size();
    out["num_leaves"] = leaf_nodes_.size();
    out["root"] = NodeJson(0);
    return out;
  }

 private:
  friend class TreeBuilder;

  std::string LeafText(const TreeNode& n) const {
    const std::int64_t total = n.distribution.total();
    const std::int64_t errors = total - n.distribution.counts.at(n.majority);
    std::string s = n.majority + " (" + std::to_string(total);
    if (errors > 0) s += "/" + std::to_string(errors);
    return s + ")";
  }

  void WriteText(int index, int indent, std::ostringstream& os) const {
    const TreeNode& n = node(index);
    const SplitTest& test = *n.test;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      for (int k = 0; k < indent; ++k) os << "|   ";
      os << test.attribute;
      if (test.is_numeric()) {
        os << (i == 0 ? " <= " : " > ") << internal::FormatNumber(test.threshold);
      } else {
        os << " = " << test.branch_labels[i];
      }
      const TreeNode& child = node(n.children[i]);
      if (child.is_leaf()) {
        os << ": " << LeafText(child) << '\n';
      } else {
        os << ":\n";
        WriteText(n.children[i], indent + 1, os);
      }
    }
  }

  nlohmann::ordered_json NodeJson(int index) const {
    const TreeNode& n = node(index);
    nlohmann::ordered_json j;
    nlohmann::ordered_json dist = nlohmann::ordered_json::object();
    for (const auto& [label, count] : n.distribution.counts) dist[label] = count;
    if (n.is_leaf()) {
      j["kind"] = "leaf";
      j["leaf_id"] = n.leaf_id;
      j["majority"] = n.majority;
      j["distribution"] = dist;
      return j;
    }
    j["kind"] = "internal";
    nlohmann::ordered_json test;
    test["attribute"] = n.test->attribute;
    if (n.test->is_numeric()) {
      test["form"] = "numeric";
      test["threshold"] = n.test->threshold;
    } else {
      test["form"] = "categorical";
      test["branches"] = n.test->branch_labels;
    }
    j["test"] = test;
    j["distribution"] = dist;
    j["children"] = nlohmann::ordered_json::array();
    for (int c : n.children) j["children"].push_back(NodeJson(c));
    return j;
  }

  std::vector<TreeNode> nodes_;
  std::vector<int> leaf_nodes_;  // leaf id -> node index
  std::vector<AttributeDescriptor> features_;
  std::string class_name_;
};

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& ds, const BuildParams& params)
      : ds_(ds), params_(params), class_col_(ds.class_index()),
        num_classes_(ds.labels(class_col_).size()) {
    if (params.min_records_to_split < 2) {
      throw ConfigError("min_records_to_split must be at least 2");
    }
    if (params.max_depth && *params.max_depth < 0) {
      throw ConfigError("max_depth must be non-negative");
    }
    if (ds.num_rows() == 0) throw DataError("cannot build a tree on an empty dataset");
    feature_cols_ = ds.FeatureColumns();
    if (feature_cols_.empty()) throw DataError("dataset has no feature attributes");
  }

  DecisionTree Run() {
    for (std::size_t c : feature_cols_) tree_.features_.push_back(ds_.attribute(c));
    tree_.class_name_ = ds_.class_name();
    std::vector<std::size_t> rows(ds_.num_rows());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    std::vector<bool> used(ds_.num_columns(), false);
    Grow(rows, used, -1, 0);
    return std::move(tree_);
  }

 private:
  struct Candidate {
    std::size_t column = 0;
    double score = 0.0;
    double threshold = 0.0;
  };

  int Grow(const std::vector<std::size_t>& rows, std::vector<bool>& used,
           int parent, int depth) {
    const int index = static_cast<int>(tree_.nodes_.size());
    tree_.nodes_.emplace_back();
    {
      TreeNode& n = tree_.nodes_.back();
      n.parent = parent;
      n.depth = depth;
      for (std::size_t r : rows) n.distribution.Add(ds_.label(class_col_, r));
      n.majority = n.distribution.Majority();
    }

    const bool pure = tree_.nodes_[static_cast<std::size_t>(index)].distribution.NumNonzero() <= 1;
    const bool too_small = rows.size() < static_cast<std::size_t>(params_.min_records_to_split);
    const bool too_deep = params_.max_depth && depth >= *params_.max_depth;
    std::optional<Candidate> best;
    if (!pure && !too_small && !too_deep) best = FindBestSplit(rows, used);
    if (!best) {
      TreeNode& n = tree_.nodes_[static_cast<std::size_t>(index)];
      n.leaf_id = static_cast<int>(tree_.leaf_nodes_.size());
      tree_.leaf_nodes_.push_back(index);
      return index;
    }

    const AttributeDescriptor& attr = ds_.attribute(best->column);
    SplitTest test;
    test.attribute = attr.name;
    std::vector<std::vector<std::size_t>> partitions;
    if (attr.is_numeric()) {
      test.form = SplitForm::kNumericThreshold;
      test.threshold = best->threshold;
      partitions.resize(2);
      for (std::size_t r : rows) {
        partitions[ds_.numeric(best->column, r) <= test.threshold ? 0 : 1].push_back(r);
      }
    } else {
      test.form = SplitForm::kCategoricalMultiway;
      std::map<std::string, std::vector<std::size_t>> by_label;
      for (std::size_t r : rows) by_label[ds_.label(best->column, r)].push_back(r);
      for (auto& [label, part] : by_label) {
        test.branch_labels.push_back(label);
        partitions.push_back(std::move(part));
      }
    }
    int heaviest = 0;
    for (std::size_t i = 1; i < partitions.size(); ++i) {
      if (partitions[i].size() > partitions[static_cast<std::size_t>(heaviest)].size()) {
        heaviest = static_cast<int>(i);
      }
    }
    tree_.nodes_[static_cast<std::size_t>(index)].test = std::move(test);
    tree_.nodes_[static_cast<std::size_t>(index)].heaviest_child = heaviest;

    const bool consumes = attr.is_categorical();
    if (consumes) used[best->column] = true;
    std::vector<int> children;
    for (const auto& part : partitions) {
      children.push_back(Grow(part, used, index, depth + 1));
    }
    if (consumes) used[best->column] = false;
    tree_.nodes_[static_cast<std::size_t>(index)].children = std::move(children);
    return index;
  }

  // Highest-scoring informative split; ties go to the lowest column index.
  std::optional<Candidate> FindBestSplit(const std::vector<std::size_t>& rows,
                                         const std::vector<bool>& used) const {
    std::vector<std::int64_t> parent(num_classes_, 0);
    const std::span<const std::int32_t> classes = ds_.code_column(class_col_);
    for (std::size_t r : rows) ++parent[static_cast<std::size_t>(classes[r])];

    std::optional<Candidate> best;
    for (std::size_t col : feature_cols_) {
      const AttributeDescriptor& attr = ds_.attribute(col);
      std::optional<Candidate> cand;
      if (attr.is_numeric()) {
        const auto split = internal::BestNumericSplitOnRows(
            ds_.numeric_column(col), classes, num_classes_, rows, params_.criterion);
        if (split) cand = Candidate{col, split->score, split->threshold};
      } else if (!used[col]) {
        const std::span<const std::int32_t> codes = ds_.code_column(col);
        std::map<std::int32_t, std::vector<std::int64_t>> parts;
        for (std::size_t r : rows) {
          auto [it, inserted] = parts.try_emplace(codes[r], num_classes_, 0);
          ++it->second[static_cast<std::size_t>(classes[r])];
        }
        if (parts.size() >= 2) {
          std::vector<std::vector<std::int64_t>> counts;
          for (auto& [code, c] : parts) counts.push_back(std::move(c));
          cand = Candidate{col, internal::ScoreCounts(parent, counts, params_.criterion), 0.0};
        }
      }
      if (cand && cand->score > kMinSplitScore &&
          (!best || cand->score > best->score + kScoreTieEpsilon)) {
        best = cand;
      }
    }
    return best;
  }

  const Dataset& ds_;
  BuildParams params_;
  std::size_t class_col_;
  std::size_t num_classes_;
  std::vector<std::size_t> feature_cols_;
  DecisionTree tree_;
};

inline DecisionTree DecisionTree::Build(const Dataset& ds, const BuildParams& params) {
  return TreeBuilder(ds, params).Run();
}

enum class ThresholdMatch { kExact, kIgnore };

// Fraction of node pairs that match under a simultaneous traversal, over the
// larger node count. Internal nodes match when they test the same attribute
// the same way (thresholds within `epsilon` under kExact); leaves match on
// their majority class. Children are only compared below matching nodes.
inline double Similarity(const DecisionTree& a, const DecisionTree& b,
                         ThresholdMatch mode = ThresholdMatch::kIgnore,
                         double epsilon = 1e-9) {
  const std::size_t denom = std::max(a.num_nodes(), b.num_nodes());
  if (denom == 0) return 1.0;
  std::size_t matched = 0;
  std::vector<std::pair<int, int>> stack = {{0, 0}};
  while (!stack.empty()) {
    const auto [ia, ib] = stack.back();
    stack.pop_back();
    const TreeNode& na = a.node(ia);
    const TreeNode& nb = b.node(ib);
    if (na.is_leaf() || nb.is_leaf()) {
      if (na.is_leaf() && nb.is_leaf() && na.majority == nb.majority) ++matched;
      continue;
    }
    const SplitTest& ta = *na.test;
    const SplitTest& tb = *nb.test;
    bool same = ta.attribute == tb.attribute && ta.form == tb.form;
    if (same && ta.is_numeric()) {
      same = mode == ThresholdMatch::kIgnore ||
             std::abs(ta.threshold - tb.threshold) <= epsilon;
    } else if (same) {
      same = ta.branch_labels == tb.branch_labels;
    }
    if (!same) continue;
    ++matched;
    for (std::size_t i = 0; i < na.children.size(); ++i) {
      stack.emplace_back(na.children[i], nb.children[i]);
    }
  }
  return static_cast<double>(matched) / static_cast<double>(denom);
}

}  // namespace treenoise

#endif  // TREENOISE_TREE_H_
