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

// Record routing and per-leaf attribute sets.
//
// The attributes tested on the way from the root to a record's leaf form its
// leaf-reaching-path set (LRPA). The leaf-wrong-path set (LWPA) holds the
// other attributes: by default those tested elsewhere in the tree, or every
// remaining feature under LwpaScope::kAllFeatures.

#ifndef TREENOISE_PATHS_H_
#define TREENOISE_PATHS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treenoise/dataset.h"
#include "treenoise/tree.h"

namespace treenoise {

struct PathStep {
  std::string attribute;
  std::string outcome;  // "<= 77.5", "> 77.5" or the categorical value
  int child_position = 0;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct RoutedPath {
  int leaf_id = -1;
  std::vector<PathStep> steps;
  // The leaf's parent has at least one other child.
  bool has_siblings = false;
  // An unseen categorical value was sent to the heaviest child somewhere.
  bool used_fallback = false;
};

enum class LwpaScope { kTreeTested, kAllFeatures };

// Which leaves count as having siblings for the categorical shuffle.
enum class SiblingRule {
  kLiteral,           // any other child of the parent
  kLeafSiblingsOnly,  // another child of the parent that is itself a leaf
};

struct PathAttributeSets {
  std::set<std::string> lrpa;
  std::set<std::string> lwpa;
};

inline bool LeafHasSiblings(const DecisionTree& tree, int leaf_id,
                            SiblingRule rule = SiblingRule::kLiteral) {
  const int index = tree.LeafNodeIndex(leaf_id);
  const TreeNode& leaf = tree.node(index);
  if (leaf.parent < 0) return false;
  for (int sibling : tree.node(leaf.parent).children) {
    if (sibling == index) continue;
    if (rule == SiblingRule::kLiteral || tree.node(sibling).is_leaf()) return true;
  }
  return false;
}

inline RoutedPath Route(const DecisionTree& tree, const Dataset& ds, std::size_t row) {
  RoutedPath path;
  int index = 0;
  while (!tree.node(index).is_leaf()) {
    const TreeNode& n = tree.node(index);
    const int next = tree.Step(index, ds, row, &path.used_fallback);
    PathStep step;
    step.attribute = n.test->attribute;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (n.children[i] == next) step.child_position = static_cast<int>(i);
    }
    if (n.test->is_numeric()) {
      step.outcome = (step.child_position == 0 ? "<= " : "> ") +
                     internal::FormatNumber(n.test->threshold);
    } else {
      step.outcome = n.test->branch_labels[static_cast<std::size_t>(step.child_position)];
    }
    path.steps.push_back(std::move(step));
    index = next;
  }
  path.leaf_id = tree.node(index).leaf_id;
  path.has_siblings = LeafHasSiblings(tree, path.leaf_id, SiblingRule::kLiteral);
  return path;
}

inline PathAttributeSets PathSets(const RoutedPath& path, const DecisionTree& tree,
                                  LwpaScope scope = LwpaScope::kTreeTested) {
  PathAttributeSets sets;
  for (const PathStep& step : path.steps) sets.lrpa.insert(step.attribute);
  if (scope == LwpaScope::kTreeTested) {
    for (const std::string& attr : tree.TestedAttributes()) {
      if (!sets.lrpa.contains(attr)) sets.lwpa.insert(attr);
    }
  } else {
    for (const AttributeDescriptor& f : tree.features()) {
      if (!sets.lrpa.contains(f.name)) sets.lwpa.insert(f.name);
    }
  }
  return sets;
}

// Records routed to one leaf, summarized over a target column (the class
// column unless stated otherwise).
struct LeafPopulation {
  std::vector<std::size_t> rows;
  ClassDistribution counts;
  std::string majority;                                   // empty when no rows
  std::int64_t majority_count = 0;                        // m
  std::vector<std::pair<std::string, std::int64_t>> minorities;  // (label, n_i)

  std::size_t num_minority_classes() const { return minorities.size(); }  // t
  bool empty() const { return rows.empty(); }
  bool heterogeneous() const { return !minorities.empty(); }
};

// Every leaf of `tree` (including leaves no record reaches) mapped to the
// records of `ds` routed there, counted over `target_column`.
inline std::map<int, LeafPopulation> LeafPopulations(const DecisionTree& tree,
                                                     const Dataset& ds,
                                                     std::size_t target_column) {
  std::map<int, LeafPopulation> out;
  for (std::size_t id = 0; id < tree.num_leaves(); ++id) out[static_cast<int>(id)];
  for (std::size_t r = 0; r < ds.num_rows(); ++r) {
    LeafPopulation& pop = out[tree.LeafFor(ds, r)];
    pop.rows.push_back(r);
    pop.counts.Add(ds.label(target_column, r));
  }
  for (auto& [id, pop] : out) {
    if (pop.empty()) continue;
    pop.majority = pop.counts.Majority();
    pop.majority_count = pop.counts.counts.at(pop.majority);
    for (const auto& [label, n] : pop.counts.counts) {
      if (label != pop.majority && n > 0) pop.minorities.emplace_back(label, n);
    }
  }
  return out;
}

inline std::map<int, LeafPopulation> LeafPopulations(const DecisionTree& tree,
                                                     const Dataset& ds) {
  return LeafPopulations(tree, ds, ds.ColumnIndex(tree.class_name()));
}

}  // namespace treenoise

#endif  // TREENOISE_PATHS_H_
