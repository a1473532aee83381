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

#include "treenoise/paths.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace treenoise {
namespace {

// Attributes tested between the root and the record's leaf, found by
// evaluating each test directly rather than through DecisionTree::Step.
std::set<std::string> WalkAttributes(const DecisionTree& tree, const Dataset& ds,
                                     std::size_t row, int* leaf_id) {
  std::set<std::string> out;
  int index = 0;
  while (tree.node(index).test) {
    const SplitTest& t = *tree.node(index).test;
    out.insert(t.attribute);
    const std::size_t col = *ds.FindColumn(t.attribute);
    std::size_t branch = 0;
    if (t.form == SplitForm::kNumericThreshold) {
      branch = ds.numeric(col, row) > t.threshold ? 1 : 0;
    } else {
      branch = static_cast<std::size_t>(
          std::find(t.branch_labels.begin(), t.branch_labels.end(), ds.label(col, row)) -
          t.branch_labels.begin());
    }
    index = tree.node(index).children.at(branch);
  }
  *leaf_id = tree.node(index).leaf_id;
  return out;
}

TEST(RouteTest, LiverPaths) {
  const Dataset ds = EmbeddedLiverSample();
  const DecisionTree tree = DecisionTree::Build(ds);

  const RoutedPath normal = Route(tree, ds, 0);  // NORMAL, 70
  ASSERT_EQ(normal.steps.size(), 2u);
  EXPECT_EQ(normal.steps[0].attribute, "LiverSize");
  EXPECT_EQ(normal.steps[0].outcome, "NORMAL");
  EXPECT_EQ(normal.steps[1].attribute, "PatientsWeight");
  EXPECT_EQ(normal.steps[1].outcome, "<= 77.5");
  EXPECT_TRUE(normal.has_siblings);
  EXPECT_FALSE(normal.used_fallback);

  const RoutedPath heavy = Route(tree, ds, 1);  // NORMAL, 90
  EXPECT_EQ(heavy.steps[1].outcome, "> 77.5");
  EXPECT_EQ(heavy.steps[1].child_position, 1);

  const RoutedPath enlarged = Route(tree, ds, 5);
  ASSERT_EQ(enlarged.steps.size(), 1u);
  EXPECT_EQ(enlarged.steps[0].outcome, "ENLARGED");
}

TEST(PathSetsTest, LiverAttributeSets) {
  const Dataset ds = EmbeddedLiverSample();
  const DecisionTree tree = DecisionTree::Build(ds);

  const PathAttributeSets normal = PathSets(Route(tree, ds, 0), tree);
  EXPECT_EQ(normal.lrpa, (std::set<std::string>{"LiverSize", "PatientsWeight"}));
  EXPECT_EQ(normal.lwpa, (std::set<std::string>{"EatsPizza"}));

  const PathAttributeSets enlarged = PathSets(Route(tree, ds, 5), tree);
  EXPECT_EQ(enlarged.lrpa, (std::set<std::string>{"LiverSize"}));
  EXPECT_EQ(enlarged.lwpa, (std::set<std::string>{"EatsPizza", "PatientsWeight"}));

  const PathAttributeSets shrinked = PathSets(Route(tree, ds, 9), tree);
  EXPECT_EQ(shrinked.lrpa, (std::set<std::string>{"EatsPizza", "LiverSize"}));
  EXPECT_EQ(shrinked.lwpa, (std::set<std::string>{"PatientsWeight"}));
}

TEST(PathSetsTest, ScopeControlsUntestedFeatures) {
  // x3 carries no class signal and never appears in the tree.
  const std::vector<AttributeDescriptor> schema = {NumericFeature("x1"), NumericFeature("x3"),
                                                   ClassAttribute("y")};
  const Dataset ds = Dataset::FromTextRows(
      schema, {{"1", "5", "a"}, {"2", "5", "a"}, {"3", "5", "b"}, {"4", "5", "b"}});
  const DecisionTree tree = DecisionTree::Build(ds);
  ASSERT_EQ(tree.TestedAttributes(), (std::set<std::string>{"x1"}));
  const RoutedPath path = Route(tree, ds, 0);
  EXPECT_TRUE(PathSets(path, tree, LwpaScope::kTreeTested).lwpa.empty());
  EXPECT_EQ(PathSets(path, tree, LwpaScope::kAllFeatures).lwpa,
            (std::set<std::string>{"x3"}));
}

TEST(PathSetsTest, PropertiesOnBostonTree) {
  const Dataset ds = testing::LoadBoston();
  const DecisionTree tree = DecisionTree::Build(ds);
  std::set<std::string> features;
  for (const AttributeDescriptor& f : tree.features()) features.insert(f.name);
  const std::set<std::string> tested = tree.TestedAttributes();
  std::size_t deepest = 0;
  for (std::size_t r = 0; r < ds.num_rows(); ++r) {
    int leaf_id = -1;
    const std::set<std::string> expected = WalkAttributes(tree, ds, r, &leaf_id);
    const RoutedPath path = Route(tree, ds, r);
    EXPECT_EQ(path.leaf_id, leaf_id);
    EXPECT_EQ(path.leaf_id, tree.LeafFor(ds, r));
    for (LwpaScope scope : {LwpaScope::kTreeTested, LwpaScope::kAllFeatures}) {
      const PathAttributeSets sets = PathSets(path, tree, scope);
      EXPECT_EQ(sets.lrpa, expected);
      const std::set<std::string>& universe =
          scope == LwpaScope::kTreeTested ? tested : features;
      std::set<std::string> joined = sets.lrpa;
      for (const std::string& a : sets.lwpa) {
        EXPECT_FALSE(sets.lrpa.contains(a)) << a;
        joined.insert(a);
      }
      EXPECT_EQ(joined, universe);
    }
    deepest = std::max(deepest, expected.size());
  }
  // The tree has leaves at least three distinct attributes deep, like the
  // three-attribute path with one untested tree attribute that motivates
  // the wrong-path set.
  EXPECT_GE(deepest, 3u);
}

TEST(LeafHasSiblingsTest, LiteralAndLeafOnlyRules) {
  const DecisionTree tree = DecisionTree::Build(EmbeddedLiverSample());
  const int enlarged_leaf = tree.node(tree.root().children[0]).leaf_id;
  EXPECT_TRUE(LeafHasSiblings(tree, enlarged_leaf, SiblingRule::kLiteral));
  EXPECT_FALSE(LeafHasSiblings(tree, enlarged_leaf, SiblingRule::kLeafSiblingsOnly));
  const int light_leaf = tree.node(tree.node(tree.root().children[1]).children[0]).leaf_id;
  EXPECT_TRUE(LeafHasSiblings(tree, light_leaf, SiblingRule::kLeafSiblingsOnly));

  const std::vector<AttributeDescriptor> schema = {NumericFeature("x"), ClassAttribute("y")};
  const DecisionTree single =
      DecisionTree::Build(Dataset::FromTextRows(schema, {{"1", "a"}, {"1", "b"}}));
  ASSERT_EQ(single.num_leaves(), 1u);
  EXPECT_FALSE(LeafHasSiblings(single, 0, SiblingRule::kLiteral));
}

TEST(LeafPopulationsTest, MajorityAndMinorityCounts) {
  const std::vector<AttributeDescriptor> schema = {NumericFeature("x"), ClassAttribute("y")};
  const Dataset ds = Dataset::FromTextRows(
      schema, {{"1", "A"}, {"1", "S"}, {"1", "A"}, {"1", "S"}, {"1", "A"}});
  const DecisionTree tree = DecisionTree::Build(ds);
  const auto pops = LeafPopulations(tree, ds);
  ASSERT_EQ(pops.size(), 1u);
  const LeafPopulation& pop = pops.at(0);
  EXPECT_EQ(pop.majority, "A");
  EXPECT_EQ(pop.majority_count, 3);
  EXPECT_EQ(pop.num_minority_classes(), 1u);
  ASSERT_EQ(pop.minorities.size(), 1u);
  EXPECT_EQ(pop.minorities[0], (std::pair<std::string, std::int64_t>{"S", 2}));
  EXPECT_TRUE(pop.heterogeneous());
  EXPECT_EQ(pop.rows, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(LeafPopulationsTest, CoversEveryLeafAndEveryRow) {
  const Dataset ds = testing::LoadBoston();
  const DecisionTree tree = DecisionTree::Build(ds);
  const TrainTestSplit split = SplitTrainTest(ds, 0.3, 42);
  const auto pops = LeafPopulations(tree, split.test);
  EXPECT_EQ(pops.size(), tree.num_leaves());
  std::size_t rows = 0;
  for (const auto& [id, pop] : pops) {
    rows += pop.rows.size();
    if (pop.empty()) {
      EXPECT_TRUE(pop.majority.empty());
      continue;
    }
    std::int64_t sum = pop.majority_count;
    for (const auto& [label, n] : pop.minorities) {
      EXPECT_LE(n, pop.majority_count);
      sum += n;
    }
    EXPECT_EQ(sum, static_cast<std::int64_t>(pop.rows.size()));
  }
  EXPECT_EQ(rows, split.test.num_rows());
}

TEST(LeafPopulationsTest, TrainingLeavesOfUnprunedTreeAreHomogeneous) {
  const Dataset ds = EmbeddedLiverSample();
  const DecisionTree tree = DecisionTree::Build(ds);
  for (const auto& [id, pop] : LeafPopulations(tree, ds)) {
    EXPECT_FALSE(pop.heterogeneous()) << "leaf " << id;
    EXPECT_EQ(pop.counts, tree.leaf(id).distribution);
  }
}

}  // namespace
}  // namespace treenoise
