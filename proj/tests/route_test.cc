// Copyright 2026 The Authors.
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


#include "patrol/route.h"

#include <gtest/gtest.h>

#include "patrol/errors.h"
#include "test_support.h"

namespace patrol {
namespace {

ErrorCode ClassifyError(const Graph& g, const Route& r) {
  try {
    ClassifyRoute(g, r);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(RouteTest, ParseAndFormat) {
  const Route r = ParseRoute("0, 1,2 ,0");
  EXPECT_EQ(r.nodes(), (std::vector<NodeId>{0, 1, 2, 0}));
  EXPECT_EQ(r.step_count(), 3);
  EXPECT_EQ(FormatRoute(r), "0,1,2,0");
  EXPECT_THROW(ParseRoute("0,,1"), Error);
  EXPECT_THROW(ParseRoute("0,a"), Error);
  EXPECT_THROW(ParseRoute(""), Error);
}

TEST(RouteTest, RotateAndReverse) {
  const Route r({0, 1, 2, 3, 0});
  EXPECT_EQ(r.Rotated(1).nodes(), (std::vector<NodeId>{1, 2, 3, 0, 1}));
  EXPECT_EQ(r.Rotated(4), r);
  EXPECT_EQ(r.Reversed().nodes(), (std::vector<NodeId>{0, 3, 2, 1, 0}));
}

TEST(RouteTest, ClassifyDiamond) {
  const Graph g = testing::DiamondGraph();
  const RouteClassification c = ClassifyRoute(g, Route({0, 1, 3, 2, 1, 3, 0}));
  ASSERT_EQ(c.twice.size(), 1u);
  EXPECT_EQ(c.twice[0], *g.FindEdge(1, 3));
  EXPECT_EQ(c.once.size(), 4u);
  EXPECT_DOUBLE_EQ(c.e1_length, 4.0);
  EXPECT_DOUBLE_EQ(c.e2_length, 1.0);
}

TEST(RouteTest, ClassifySingleEdge) {
  const RouteClassification c = ClassifyRoute(testing::SingleEdge(), Route({0, 1, 0}));
  EXPECT_TRUE(c.once.empty());
  EXPECT_EQ(c.twice.size(), 1u);
}

TEST(RouteTest, ClassifyErrors) {
  const Graph edge = testing::SingleEdge();
  EXPECT_EQ(ClassifyError(edge, Route({0, 1, 0, 1, 0, 1, 0})), ErrorCode::kNotInF1);
  EXPECT_EQ(ClassifyError(edge, Route({0, 1})), ErrorCode::kNotClosedWalk);
  EXPECT_EQ(ClassifyError(edge, Route({0})), ErrorCode::kNotClosedWalk);
  const Graph path = testing::UnitPath3();
  EXPECT_EQ(ClassifyError(path, Route({0, 2, 0})), ErrorCode::kNotAWalk);
  EXPECT_EQ(ClassifyError(path, Route({0, 1, 0})), ErrorCode::kNotInF1);
  EXPECT_EQ(ClassifyError(path, Route({0, 1, 7, 0})), ErrorCode::kNotAWalk);
}

TEST(RouteTest, StepsAndLength) {
  const Graph g = testing::K4Graph();
  const Route r({0, 1, 2, 3, 1, 0, 2, 0, 3, 0});
  EXPECT_DOUBLE_EQ(RouteLength(g, r), 12.0);
  const std::vector<Step> steps = ResolveSteps(g, r);
  ASSERT_EQ(steps.size(), 9u);
  EXPECT_EQ(steps[0].direction, Direction::kForward);
  EXPECT_EQ(steps[4].direction, Direction::kBackward);  // 1 -> 0 on edge (0,1).
}

TEST(RouteTest, VisitSchedule) {
  const Graph g = testing::SingleEdge(2.0);
  const VisitSchedule s = BuildVisitSchedule(g, Route({0, 1, 0}));
  EXPECT_DOUBLE_EQ(s.period, 4.0);
  ASSERT_EQ(s.visits[0].size(), 2u);
  EXPECT_DOUBLE_EQ(s.visits[0][0].start, 0.0);
  EXPECT_DOUBLE_EQ(s.visits[0][1].start, 2.0);
  EXPECT_EQ(s.visits[0][1].direction, Direction::kBackward);
}

}  // namespace
}  // namespace patrol
