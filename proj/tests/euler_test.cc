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


#include "patrol/euler.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "patrol/errors.h"
#include "patrol/postman.h"
#include "test_support.h"

namespace patrol {
namespace {

MultiGraph Doubled(const Graph& g) {
  return MultiGraph(g, std::vector<int>(g.edge_count(), 2));
}

// Every copy used exactly once along a closed walk starting at `start`.
void ExpectEulerCycle(const MultiGraph& mg, const EulerCycle& c, NodeId start) {
  const std::vector<NodeId>& nodes = c.route.nodes();
  ASSERT_EQ(static_cast<int>(c.copies.size()), mg.copy_count());
  ASSERT_EQ(nodes.size(), c.copies.size() + 1);
  EXPECT_EQ(nodes.front(), start);
  EXPECT_EQ(nodes.back(), start);
  std::vector<int> used(mg.copy_count(), 0);
  for (size_t i = 0; i < c.copies.size(); ++i) {
    const Edge& e = mg.EdgeOf(c.copies[i]);
    EXPECT_TRUE((e.u == nodes[i] && e.v == nodes[i + 1]) ||
                (e.v == nodes[i] && e.u == nodes[i + 1]));
    ++used[c.copies[i]];
  }
  for (int u : used) EXPECT_EQ(u, 1);
}

TEST(EulerTest, HierholzerOnDoubledGraphs) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const MultiGraph mg = Doubled(testing::RandomConnected(10, 0.3, s));
    ExpectEulerCycle(mg, Hierholzer(mg, 0), 0);
    ExpectEulerCycle(mg, Hierholzer(mg, 3), 3);
  }
}

TEST(EulerTest, FleuryWithEachSelector) {
  const MultiGraph mg = Doubled(testing::K4Graph());
  FirstSelector first;
  ExpectEulerCycle(mg, Fleury(mg, 0, first), 0);
  for (std::uint64_t s = 0; s < 100; ++s) {
    RandomSelector random(RngSeed{s});
    const EulerCycle c = Fleury(mg, 0, random);
    ExpectEulerCycle(mg, c, 0);
    EXPECT_TRUE(ClassifyRoute(mg.base(), c.route).once.empty());
  }
}

TEST(EulerTest, RandomSelectorVaries) {
  const MultiGraph mg = Doubled(testing::RandomConnected(10, 0.3, 11));
  std::set<std::vector<NodeId>> routes;
  for (std::uint64_t s = 0; s < 20; ++s) {
    RandomSelector random(RngSeed{s});
    routes.insert(Fleury(mg, 0, random).route.nodes());
  }
  EXPECT_GT(routes.size(), 10u);
}

TEST(EulerTest, RejectsNonEulerian) {
  const MultiGraph mg = MultiGraph::Single(testing::DiamondGraph());
  try {
    Hierholzer(mg, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotEulerian);
  }
  FirstSelector first;
  EXPECT_THROW(Fleury(mg, 0, first), Error);
  EXPECT_THROW(Hierholzer(Doubled(testing::DiamondGraph()), 9), Error);
}

TEST(EulerTest, BridgeIsTakenLast) {
  // Two triangles joined at node 2; from node 2 the walk must finish one
  // triangle before leaving it.
  const Graph g = Graph::Build(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1},
                                   {2, 3, 1}, {3, 4, 1}, {4, 2, 1}});
  const MultiGraph mg = MultiGraph::Single(g);
  WalkState state(mg, 0);
  state.Advance(0);  // 0 -> 1
  state.Advance(1);  // 1 -> 2
  // At node 2: copies to 0 and to 3, 4. Taking (2,0) strands the right triangle.
  EXPECT_FALSE(LeavesRemainderConnected(state, 2));
  EXPECT_TRUE(LeavesRemainderConnected(state, 3));
  const std::vector<Candidate> next = EligibleNext(state);
  ASSERT_EQ(next.size(), 2u);
  EXPECT_EQ(next[0].neighbor, 3);
  EXPECT_EQ(next[1].neighbor, 4);
}

TEST(EulerTest, WalkStateBookkeeping) {
  const MultiGraph mg = Doubled(testing::SingleEdge(2.0));
  WalkState state(mg, 0);
  EXPECT_FALSE(state.LastCompletion(0).has_value());
  state.Advance(0);
  EXPECT_EQ(state.current(), 1);
  EXPECT_DOUBLE_EQ(state.partial_length(), 2.0);
  EXPECT_EQ(state.TimesTraversed(0), 1);
  EXPECT_DOUBLE_EQ(*state.LastCompletion(0), 2.0);
  EXPECT_EQ(state.remaining(), 1);
  EXPECT_THROW(state.Advance(0), Error);
  state.Advance(1);
  EXPECT_TRUE(state.done());
  EXPECT_EQ(state.partial_route(), (std::vector<NodeId>{0, 1, 0}));
}

TEST(EulerTest, HierholzerSmallCases) {
  EXPECT_EQ(Hierholzer(Doubled(testing::SingleEdge()), 0).route.nodes(),
            (std::vector<NodeId>{0, 1, 0}));
  EXPECT_EQ(Hierholzer(Doubled(testing::UnitPath3()), 0).route.nodes(),
            (std::vector<NodeId>{0, 1, 2, 1, 0}));
  const std::vector<NodeId> tri =
      Hierholzer(MultiGraph::Single(testing::UnitTriangle()), 0).route.nodes();
  EXPECT_TRUE(tri == (std::vector<NodeId>{0, 1, 2, 0}) ||
              tri == (std::vector<NodeId>{0, 2, 1, 0}));
}

TEST(EulerTest, OutputsMatchMultiplicities) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = testing::RandomConnected(9, 0.3, 200 + s);
    const MultiGraph mg = CppAugment(g);
    RandomSelector random(RngSeed{s});
    for (const Route& r : {Hierholzer(mg, 0).route, Fleury(mg, 0, random).route}) {
      const RouteClassification c = ClassifyRoute(g, r);
      for (EdgeId e = 0; e < g.edge_count(); ++e) EXPECT_EQ(c.traversals[e], mg.Multiplicity(e));
    }
  }
}

TEST(EulerTest, SameSeedSameRoute) {
  const MultiGraph mg = Doubled(testing::RandomConnected(10, 0.3, 5));
  RandomSelector a(RngSeed{77}), b(RngSeed{77});
  EXPECT_EQ(Fleury(mg, 0, a).route, Fleury(mg, 0, b).route);
}

TEST(EligibleTest, SmallCases) {
  const MultiGraph path = Doubled(testing::UnitPath3());
  const std::vector<Candidate> p = EligibleNext(WalkState(path, 0));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].neighbor, 1);
  EXPECT_EQ(p[1].neighbor, 1);
  const MultiGraph tri = MultiGraph::Single(testing::UnitTriangle());
  const std::vector<Candidate> t = EligibleNext(WalkState(tri, 0));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].neighbor, 1);
  EXPECT_EQ(t[1].neighbor, 2);
}

// After taking `copy`, can every remaining untraversed copy still be reached
// from the far end? Checked by flood fill over untraversed copies.
bool BruteReachable(const WalkState& state, CopyId copy) {
  const MultiGraph& mg = state.graph();
  std::vector<char> gone(mg.copy_count(), 0);
  for (CopyId c = 0; c < mg.copy_count(); ++c) gone[c] = state.traversed(c);
  gone[copy] = 1;
  std::vector<char> seen(mg.node_count(), 0);
  std::vector<NodeId> stack = {mg.EdgeOf(copy).Other(state.current())};
  seen[stack[0]] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (CopyId c : mg.Incident(v)) {
      if (gone[c]) continue;
      const NodeId w = mg.EdgeOf(c).Other(v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (CopyId c = 0; c < mg.copy_count(); ++c) {
    if (!gone[c] && !seen[mg.EdgeOf(c).u]) return false;
  }
  return true;
}

TEST(EligibleTest, MatchesBruteForceAlongRandomWalks) {
  const std::vector<MultiGraph> graphs = {Doubled(testing::FiveNodeGraph()),
                                          CppAugment(testing::FiveNodeGraph()),
                                          Doubled(testing::WheelGraph())};
  for (const MultiGraph& mg : graphs) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      WalkState state(mg, 0);
      RandomSelector random(RngSeed{s});
      while (!state.done()) {
        const std::vector<Candidate> eligible = EligibleNext(state);
        std::vector<CopyId> strict;
        for (const Candidate& c : state.IncidentUntraversed()) {
          if (BruteReachable(state, c.copy)) strict.push_back(c.copy);
        }
        std::vector<CopyId> got;
        for (const Candidate& c : eligible) got.push_back(c.copy);
        std::sort(got.begin(), got.end());
        if (!strict.empty()) {
          std::sort(strict.begin(), strict.end());
          EXPECT_EQ(got, strict);
        } else {
          EXPECT_EQ(got.size(), state.IncidentUntraversed().size());
        }
        state.Advance(random.Select(state, eligible).copy);
      }
    }
  }
}

TEST(EnumerationTest, Counts) {
  // Copy-distinct sequences; parallel copies count separately.
  EXPECT_EQ(EnumerateEulerianCycles(Doubled(testing::SingleEdge()), 0, 1000).cycles.size(), 2u);
  EXPECT_EQ(EnumerateEulerianCycles(MultiGraph::Single(testing::UnitTriangle()), 0, 1000)
                .cycles.size(), 2u);
  EXPECT_EQ(EnumerateEulerianCycles(Doubled(testing::UnitPath3()), 0, 1000).cycles.size(), 4u);
  EXPECT_EQ(EnumerateEulerianCycles(Doubled(testing::UnitTriangle()), 0, 1000).cycles.size(),
            64u);
}

TEST(EnumerationTest, DoubledEdgeHasOneNodeSequence) {
  const CycleEnumeration all = EnumerateEulerianCycles(Doubled(testing::SingleEdge()), 0, 10);
  std::set<std::vector<NodeId>> distinct;
  for (const EulerCycle& c : all.cycles) distinct.insert(c.route.nodes());
  EXPECT_EQ(distinct.size(), 1u);
}

TEST(EnumerationTest, CapStopsEarly) {
  const CycleEnumeration e = EnumerateEulerianCycles(Doubled(testing::UnitTriangle()), 0, 10);
  EXPECT_TRUE(e.cap_exceeded);
  EXPECT_EQ(e.cycles.size(), 10u);
}

TEST(EnumerationTest, AllCyclesAreValid) {
  const MultiGraph mg = Doubled(testing::UnitTriangle());
  for (const EulerCycle& c : EnumerateEulerianCycles(mg, 1, 1000).cycles) {
    ExpectEulerCycle(mg, c, 1);
  }
}

}  // namespace
}  // namespace patrol
