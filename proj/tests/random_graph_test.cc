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


#include "patrol/random_graph.h"

#include <gtest/gtest.h>

#include "patrol/errors.h"
#include "patrol/graph_io.h"

namespace patrol {
namespace {

TEST(RngTest, UniformUnitInRange) {
  Rng rng = MakeRng(RngSeed{7});
  for (int i = 0; i < 10000; ++i) {
    const double u = UniformUnit(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RngTest, UniformIndexCoversRange) {
  Rng rng = MakeRng(RngSeed{7});
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) ++hits[UniformIndex(rng, 5)];
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(RngTest, DeriveSeedSeparatesStreams) {
  EXPECT_NE(DeriveSeed(RngSeed{1}, 0).value, DeriveSeed(RngSeed{1}, 1).value);
  EXPECT_NE(DeriveSeed(RngSeed{1}, 0).value, DeriveSeed(RngSeed{2}, 0).value);
  EXPECT_EQ(DeriveSeed(RngSeed{9}, 4).value, DeriveSeed(RngSeed{9}, 4).value);
}

TEST(GenerateErTest, SatisfiesFilters) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = GenerateEr({}, RngSeed{s});
    EXPECT_EQ(g.node_count(), 10);
    EXPECT_TRUE(IsConnected(g));
    EXPECT_FALSE(IsEulerian(g));
    for (const Edge& e : g.edges()) {
      EXPECT_GT(e.length, 0.0);
      EXPECT_LT(e.length, 10.0);
    }
  }
}

TEST(GenerateErTest, Deterministic) {
  ErOptions options;
  options.n = 12;
  options.p = 0.4;
  EXPECT_EQ(GraphToJson(GenerateEr(options, RngSeed{42})),
            GraphToJson(GenerateEr(options, RngSeed{42})));
  EXPECT_NE(GraphToJson(GenerateEr(options, RngSeed{42})),
            GraphToJson(GenerateEr(options, RngSeed{43})));
}

TEST(GenerateErTest, DenseGraph) {
  ErOptions options;
  options.n = 5;
  options.p = 0.9999;
  options.require_non_eulerian = false;
  EXPECT_EQ(GenerateEr(options, RngSeed{1}).edge_count(), 10);
}

TEST(GenerateErTest, BudgetExceeded) {
  ErOptions options;
  options.n = 4;
  options.p = 0.01;
  options.max_attempts = 5;
  try {
    GenerateEr(options, RngSeed{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGenerationBudgetExceeded);
    EXPECT_TRUE(IsBudgetError(e.code()));
  }
}

TEST(GenerateErTest, RejectsBadOptions) {
  ErOptions options;
  options.p = 1.5;
  EXPECT_THROW(GenerateEr(options, RngSeed{1}), Error);
  options.p = 1.0;
  EXPECT_THROW(GenerateEr(options, RngSeed{1}), Error);
  options.p = 0.0;
  EXPECT_THROW(GenerateEr(options, RngSeed{1}), Error);
  options = {};
  options.n = 2;
  EXPECT_THROW(GenerateEr(options, RngSeed{1}), Error);
  options = {};
  options.length_low = 5;
  options.length_high = 5;
  EXPECT_THROW(GenerateEr(options, RngSeed{1}), Error);
}

}  // namespace
}  // namespace patrol
