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


#include "patrol/multigraph.h"

#include <utility>

#include "patrol/errors.h"

namespace patrol {

MultiGraph::MultiGraph(Graph base, std::vector<int> multiplicity)
    : base_(std::move(base)), multiplicity_(std::move(multiplicity)) {
  if (static_cast<int>(multiplicity_.size()) != base_.edge_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "multiplicity vector does not match edge count");
  }
  incident_.resize(base_.node_count());
  for (const Edge& e : base_.edges()) {
    const int m = multiplicity_[e.id];
    if (m != 1 && m != 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge multiplicity must be 1 or 2");
    }
    for (int k = 0; k < m; ++k) {
      const CopyId c = static_cast<CopyId>(copies_.size());
      copies_.push_back(EdgeCopy{c, e.id});
      incident_[e.u].push_back(c);
      incident_[e.v].push_back(c);
    }
  }
}

MultiGraph MultiGraph::Single(Graph base) {
  std::vector<int> ones(base.edge_count(), 1);
  return MultiGraph(std::move(base), std::move(ones));
}

double MultiGraph::TotalLength() const {
  double total = 0.0;
  for (const Edge& e : base_.edges()) total += multiplicity_[e.id] * e.length;
  return total;
}

std::vector<EdgeId> MultiGraph::DoubledEdges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < base_.edge_count(); ++e) {
    if (multiplicity_[e] == 2) out.push_back(e);
  }
  return out;
}

bool IsEulerian(const MultiGraph& mg) {
  for (NodeId v = 0; v < mg.node_count(); ++v) {
    if (mg.Degree(v) % 2 != 0) return false;
  }
  return IsConnected(mg.base());
}

}  // namespace patrol
