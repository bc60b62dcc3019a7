// Copyright 2026 The cliffsynth Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliffsynth {

using Edge = std::pair<std::size_t, std::size_t>;
using DistanceMatrix = std::vector<std::vector<std::size_t>>;
/// Membership flags indexed by vertex.
using VertexMask = std::vector<bool>;

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// All-pairs hop distances. Throws std::invalid_argument if the graph is
/// disconnected or an edge references a missing vertex.
DistanceMatrix floyd_warshall(std::size_t num_vertices, const std::vector<Edge>& edges);

/// Undirected, connected device connectivity graph. Immutable after
/// construction; edges are stored normalized (u < v) and sorted.
class CouplingGraph {
 public:
  /// Validates the edge list (no self-loops, no duplicates in either
  /// orientation, indices in range) and connectivity, then precomputes
  /// distances. Throws std::invalid_argument on any violation.
  CouplingGraph(std::string name, std::size_t num_qubits, std::vector<Edge> edges);

  static CouplingGraph complete(std::size_t n);
  static CouplingGraph line(std::size_t n);

  const std::string& name() const { return name_; }
  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t distance(std::size_t u, std::size_t v) const { return dist_.at(u).at(v); }
  const DistanceMatrix& distances() const { return dist_; }
  std::size_t diameter() const;

  VertexMask all_vertices() const { return VertexMask(num_qubits_, true); }

 private:
  std::string name_;
  std::size_t num_qubits_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  DistanceMatrix dist_;
};

DistanceMatrix floyd_warshall(const CouplingGraph& g);

/// Vertices of `alive` whose removal keeps the induced subgraph on `alive`
/// connected, ascending. A lone alive vertex is non-cutting. Throws
/// std::invalid_argument when `alive` is empty.
std::vector<std::size_t> non_cutting(const CouplingGraph& g, const VertexMask& alive);

struct SteinerTree {
  std::size_t root = 0;
  /// Parent of each tree vertex other than the root, by vertex index.
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::size_t> terminals;
  /// (parent, child) edges, deepest children first; within one depth,
  /// lower child index first.
  std::vector<Edge> bottom_up_order;

  bool contains(std::size_t v) const;
  std::vector<std::size_t> vertices() const;
};

/// Approximate Steiner tree over `terminals` inside the subgraph induced by
/// `alive`, rooted at `root` (which is treated as a terminal). Grows from
/// the root by repeatedly attaching the nearest remaining terminal along a
/// shortest path in the induced subgraph; ties go to the lower vertex index.
/// Throws std::invalid_argument if a terminal or the root is not alive and
/// std::runtime_error if a terminal is unreachable.
SteinerTree steiner_tree(const CouplingGraph& g, const VertexMask& alive,
                         const std::vector<std::size_t>& terminals, std::size_t root);

/// Parses the coupling-map JSON schema {name, num_qubits, edges: [[u, v], ...]}.
CouplingGraph parse_graph_json(std::string_view json_text);
std::string to_json(const CouplingGraph& g);

/// Builtin names (quito, nairobi, guadalupe, mumbai, ithaca, brisbane) plus
/// the families complete-N and line-N; anything else is read as a JSON file.
CouplingGraph load_graph(const std::string& source);

/// Names of the bundled device topologies.
std::vector<std::string> builtin_architecture_names();

}  // namespace cliffsynth
