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

#include "cliffsynth/architecture.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "builtin_architectures.hpp"

namespace cliffsynth {

DistanceMatrix floyd_warshall(std::size_t num_vertices, const std::vector<Edge>& edges) {
  if (num_vertices == 0) throw std::invalid_argument("graph has no vertices");
  DistanceMatrix d(num_vertices, std::vector<std::size_t>(num_vertices, kUnreachable));
  for (std::size_t v = 0; v < num_vertices; ++v) d[v][v] = 0;
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw std::invalid_argument("edge references a vertex outside the graph");
    }
    if (u != v) d[u][v] = d[v][u] = 1;
  }
  for (std::size_t k = 0; k < num_vertices; ++k) {
    for (std::size_t i = 0; i < num_vertices; ++i) {
      if (d[i][k] == kUnreachable) continue;
      for (std::size_t j = 0; j < num_vertices; ++j) {
        if (d[k][j] == kUnreachable) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (std::size_t v = 1; v < num_vertices; ++v) {
    if (d[0][v] == kUnreachable) throw std::invalid_argument("graph is disconnected");
  }
  return d;
}

CouplingGraph::CouplingGraph(std::string name, std::size_t num_qubits, std::vector<Edge> edges)
    : name_(std::move(name)), num_qubits_(num_qubits), adjacency_(num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("coupling graph needs at least one vertex");
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= num_qubits || v >= num_qubits) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
  }
  edges_.assign(seen.begin(), seen.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  dist_ = floyd_warshall(num_qubits_, edges_);
}

CouplingGraph CouplingGraph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return CouplingGraph("complete-" + std::to_string(n), n, std::move(edges));
}

CouplingGraph CouplingGraph::line(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return CouplingGraph("line-" + std::to_string(n), n, std::move(edges));
}

bool CouplingGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= num_qubits_ || v >= num_qubits_) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::size_t CouplingGraph::diameter() const {
  std::size_t best = 0;
  for (const auto& row : dist_) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

DistanceMatrix floyd_warshall(const CouplingGraph& g) {
  return floyd_warshall(g.num_qubits(), g.edges());
}

std::vector<std::size_t> non_cutting(const CouplingGraph& g, const VertexMask& alive) {
  const std::size_t n = g.num_qubits();
  if (alive.size() != n) throw std::invalid_argument("alive mask size mismatch");
  const auto first = std::find(alive.begin(), alive.end(), true);
  if (first == alive.end()) throw std::invalid_argument("non_cutting: no alive vertices");
  const std::size_t start = static_cast<std::size_t>(first - alive.begin());

  // Articulation points of the alive subgraph (Hopcroft-Tarjan low-link).
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<bool> cut(n, false);
  std::size_t timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t from) {
    disc[u] = low[u] = ++timer;
    std::size_t children = 0;
    for (std::size_t w : g.neighbors(u)) {
      if (!alive[w]) continue;
      if (disc[w] == 0) {
        ++children;
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (from != kUnreachable && low[w] >= disc[u]) cut[u] = true;
      } else if (w != from) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (from == kUnreachable && children > 1) cut[u] = true;
  };
  dfs(start, kUnreachable);

  std::vector<std::size_t> result;
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (disc[v] == 0) throw std::invalid_argument("non_cutting: alive subgraph is disconnected");
    if (!cut[v]) result.push_back(v);
  }
  return result;
}

bool SteinerTree::contains(std::size_t v) const {
  return v == root || (v < parent.size() && parent[v].has_value());
}

std::vector<std::size_t> SteinerTree::vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

SteinerTree steiner_tree(const CouplingGraph& g, const VertexMask& alive,
                         const std::vector<std::size_t>& terminals, std::size_t root) {
  const std::size_t n = g.num_qubits();
  if (alive.size() != n) throw std::invalid_argument("alive mask size mismatch");
  if (root >= n || !alive[root]) throw std::invalid_argument("steiner_tree: root is not alive");
  std::vector<bool> wanted(n, false);
  for (std::size_t t : terminals) {
    if (t >= n || !alive[t]) {
      throw std::invalid_argument("steiner_tree: terminal " + std::to_string(t) + " is not alive");
    }
    wanted[t] = true;
  }
  wanted[root] = true;

  SteinerTree tree;
  tree.root = root;
  tree.parent.assign(n, std::nullopt);
  for (std::size_t v = 0; v < n; ++v) {
    if (wanted[v]) tree.terminals.push_back(v);
  }

  std::vector<bool> in_tree(n, false);
  in_tree[root] = true;
  std::size_t remaining = tree.terminals.size() - 1;
  std::vector<std::size_t> dist(n), via(n);
  while (remaining > 0) {
    // Multi-source BFS from the current tree inside the alive subgraph.
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) {
        dist[v] = 0;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors(u)) {
        if (alive[w] && dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          via[w] = u;
          queue.push_back(w);
        }
      }
    }
    std::size_t best = kUnreachable;
    for (std::size_t v = 0; v < n; ++v) {
      if (wanted[v] && !in_tree[v] && (best == kUnreachable || dist[v] < dist[best])) best = v;
    }
    if (dist[best] == kUnreachable) {
      throw std::runtime_error("steiner_tree: terminal " + std::to_string(best) +
                               " unreachable inside the alive subgraph");
    }
    for (std::size_t v = best; !in_tree[v]; v = via[v]) {
      in_tree[v] = true;
      tree.parent[v] = via[v];
      if (wanted[v]) --remaining;
    }
  }

  std::vector<std::size_t> depth(n, 0);
  std::function<std::size_t(std::size_t)> depth_of = [&](std::size_t v) -> std::size_t {
    if (v == root) return 0;
    if (depth[v] == 0) depth[v] = depth_of(*tree.parent[v]) + 1;
    return depth[v];
  };
  std::vector<std::size_t> children;
  for (std::size_t v = 0; v < n; ++v) {
    if (tree.parent[v]) children.push_back(v);
  }
  for (std::size_t v : children) depth_of(v);
  std::stable_sort(children.begin(), children.end(),
                   [&](std::size_t a, std::size_t b) { return depth[a] > depth[b]; });
  for (std::size_t v : children) tree.bottom_up_order.emplace_back(*tree.parent[v], v);
  return tree;
}

CouplingGraph parse_graph_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("coupling map: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("num_qubits") || !doc.contains("edges")) {
    throw std::invalid_argument("coupling map: expected {name, num_qubits, edges}");
  }
  const auto& nq = doc["num_qubits"];
  if (!nq.is_number_unsigned() || nq.get<std::size_t>() == 0) {
    throw std::invalid_argument("coupling map: num_qubits must be a positive integer");
  }
  std::string name = "custom";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw std::invalid_argument("coupling map: name must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc["edges"].is_array()) throw std::invalid_argument("coupling map: edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw std::invalid_argument("coupling map: each edge must be a pair of vertex indices");
    }
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return CouplingGraph(std::move(name), nq.get<std::size_t>(), std::move(edges));
}

std::string to_json(const CouplingGraph& g) {
  nlohmann::json doc;
  doc["name"] = g.name();
  doc["num_qubits"] = g.num_qubits();
  doc["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

std::vector<std::string> builtin_architecture_names() {
  std::vector<std::string> names;
  for (const auto& [name, json] : detail::builtin_architecture_json()) names.emplace_back(name);
  return names;
}

namespace {

std::optional<std::size_t> family_size(const std::string& source, std::string_view prefix) {
  if (source.size() <= prefix.size() || source.compare(0, prefix.size(), prefix) != 0) {
    return std::nullopt;
  }
  std::size_t value = 0;
  const char* begin = source.data() + prefix.size();
  const char* end = source.data() + source.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

CouplingGraph load_graph(const std::string& source) {
  for (const auto& [name, json] : detail::builtin_architecture_json()) {
    if (source == name) return parse_graph_json(json);
  }
  if (auto n = family_size(source, "complete-")) return CouplingGraph::complete(*n);
  if (auto n = family_size(source, "line-")) return CouplingGraph::line(*n);
  if (!std::filesystem::is_regular_file(source)) {
    throw std::invalid_argument("unknown architecture '" + source +
                                "' (not a builtin name and no such file)");
  }
  std::ifstream in(source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

}  // namespace cliffsynth
