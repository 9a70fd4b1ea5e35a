/*
 * Copyright 2026 the netres authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NETRES_NETWORK_HPP
#define NETRES_NETWORK_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netres/error.hpp"

namespace netres {

/// Vertex label: nonempty token without whitespace. The '|' character is
/// reserved for generated subdivision labels and rejected in user input.
using VertexId = std::string;

/// Undirected edge with positive conductance. Endpoints are stored
/// canonically: label(u) precedes label(v) lexicographically.
struct WeightedEdge {
  int u = 0;
  int v = 0;
  double conductance = 0.0;
};

/// User-supplied edge description, endpoint order free.
struct EdgeSpec {
  VertexId u;
  VertexId v;
  double conductance = 0.0;
};

enum class LabelPolicy {
  user,       ///< reject '|' in labels
  generated,  ///< permit '|' (subdivision vertex names)
};

/// Finite connected weighted network, immutable after construction.
///
/// The vertex order given at construction is fixed and defines the row and
/// column indexing of every matrix derived from the network.
class Network {
 public:
  static Network create(std::vector<VertexId> vertices,
                        const std::vector<EdgeSpec>& edges,
                        LabelPolicy policy = LabelPolicy::user) {
    Network net;
    if (vertices.size() < 2) {
      throw Error(Errc::bad_size, "a network needs at least 2 vertices, got " +
                                      std::to_string(vertices.size()));
    }
    net.vertices_ = std::move(vertices);
    net.index_.reserve(net.vertices_.size());
    for (std::size_t i = 0; i < net.vertices_.size(); ++i) {
      const VertexId& label = net.vertices_[i];
      validate_label(label, policy);
      if (!net.index_.emplace(label, static_cast<int>(i)).second) {
        throw Error(Errc::duplicate_vertex, "vertex '" + label + "'");
      }
    }

    const int n = net.order();
    net.adjacency_.assign(n, {});
    net.degree_.assign(n, 0.0);
    for (const EdgeSpec& spec : edges) {
      int iu = net.index_of(spec.u);
      int iv = net.index_of(spec.v);
      if (iu == iv) {
        throw Error(Errc::loop_edge, "loop at vertex '" + spec.u + "'");
      }
      if (!(std::isfinite(spec.conductance) && spec.conductance > 0.0)) {
        throw Error(Errc::non_positive_conductance,
                    "edge (" + spec.u + "," + spec.v + ") has conductance " +
                        std::to_string(spec.conductance));
      }
      if (net.vertices_[iu] > net.vertices_[iv]) std::swap(iu, iv);
      if (net.find_edge(iu, iv) >= 0) {
        throw Error(Errc::duplicate_edge,
                    "edge (" + net.vertices_[iu] + "," + net.vertices_[iv] +
                        ") listed twice");
      }
      const int e = static_cast<int>(net.edges_.size());
      net.edges_.push_back({iu, iv, spec.conductance});
      net.adjacency_[iu].push_back({iv, e});
      net.adjacency_[iv].push_back({iu, e});
      net.degree_[iu] += spec.conductance;
      net.degree_[iv] += spec.conductance;
    }

    net.check_connected();
    return net;
  }

  int order() const { return static_cast<int>(vertices_.size()); }  // n
  int size() const { return static_cast<int>(edges_.size()); }      // m

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const VertexId& label(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  bool contains(const VertexId& label) const {
    return index_.find(label) != index_.end();
  }

  int index_of(const VertexId& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
      throw Error(Errc::unknown_vertex, "vertex '" + label + "'");
    }
    return it->second;
  }

  /// Weighted degree k(x), the sum of incident conductances.
  double degree(int i) const { return degree_[static_cast<std::size_t>(i)]; }
  double degree(const VertexId& label) const { return degree(index_of(label)); }

  /// Edge index joining i and j, or -1 when not adjacent.
  int find_edge(int i, int j) const {
    for (const auto& [nbr, e] : adjacency_[static_cast<std::size_t>(i)]) {
      if (nbr == j) return e;
    }
    return -1;
  }

  bool adjacent(int i, int j) const { return find_edge(i, j) >= 0; }

  /// Conductance c(i,j), zero when not adjacent.
  double conductance(int i, int j) const {
    const int e = find_edge(i, j);
    return e >= 0 ? edges_[static_cast<std::size_t>(e)].conductance : 0.0;
  }

  /// Neighbors of i as (vertex index, edge index) pairs.
  const std::vector<std::pair<int, int>>& neighbors(int i) const {
    return adjacency_[static_cast<std::size_t>(i)];
  }

 private:
  Network() = default;

  static void validate_label(const VertexId& label, LabelPolicy policy) {
    if (label.empty()) {
      throw Error(Errc::bad_label, "empty vertex label");
    }
    for (char ch : label) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        throw Error(Errc::bad_label, "whitespace in vertex label '" + label + "'");
      }
      if (policy == LabelPolicy::user && ch == '|') {
        throw Error(Errc::bad_label, "'|' in vertex label '" + label + "'");
      }
    }
  }

  void check_connected() const {
    const int n = order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [nbr, e] : adjacency_[static_cast<std::size_t>(x)]) {
        (void)e;
        if (!seen[static_cast<std::size_t>(nbr)]) {
          seen[static_cast<std::size_t>(nbr)] = 1;
          ++reached;
          stack.push_back(nbr);
        }
      }
    }
    if (reached != n) {
      for (int i = 0; i < n; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
          throw Error(Errc::disconnected,
                      "vertex '" + vertices_[static_cast<std::size_t>(i)] +
                          "' is not reachable from '" + vertices_[0] + "'");
        }
      }
    }
  }

  std::vector<VertexId> vertices_;
  std::unordered_map<std::string, int> index_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;  // (neighbor, edge)
  std::vector<double> degree_;
};

}  // namespace netres

#endif  // NETRES_NETWORK_HPP
