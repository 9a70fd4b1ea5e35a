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

#ifndef NETRES_SUBDIVISION_HPP
#define NETRES_SUBDIVISION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "netres/error.hpp"
#include "netres/network.hpp"
#include "netres/potential.hpp"
#include "netres/vertex_function.hpp"

namespace netres {

/// Label of the vertex inserted into edge {x,y}; symmetric in x and y.
inline VertexId subdivision_vertex_label(const VertexId& x, const VertexId& y) {
  const VertexId& lo = x < y ? x : y;
  const VertexId& hi = x < y ? y : x;
  return "s(" + lo + "|" + hi + ")";
}

/// Per-edge split parameters, keyed by an endpoint pair whose first element
/// is the designated first endpoint. A split t in (0,1) assigns the inserted
/// vertex conductances c/t toward the first endpoint and c/(1-t) toward the
/// other, so the series rule 1/c = t/c + (1-t)/c holds for every t. Edges
/// absent from the map use the standard split t = 1/2. Keys are normalized
/// to the canonical (smaller, larger) orientation on use.
using SplitMap = std::map<std::pair<VertexId, VertexId>, double>;

/// Electrically compatible subdivision of a network: one vertex inserted per
/// edge, conductances split so the series resistance of the two new edges
/// equals the resistance of the replaced edge.
///
/// The derived network lists the base vertices first, in base order, followed
/// by one inserted vertex per base edge in base edge order. Base vertex i
/// keeps index i in the derived network and the vertex inserted into base
/// edge e has index base.order() + e.
class SubdividedNetwork {
 public:
  const Network& base() const { return base_; }
  const Network& derived() const { return derived_; }

  int base_edge_count() const { return base_.size(); }

  /// Split parameter of base edge e.
  double split(int e) const { return splits_[static_cast<std::size_t>(e)]; }

  /// Derived index of the vertex inserted into base edge e.
  int inserted_vertex(int e) const { return base_.order() + e; }

  const VertexId& inserted_label(int e) const {
    return derived_.label(inserted_vertex(e));
  }

  /// Degree of the inserted vertex, k(v_xy) = c(x,v_xy) + c(y,v_xy).
  double inserted_degree(int e) const {
    return derived_.degree(inserted_vertex(e));
  }

  /// Transition coefficient alpha(x,y) = c(x,v_xy)/k(v_xy) for base vertex
  /// indices; zero when x and y are not adjacent in the base network.
  double alpha(int x, int y) const {
    const int e = base_.find_edge(x, y);
    if (e < 0) return 0.0;
    const WeightedEdge& edge = base_.edges()[static_cast<std::size_t>(e)];
    const double t = split(e);
    return x == edge.u ? 1.0 - t : t;
  }

  double alpha(const VertexId& x, const VertexId& y) const {
    return alpha(base_.index_of(x), base_.index_of(y));
  }

  friend SubdividedNetwork subdivide(const Network& base, const SplitMap& splits);

 private:
  SubdividedNetwork(Network base, Network derived, std::vector<double> splits)
      : base_(std::move(base)),
        derived_(std::move(derived)),
        splits_(std::move(splits)) {}

  Network base_;
  Network derived_;
  std::vector<double> splits_;  // t per base edge
};

/// Validates a split map against a network and normalizes every key to the
/// canonical (smaller, larger) orientation, flipping t accordingly.
inline SplitMap normalize_splits(const Network& base, const SplitMap& splits) {
  SplitMap canonical;
  for (const auto& [key, t] : splits) {
    const auto& [u, v] = key;
    if (!base.contains(u) || !base.contains(v) ||
        base.find_edge(base.index_of(u), base.index_of(v)) < 0) {
      throw Error(Errc::unknown_edge, "no edge (" + u + "," + v + ")");
    }
    if (!(t > 0.0 && t < 1.0)) {
      throw Error(Errc::split_out_of_range,
                  "split " + std::to_string(t) + " on edge (" + u + "," + v +
                      ") lies outside (0,1)");
    }
    const bool flipped = u > v;
    const auto inserted = canonical.emplace(
        flipped ? std::make_pair(v, u) : key, flipped ? 1.0 - t : t);
    if (!inserted.second) {
      throw Error(Errc::duplicate_edge,
                  "split for edge (" + u + "," + v + ") listed twice");
    }
  }
  return canonical;
}

inline SubdividedNetwork subdivide(const Network& base, const SplitMap& splits) {
  const SplitMap canonical = normalize_splits(base, splits);

  std::vector<VertexId> vertices = base.vertices();
  std::vector<EdgeSpec> edges;
  std::vector<double> per_edge;
  edges.reserve(2 * static_cast<std::size_t>(base.size()));
  per_edge.reserve(static_cast<std::size_t>(base.size()));
  for (const WeightedEdge& e : base.edges()) {
    const VertexId& u = base.label(e.u);  // canonical smaller label
    const VertexId& v = base.label(e.v);
    auto it = canonical.find({u, v});
    const double t = it == canonical.end() ? 0.5 : it->second;
    const VertexId inserted = subdivision_vertex_label(u, v);
    vertices.push_back(inserted);
    edges.push_back({u, inserted, e.conductance / t});
    edges.push_back({v, inserted, e.conductance / (1.0 - t)});
    per_edge.push_back(t);
  }
  Network derived =
      Network::create(std::move(vertices), edges, LabelPolicy::generated);
  return SubdividedNetwork(base, std::move(derived), std::move(per_edge));
}

/// Standard subdivision: every edge split at t = 1/2, both new conductances
/// twice the original.
inline SubdividedNetwork subdivide(const Network& base) {
  return subdivide(base, SplitMap{});
}

/// Contraction of a function on the subdivided vertex set down to the base:
/// contracted(x) = h(x) + sum_{y~x} alpha(x,y) h(v_xy). Preserves total mass.
inline VertexFunction contract(const SubdividedNetwork& sub,
                               const VertexFunction& h) {
  const Network& base = sub.base();
  if (h.size() != sub.derived().order()) {
    throw Error(Errc::domain_mismatch,
                "function of size " + std::to_string(h.size()) +
                    " on a subdivision of order " +
                    std::to_string(sub.derived().order()));
  }
  VertexFunction out = VertexFunction::zeros(base);
  for (int x = 0; x < base.order(); ++x) out[x] = h[x];
  for (int e = 0; e < base.size(); ++e) {
    const WeightedEdge& edge = base.edges()[static_cast<std::size_t>(e)];
    const double hv = h[sub.inserted_vertex(e)];
    out[edge.u] += sub.alpha(edge.u, edge.v) * hv;
    out[edge.v] += sub.alpha(edge.v, edge.u) * hv;
  }
  return out;
}

/// Extension of u on the base to the subdivided vertex set with respect to h:
/// keeps u on base vertices and sets
/// u^h(v_xy) = h(v_xy)/k(v_xy) + alpha(x,y) u(x) + alpha(y,x) u(y),
/// which makes the subdivided Laplacian of u^h equal h at every inserted
/// vertex.
inline VertexFunction extend(const SubdividedNetwork& sub,
                             const VertexFunction& u,
                             const VertexFunction& h) {
  const Network& base = sub.base();
  if (u.size() != base.order()) {
    throw Error(Errc::domain_mismatch,
                "base function of size " + std::to_string(u.size()) +
                    " on a base of order " + std::to_string(base.order()));
  }
  if (h.size() != sub.derived().order()) {
    throw Error(Errc::domain_mismatch,
                "subdivision function of size " + std::to_string(h.size()) +
                    " on a subdivision of order " +
                    std::to_string(sub.derived().order()));
  }
  VertexFunction out = VertexFunction::zeros(sub.derived());
  for (int x = 0; x < base.order(); ++x) out[x] = u[x];
  for (int e = 0; e < base.size(); ++e) {
    const WeightedEdge& edge = base.edges()[static_cast<std::size_t>(e)];
    const int v = sub.inserted_vertex(e);
    out[v] = h[v] / sub.inserted_degree(e) +
             sub.alpha(edge.u, edge.v) * u[edge.u] +
             sub.alpha(edge.v, edge.u) * u[edge.v];
  }
  return out;
}

/// Solves the Poisson problem on the subdivided network through the base
/// network: contract the data, solve on the base, extend the solution, and
/// shift by the constant that restores zero mean. Never factorizes the
/// subdivided Laplacian.
inline VertexFunction solve_poisson_on_subdivision(const SubdividedNetwork& sub,
                                                   const VertexFunction& h) {
  if (h.size() != sub.derived().order()) {
    throw Error(Errc::domain_mismatch,
                "right-hand side of size " + std::to_string(h.size()) +
                    " on a subdivision of order " +
                    std::to_string(sub.derived().order()));
  }
  const double mass = h.sum();
  const double scale = h.values().cwiseAbs().sum();
  if (std::abs(mass) > 1e-9 * scale) {
    throw Error(Errc::not_orthogonal_to_ones,
                "<h,1> = " + std::to_string(mass));
  }

  const Network& base = sub.base();
  const VertexFunction contracted = contract(sub, h);
  const VertexFunction u = solve_poisson(base, contracted);
  VertexFunction lifted = extend(sub, u, h);

  double shift = 0.0;
  for (int e = 0; e < base.size(); ++e) {
    shift += lifted[sub.inserted_vertex(e)];
  }
  shift = -shift / sub.derived().order();
  lifted.values().array() += shift;
  return lifted;
}

}  // namespace netres

#endif  // NETRES_SUBDIVISION_HPP
