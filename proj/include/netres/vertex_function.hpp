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

#ifndef NETRES_VERTEX_FUNCTION_HPP
#define NETRES_VERTEX_FUNCTION_HPP

#include <Eigen/Core>
#include <map>
#include <utility>

#include "netres/error.hpp"
#include "netres/network.hpp"

namespace netres {

/// Real function on the vertex set of a network, stored in the network's
/// vertex order. Entry i belongs to net.label(i).
class VertexFunction {
 public:
  static VertexFunction zeros(const Network& net) {
    return VertexFunction(Eigen::VectorXd::Zero(net.order()));
  }

  /// Dirac function at one vertex.
  static VertexFunction dirac(const Network& net, const VertexId& at) {
    VertexFunction f = zeros(net);
    f[net.index_of(at)] = 1.0;
    return f;
  }

  static VertexFunction from_vector(const Network& net, Eigen::VectorXd values) {
    if (values.size() != net.order()) {
      throw Error(Errc::domain_mismatch,
                  "function has " + std::to_string(values.size()) +
                      " values for a network of order " +
                      std::to_string(net.order()));
    }
    return VertexFunction(std::move(values));
  }

  /// Builds from a label->value map; the domain must equal the vertex set
  /// exactly (no missing and no extra labels).
  static VertexFunction from_map(const Network& net,
                                 const std::map<VertexId, double>& values) {
    for (const auto& [label, value] : values) {
      (void)value;
      if (!net.contains(label)) {
        throw Error(Errc::domain_mismatch, "extra label '" + label + "'");
      }
    }
    Eigen::VectorXd v(net.order());
    for (int i = 0; i < net.order(); ++i) {
      auto it = values.find(net.label(i));
      if (it == values.end()) {
        throw Error(Errc::domain_mismatch,
                    "missing value for vertex '" + net.label(i) + "'");
      }
      v[i] = it->second;
    }
    return VertexFunction(std::move(v));
  }

  Eigen::Index size() const { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_[i]; }
  double& operator[](Eigen::Index i) { return values_[i]; }
  const Eigen::VectorXd& values() const { return values_; }
  Eigen::VectorXd& values() { return values_; }

  /// <f, 1>, the total mass.
  double sum() const { return values_.sum(); }

 private:
  explicit VertexFunction(Eigen::VectorXd values) : values_(std::move(values)) {}

  Eigen::VectorXd values_;
};

}  // namespace netres

#endif  // NETRES_VERTEX_FUNCTION_HPP
