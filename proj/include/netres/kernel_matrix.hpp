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

#ifndef NETRES_KERNEL_MATRIX_HPP
#define NETRES_KERNEL_MATRIX_HPP

#include <Eigen/Core>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netres/error.hpp"
#include "netres/network.hpp"

namespace netres {

/// Dense symmetric kernel (Green kernel or resistance matrix) together with
/// the vertex labels indexing its rows and columns.
class KernelMatrix {
 public:
  KernelMatrix(std::vector<VertexId> labels, Eigen::MatrixXd entries)
      : labels_(std::move(labels)), entries_(std::move(entries)) {
    const auto n = static_cast<Eigen::Index>(labels_.size());
    if (entries_.rows() != n || entries_.cols() != n) {
      throw Error(Errc::dimension_mismatch,
                  std::to_string(entries_.rows()) + "x" +
                      std::to_string(entries_.cols()) + " matrix for " +
                      std::to_string(labels_.size()) + " labels");
    }
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      index_.emplace(labels_[i], static_cast<int>(i));
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<VertexId>& labels() const { return labels_; }

  int index_of(const VertexId& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
      throw Error(Errc::unknown_vertex, "vertex '" + label + "'");
    }
    return it->second;
  }

  double operator()(int i, int j) const { return entries_(i, j); }

  double at(const VertexId& x, const VertexId& y) const {
    return entries_(index_of(x), index_of(y));
  }

  const Eigen::MatrixXd& matrix() const { return entries_; }

 private:
  std::vector<VertexId> labels_;
  std::unordered_map<std::string, int> index_;
  Eigen::MatrixXd entries_;
};

}  // namespace netres

#endif  // NETRES_KERNEL_MATRIX_HPP
