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

#ifndef NETRES_POTENTIAL_HPP
#define NETRES_POTENTIAL_HPP

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>

#include "netres/error.hpp"
#include "netres/kernel_matrix.hpp"
#include "netres/network.hpp"
#include "netres/vertex_function.hpp"

namespace netres {

/// Combinatorial Laplacian as a dense matrix in the network's vertex order.
inline Eigen::MatrixXd laplacian_matrix(const Network& net) {
  const int n = net.order();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const WeightedEdge& e : net.edges()) {
    lap(e.u, e.u) += e.conductance;
    lap(e.v, e.v) += e.conductance;
    lap(e.u, e.v) -= e.conductance;
    lap(e.v, e.u) -= e.conductance;
  }
  return lap;
}

/// Applies the Laplacian pointwise: (Lu)(x) = sum_{y~x} c(x,y)(u(x) - u(y)).
inline VertexFunction laplacian_apply(const Network& net,
                                      const VertexFunction& u) {
  if (u.size() != net.order()) {
    throw Error(Errc::domain_mismatch,
                "function of size " + std::to_string(u.size()) +
                    " on a network of order " + std::to_string(net.order()));
  }
  VertexFunction out = VertexFunction::zeros(net);
  for (const WeightedEdge& e : net.edges()) {
    const double flow = e.conductance * (u[e.u] - u[e.v]);
    out[e.u] += flow;
    out[e.v] -= flow;
  }
  return out;
}

namespace detail {

/// Cholesky factorization of L + (1/n) J. The rank-one shift makes the
/// Laplacian invertible while acting as the identity on constants, so
/// solves against mean-free data recover the mean-free Poisson solution.
inline Eigen::LLT<Eigen::MatrixXd> shifted_laplacian_llt(const Network& net) {
  const int n = net.order();
  Eigen::MatrixXd shifted =
      laplacian_matrix(net) + Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::LLT<Eigen::MatrixXd> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw Error(Errc::solve_failure, "Cholesky factorization failed");
  }
  return llt;
}

}  // namespace detail

/// Solves the Poisson problem Lu = f for the unique solution with <u,1> = 0.
/// Requires the compatibility condition <f,1> ~ 0.
inline VertexFunction solve_poisson(const Network& net,
                                    const VertexFunction& f) {
  if (f.size() != net.order()) {
    throw Error(Errc::domain_mismatch,
                "right-hand side of size " + std::to_string(f.size()) +
                    " on a network of order " + std::to_string(net.order()));
  }
  const double mass = f.sum();
  const double scale = f.values().cwiseAbs().sum();
  if (std::abs(mass) > 1e-9 * scale) {
    throw Error(Errc::not_orthogonal_to_ones,
                "<f,1> = " + std::to_string(mass));
  }
  const int n = net.order();
  Eigen::VectorXd rhs =
      f.values() - Eigen::VectorXd::Constant(n, mass / n);
  Eigen::VectorXd u = detail::shifted_laplacian_llt(net).solve(rhs);
  return VertexFunction::from_vector(net, std::move(u));
}

/// Green kernel of the network: the group inverse of the Laplacian. Column
/// G_y is the mean-free solution of L(G_y) = e_y - 1/n.
inline KernelMatrix green_kernel(const Network& net) {
  const int n = net.order();
  const Eigen::MatrixXd ones_over_n = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::MatrixXd green =
      detail::shifted_laplacian_llt(net).solve(Eigen::MatrixXd::Identity(n, n)) -
      ones_over_n;
  return KernelMatrix(net.vertices(), std::move(green));
}

/// Effective resistance R(x,y) = G(x,x) + G(y,y) - 2 G(x,y).
inline double effective_resistance(const KernelMatrix& green, const VertexId& x,
                                   const VertexId& y) {
  const int i = green.index_of(x);
  const int j = green.index_of(y);
  if (i == j) return 0.0;
  return green(i, i) + green(j, j) - 2.0 * green(i, j);
}

/// Kirchhoff index (total resistance), computed as n * trace(G).
inline double kirchhoff_index(const KernelMatrix& green) {
  return green.size() * green.matrix().trace();
}

/// All-pairs effective resistance matrix derived from a Green kernel.
inline KernelMatrix resistance_matrix(const KernelMatrix& green) {
  const int n = green.size();
  Eigen::MatrixXd r(n, n);
  for (int i = 0; i < n; ++i) {
    r(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      r(i, j) = r(j, i) = green(i, i) + green(j, j) - 2.0 * green(i, j);
    }
  }
  return KernelMatrix(green.labels(), std::move(r));
}

}  // namespace netres

#endif  // NETRES_POTENTIAL_HPP
