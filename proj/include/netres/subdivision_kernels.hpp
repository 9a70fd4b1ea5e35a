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

#ifndef NETRES_SUBDIVISION_KERNELS_HPP
#define NETRES_SUBDIVISION_KERNELS_HPP

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "netres/error.hpp"
#include "netres/kernel_matrix.hpp"
#include "netres/network.hpp"
#include "netres/potential.hpp"
#include "netres/subdivision.hpp"

namespace netres {

/// Query-independent constants shared by all closed-form subdivision kernels:
/// the contraction weight pi(x) = sum_{y~x} alpha(x,y) of each base vertex,
/// and the scalar
///   beta = [sum_{x,y} G(x,y) pi(x) pi(y) + sum_{x~y} 1/k(v_xy)] / (n+m)^2.
struct SubdivisionGreenContext {
  Eigen::VectorXd pi;
  double beta = 0.0;
};

namespace detail {

struct EdgeCoefficients {
  int u, v;            // base endpoint indices
  double alpha_u;      // alpha(u,v)
  double alpha_v;      // alpha(v,u)
  double degree;       // k(v_uv)
};

inline std::vector<EdgeCoefficients> edge_coefficients(
    const SubdividedNetwork& sub) {
  std::vector<EdgeCoefficients> out;
  out.reserve(static_cast<std::size_t>(sub.base().size()));
  for (int e = 0; e < sub.base().size(); ++e) {
    const WeightedEdge& edge = sub.base().edges()[static_cast<std::size_t>(e)];
    out.push_back({edge.u, edge.v, sub.alpha(edge.u, edge.v),
                   sub.alpha(edge.v, edge.u), sub.inserted_degree(e)});
  }
  return out;
}

inline void require_base_kernel(const SubdividedNetwork& sub,
                                const KernelMatrix& kernel) {
  if (kernel.size() != sub.base().order()) {
    throw Error(Errc::dimension_mismatch,
                "kernel of size " + std::to_string(kernel.size()) +
                    " for a base of order " +
                    std::to_string(sub.base().order()));
  }
}

inline void require_unit_conductances(const Network& net) {
  for (const WeightedEdge& e : net.edges()) {
    if (e.conductance != 1.0) {
      throw Error(Errc::not_unit_conductance,
                  "edge (" + net.label(e.u) + "," + net.label(e.v) +
                      ") has conductance " + std::to_string(e.conductance));
    }
  }
}

/// Degree of a regular graph; requires unit conductances first so that
/// degrees are exact integers.
inline double require_regular(const Network& net) {
  const double k = net.degree(0);
  for (int i = 1; i < net.order(); ++i) {
    if (net.degree(i) != k) {
      throw Error(Errc::not_regular,
                  "vertex '" + net.label(i) + "' has degree " +
                      std::to_string(net.degree(i)) + ", expected " +
                      std::to_string(k));
    }
  }
  return k;
}

}  // namespace detail

/// Precomputes the contraction weights and the beta constant from the base
/// Green kernel.
inline SubdivisionGreenContext green_context(const SubdividedNetwork& sub,
                                             const KernelMatrix& base_green) {
  detail::require_base_kernel(sub, base_green);
  const Network& base = sub.base();
  SubdivisionGreenContext ctx;
  ctx.pi = Eigen::VectorXd::Zero(base.order());
  double inverse_degrees = 0.0;
  for (const auto& e : detail::edge_coefficients(sub)) {
    ctx.pi[e.u] += e.alpha_u;
    ctx.pi[e.v] += e.alpha_v;
    inverse_degrees += 1.0 / e.degree;
  }
  const double total = sub.derived().order();
  ctx.beta = (ctx.pi.dot(base_green.matrix() * ctx.pi) + inverse_degrees) /
             (total * total);
  return ctx;
}

/// Green kernel of the subdivided network assembled from the base Green
/// kernel, without factorizing the subdivided Laplacian.
inline KernelMatrix green_subdivision(const SubdividedNetwork& sub,
                                      const KernelMatrix& base_green,
                                      const SubdivisionGreenContext& ctx) {
  detail::require_base_kernel(sub, base_green);
  const Network& base = sub.base();
  if (ctx.pi.size() != base.order()) {
    throw Error(Errc::dimension_mismatch, "context does not match base order");
  }
  const int n = base.order();
  const int m = base.size();
  const double total = n + m;
  const Eigen::MatrixXd& green = base_green.matrix();
  const Eigen::VectorXd weighted = green * ctx.pi;  // sum_l G(x,l) pi(l)
  const auto edges = detail::edge_coefficients(sub);

  Eigen::MatrixXd out(n + m, n + m);
  for (int x = 0; x < n; ++x) {
    for (int z = x; z < n; ++z) {
      out(x, z) = out(z, x) =
          green(x, z) - (weighted[x] + weighted[z]) / total + ctx.beta;
    }
  }
  for (int e = 0; e < m; ++e) {
    const auto& ec = edges[static_cast<std::size_t>(e)];
    const int ve = n + e;
    for (int z = 0; z < n; ++z) {
      out(ve, z) = out(z, ve) =
          ec.alpha_u * green(ec.u, z) + ec.alpha_v * green(ec.v, z) -
          (ec.alpha_u * weighted[ec.u] + ec.alpha_v * weighted[ec.v] +
           weighted[z]) /
              total -
          1.0 / (total * ec.degree) + ctx.beta;
    }
    for (int f = e; f < m; ++f) {
      const auto& fc = edges[static_cast<std::size_t>(f)];
      const int vf = n + f;
      double value =
          fc.alpha_u * (ec.alpha_u * green(ec.u, fc.u) +
                        ec.alpha_v * green(ec.v, fc.u)) +
          fc.alpha_v * (ec.alpha_u * green(ec.u, fc.v) +
                        ec.alpha_v * green(ec.v, fc.v)) -
          (ec.alpha_u * weighted[ec.u] + ec.alpha_v * weighted[ec.v] +
           fc.alpha_u * weighted[fc.u] + fc.alpha_v * weighted[fc.v]) /
              total -
          1.0 / (total * ec.degree) - 1.0 / (total * fc.degree) + ctx.beta;
      if (e == f) value += 1.0 / ec.degree;
      out(ve, vf) = out(vf, ve) = value;
    }
  }
  return KernelMatrix(sub.derived().vertices(), std::move(out));
}

/// Standard-subdivision Green kernel of a k-regular graph with unit
/// conductances, by the specialized constants instead of the general
/// assembly. Hypotheses are validated, not assumed.
inline KernelMatrix green_subdivision_standard_regular(
    const Network& net, const KernelMatrix& base_green) {
  detail::require_unit_conductances(net);
  const double k = detail::require_regular(net);
  const SubdividedNetwork sub = subdivide(net);
  detail::require_base_kernel(sub, base_green);

  const int n = net.order();
  const int m = net.size();
  const double square = (2.0 + k) * (2.0 + k);
  const Eigen::MatrixXd& green = base_green.matrix();
  const auto edges = detail::edge_coefficients(sub);

  Eigen::MatrixXd out(n + m, n + m);
  for (int x = 0; x < n; ++x) {
    for (int z = x; z < n; ++z) {
      out(x, z) = out(z, x) = green(x, z) + k / (2.0 * n * square);
    }
  }
  for (int e = 0; e < m; ++e) {
    const auto& ec = edges[static_cast<std::size_t>(e)];
    const int ve = n + e;
    for (int z = 0; z < n; ++z) {
      out(ve, z) = out(z, ve) =
          0.5 * (green(ec.u, z) + green(ec.v, z)) - 1.0 / (n * square);
    }
    for (int f = e; f < m; ++f) {
      const auto& fc = edges[static_cast<std::size_t>(f)];
      const int vf = n + f;
      const double kronecker = e == f ? 1.0 : 0.0;
      out(ve, vf) = out(vf, ve) =
          0.25 * (green(ec.u, fc.u) + green(ec.v, fc.u) + green(ec.u, fc.v) +
                  green(ec.v, fc.v) + kronecker) -
          (4.0 + k) / (2.0 * n * square);
    }
  }
  return KernelMatrix(sub.derived().vertices(), std::move(out));
}

/// Effective resistances of the subdivided network from the base resistance
/// matrix. Resistances between base vertices are returned unchanged.
inline KernelMatrix resistance_subdivision(const SubdividedNetwork& sub,
                                           const KernelMatrix& base_resistance) {
  detail::require_base_kernel(sub, base_resistance);
  const int n = sub.base().order();
  const int m = sub.base().size();
  const Eigen::MatrixXd& res = base_resistance.matrix();
  const auto edges = detail::edge_coefficients(sub);

  Eigen::MatrixXd out(n + m, n + m);
  out.topLeftCorner(n, n) = res;
  for (int e = 0; e < m; ++e) {
    const auto& ec = edges[static_cast<std::size_t>(e)];
    const int ve = n + e;
    for (int x = 0; x < n; ++x) {
      out(ve, x) = out(x, ve) =
          1.0 / ec.degree + ec.alpha_u * res(x, ec.u) +
          ec.alpha_v * res(x, ec.v) -
          ec.alpha_u * ec.alpha_v * res(ec.u, ec.v);
    }
    out(ve, ve) = 0.0;
    for (int f = e + 1; f < m; ++f) {
      const auto& fc = edges[static_cast<std::size_t>(f)];
      const int vf = n + f;
      out(ve, vf) = out(vf, ve) =
          1.0 / ec.degree + 1.0 / fc.degree -
          ec.alpha_u * ec.alpha_v * res(ec.u, ec.v) -
          fc.alpha_u * fc.alpha_v * res(fc.u, fc.v) +
          ec.alpha_u * fc.alpha_u * res(ec.u, fc.u) +
          ec.alpha_u * fc.alpha_v * res(ec.u, fc.v) +
          fc.alpha_u * ec.alpha_v * res(ec.v, fc.u) +
          ec.alpha_v * fc.alpha_v * res(ec.v, fc.v);
    }
  }
  return KernelMatrix(sub.derived().vertices(), std::move(out));
}

/// Standard-subdivision resistances of a unit-conductance network, using the
/// simplified quarter formulas (every inserted degree is 4).
inline KernelMatrix resistance_subdivision_standard(
    const Network& net, const KernelMatrix& base_resistance) {
  detail::require_unit_conductances(net);
  const SubdividedNetwork sub = subdivide(net);
  detail::require_base_kernel(sub, base_resistance);

  const int n = net.order();
  const int m = net.size();
  const Eigen::MatrixXd& res = base_resistance.matrix();
  const auto edges = detail::edge_coefficients(sub);

  Eigen::MatrixXd out(n + m, n + m);
  out.topLeftCorner(n, n) = res;
  for (int e = 0; e < m; ++e) {
    const auto& ec = edges[static_cast<std::size_t>(e)];
    const int ve = n + e;
    for (int x = 0; x < n; ++x) {
      out(ve, x) = out(x, ve) =
          (1.0 + 2.0 * res(x, ec.u) + 2.0 * res(x, ec.v) - res(ec.u, ec.v)) /
          4.0;
    }
    out(ve, ve) = 0.0;
    for (int f = e + 1; f < m; ++f) {
      const auto& fc = edges[static_cast<std::size_t>(f)];
      const int vf = n + f;
      out(ve, vf) = out(vf, ve) =
          (2.0 - res(ec.u, ec.v) - res(fc.u, fc.v) + res(ec.u, fc.u) +
           res(ec.u, fc.v) + res(ec.v, fc.u) + res(ec.v, fc.v)) /
          4.0;
    }
  }
  return KernelMatrix(sub.derived().vertices(), std::move(out));
}

/// Kirchhoff index of the subdivided network from base-network quantities
/// only.
inline double kirchhoff_subdivision(const SubdividedNetwork& sub,
                                    const KernelMatrix& base_green,
                                    const SubdivisionGreenContext& ctx) {
  detail::require_base_kernel(sub, base_green);
  const Network& base = sub.base();
  if (ctx.pi.size() != base.order()) {
    throw Error(Errc::dimension_mismatch, "context does not match base order");
  }
  const int n = base.order();
  const double total = sub.derived().order();
  const Eigen::MatrixXd& green = base_green.matrix();

  const double base_kirchhoff = n * green.trace();
  double diag_weighted = 0.0;
  for (int x = 0; x < n; ++x) diag_weighted += green(x, x) * ctx.pi[x];

  double edge_resistance = 0.0;
  double inverse_degrees = 0.0;
  for (const auto& e : detail::edge_coefficients(sub)) {
    const double r =
        green(e.u, e.u) + green(e.v, e.v) - 2.0 * green(e.u, e.v);
    edge_resistance += e.alpha_u * e.alpha_v * r;
    inverse_degrees += 1.0 / e.degree;
  }

  return total / n * base_kirchhoff + total * diag_weighted -
         ctx.pi.dot(green * ctx.pi) - total * edge_resistance +
         (total - 1.0) * inverse_degrees;
}

/// Kirchhoff index of the standard subdivision of a unit-conductance
/// network. The edge-resistance sum collapses through the total-tree
/// identity, leaving the closed constant (m^2 - n^2 + n)/4.
inline double kirchhoff_subdivision_standard(const Network& net,
                                             const KernelMatrix& base_green) {
  detail::require_unit_conductances(net);
  if (base_green.size() != net.order()) {
    throw Error(Errc::dimension_mismatch,
                "kernel of size " + std::to_string(base_green.size()) +
                    " for a base of order " + std::to_string(net.order()));
  }
  const int n = net.order();
  const double m = net.size();
  const Eigen::MatrixXd& green = base_green.matrix();
  const double total = n + m;

  Eigen::VectorXd pi(n);
  for (int x = 0; x < n; ++x) {
    pi[x] = 0.5 * static_cast<double>(net.neighbors(x).size());
  }
  double diag_weighted = 0.0;
  for (int x = 0; x < n; ++x) diag_weighted += green(x, x) * pi[x];

  return total / n * (n * green.trace()) + total * diag_weighted -
         pi.dot(green * pi) + (m * m - double(n) * n + n) / 4.0;
}

/// Kirchhoff index of the standard subdivision of a k-regular unit
/// conductance graph: ((k+2)^2/4) k(base) + ((k^2-4) n^2 + 4n)/16.
inline double kirchhoff_subdivision_standard_regular(
    const Network& net, const KernelMatrix& base_green) {
  detail::require_unit_conductances(net);
  const double k = detail::require_regular(net);
  if (base_green.size() != net.order()) {
    throw Error(Errc::dimension_mismatch,
                "kernel of size " + std::to_string(base_green.size()) +
                    " for a base of order " + std::to_string(net.order()));
  }
  const double n = net.order();
  const double base_kirchhoff = n * base_green.matrix().trace();
  return (k + 2.0) * (k + 2.0) / 4.0 * base_kirchhoff +
         ((k * k - 4.0) * n * n + 4.0 * n) / 16.0;
}

}  // namespace netres

#endif  // NETRES_SUBDIVISION_KERNELS_HPP
