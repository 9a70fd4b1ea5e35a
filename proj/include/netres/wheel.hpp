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

#ifndef NETRES_WHEEL_HPP
#define NETRES_WHEEL_HPP

#include <Eigen/Core>
#include <cmath>
#include <string>
#include <utility>

#include "netres/chebyshev.hpp"
#include "netres/error.hpp"
#include "netres/generate.hpp"
#include "netres/kernel_matrix.hpp"
#include "netres/network.hpp"
#include "netres/subdivision.hpp"

namespace netres {

/// Wheel on rim_size rim vertices x1..xn plus the hub x0, with spoke
/// conductances a = c(x0,xi) and rim conductances c = c(xi,x_{i+1}),
/// indices on the rim taken cyclically.
struct WheelSpec {
  int rim_size = 3;
  double spoke = 1.0;
  double rim = 1.0;

  double p() const { return 1.0 + spoke / (2.0 * rim); }
};

namespace detail {

inline void require_valid(const WheelSpec& spec) {
  if (spec.rim_size < 3) {
    throw Error(Errc::bad_size, "wheel rim needs at least 3 vertices, got " +
                                    std::to_string(spec.rim_size));
  }
  if (!(spec.spoke > 0.0) || !std::isfinite(spec.spoke)) {
    throw Error(Errc::non_positive_conductance,
                "spoke conductance " + std::to_string(spec.spoke));
  }
  if (!(spec.rim > 0.0) || !std::isfinite(spec.rim)) {
    throw Error(Errc::non_positive_conductance,
                "rim conductance " + std::to_string(spec.rim));
  }
}

/// Rim successor: W(n) = 1, W(i) = i + 1 otherwise.
inline int rim_next(int i, int rim_size) { return i == rim_size ? 1 : i + 1; }

}  // namespace detail

/// Rim-to-rim Green entry of the wheel without the hub offset:
///   g_ij = [U_{n-1-|i-j|}(p) + U_{|i-j|-1}(p)] / [2c (T_n(p) - 1)],
/// for rim indices 1 <= i, j <= n.
inline double wheel_g(const WheelSpec& spec, int i, int j) {
  detail::require_valid(spec);
  if (i < 1 || i > spec.rim_size || j < 1 || j > spec.rim_size) {
    throw Error(Errc::index_out_of_range,
                "rim index (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside 1.." + std::to_string(spec.rim_size));
  }
  const int d = i > j ? i - j : j - i;
  const double p = spec.p();
  const double scale =
      2.0 * spec.rim * (chebyshev_t(spec.rim_size, p) - 1.0);
  return (chebyshev_u(spec.rim_size - 1 - d, p) + chebyshev_u(d - 1, p)) /
         scale;
}

/// Green kernel of the wheel in closed form, over vertices x0, x1, .., xn.
inline KernelMatrix wheel_green(const WheelSpec& spec) {
  detail::require_valid(spec);
  const int n = spec.rim_size;
  const double a = spec.spoke;
  const double hub_scale = a * (n + 1.0) * (n + 1.0);

  Eigen::MatrixXd out(n + 1, n + 1);
  out(0, 0) = n / hub_scale;
  for (int i = 1; i <= n; ++i) {
    out(0, i) = out(i, 0) = -1.0 / hub_scale;
    for (int j = i; j <= n; ++j) {
      out(i, j) = out(j, i) = -(n + 2.0) / hub_scale + wheel_g(spec, i, j);
    }
  }
  const Network net = wheel_network(spec.rim_size, spec.spoke, spec.rim);
  return KernelMatrix(net.vertices(), std::move(out));
}

/// Green kernel of the standard subdivision of the wheel in closed form.
///
/// Vertex order matches subdivide(wheel_network(..)): the base vertices
/// x0..xn, the spoke midpoints v_{x0 xi} for i = 1..n, then the rim
/// midpoints v_{xi x_{i+1}} for i = 1..n.
///
/// The published rim-midpoint diagonal carries a spurious Kronecker term:
/// the (p+1)/2 coefficient already accounts for the coincidence
/// contribution, so no extra 1/(4c) is added when i = j.
inline KernelMatrix wheel_subdivision_green(const WheelSpec& spec) {
  detail::require_valid(spec);
  const int n = spec.rim_size;
  const double a = spec.spoke;
  const double c = spec.rim;
  const double p = spec.p();
  const double total = 3.0 * n + 1.0;
  const double hub_numerator = n * (a + 26.0 * c) / total;
  const double hub_scale = 4.0 * a * c * total;
  const double rim_constant =
      (n * (a - 34.0 * c) - 20.0 * c) / (4.0 * a * c * total * total);

  const auto x = [](int i) { return i; };
  const auto y = [n](int i) { return n + i; };
  const auto z = [n](int i) { return 2 * n + i; };

  Eigen::MatrixXd out(3 * n + 1, 3 * n + 1);
  out(0, 0) = hub_numerator / hub_scale;
  for (int i = 1; i <= n; ++i) {
    out(0, x(i)) = out(x(i), 0) = (hub_numerator - 10.0 * c) / hub_scale;
    out(0, y(i)) = out(y(i), 0) = (hub_numerator - 6.0 * c) / hub_scale;
    out(0, z(i)) = out(z(i), 0) =
        (hub_numerator - (a + 10.0 * c)) / hub_scale;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const double g = wheel_g(spec, i, j);
      out(x(i), x(j)) = out(x(j), x(i)) = g + rim_constant;
      out(y(i), y(j)) = out(y(j), y(i)) =
          0.25 * g + (i == j ? 0.25 / a : 0.0) + rim_constant +
          2.0 / (a * total);
      out(z(i), z(j)) = out(z(j), z(i)) =
          0.5 * (p + 1.0) * g + rim_constant - 0.5 / (c * total);
    }
    for (int j = 1; j <= n; ++j) {
      const double g = wheel_g(spec, i, j);
      const double g_next = wheel_g(spec, i, detail::rim_next(j, n));
      out(x(i), y(j)) = out(y(j), x(i)) =
          0.5 * g + rim_constant + 1.0 / (a * total);
      out(x(i), z(j)) = out(z(j), x(i)) =
          0.5 * (g + g_next) + rim_constant - 0.25 / (c * total);
      out(y(i), z(j)) = out(z(j), y(i)) =
          0.25 * (g + g_next) + rim_constant -
          (a - 4.0 * c) / (4.0 * a * c * total);
    }
  }
  const SubdividedNetwork sub =
      subdivide(wheel_network(spec.rim_size, spec.spoke, spec.rim));
  return KernelMatrix(sub.derived().vertices(), std::move(out));
}

/// Kirchhoff index of the standard subdivision of the wheel in closed form.
inline double wheel_subdivision_kirchhoff(const WheelSpec& spec) {
  detail::require_valid(spec);
  const double n = spec.rim_size;
  const double a = spec.spoke;
  const double c = spec.rim;
  const double p = spec.p();
  const double chebyshev_part =
      7.0 * chebyshev_u(spec.rim_size - 1, p) +
      2.0 * chebyshev_u(spec.rim_size - 2, p) + 2.0;
  return (3.0 * n * n * (a + c) - 25.0 * c * n) / (4.0 * a * c) +
         n * (3.0 * n + 1.0) * chebyshev_part /
             (8.0 * c * (chebyshev_t(spec.rim_size, p) - 1.0));
}

}  // namespace netres

#endif  // NETRES_WHEEL_HPP
