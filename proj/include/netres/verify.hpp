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

#ifndef NETRES_VERIFY_HPP
#define NETRES_VERIFY_HPP

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "netres/format.hpp"
#include "netres/kernel_matrix.hpp"
#include "netres/network.hpp"
#include "netres/potential.hpp"
#include "netres/subdivision.hpp"
#include "netres/subdivision_kernels.hpp"
#include "netres/vertex_function.hpp"
#include "netres/wheel.hpp"

namespace netres {

enum class CheckStatus { pass, fail, skipped };

struct VerificationCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool overall_pass() const {
    for (const VerificationCheck& check : checks) {
      if (check.status == CheckStatus::fail) return false;
    }
    return true;
  }
};

namespace detail {

inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline VerificationCheck measured_check(std::string name, double deviation,
                                        double tolerance,
                                        std::string note = {}) {
  VerificationCheck check;
  check.name = std::move(name);
  check.status = deviation <= tolerance ? CheckStatus::pass : CheckStatus::fail;
  check.max_deviation = deviation;
  check.tolerance = tolerance;
  check.note = std::move(note);
  return check;
}

inline VerificationCheck skipped_check(std::string name, std::string reason) {
  VerificationCheck check;
  check.name = std::move(name);
  check.status = CheckStatus::skipped;
  check.note = "hypotheses not met: " + std::move(reason);
  return check;
}

inline bool standard_splits(const SubdividedNetwork& sub) {
  for (int e = 0; e < sub.base_edge_count(); ++e) {
    if (sub.split(e) != 0.5) return false;
  }
  return true;
}

inline bool unit_conductances(const Network& net) {
  for (const WeightedEdge& e : net.edges()) {
    if (e.conductance != 1.0) return false;
  }
  return true;
}

inline bool regular_degrees(const Network& net) {
  for (int i = 1; i < net.order(); ++i) {
    if (net.degree(i) != net.degree(0)) return false;
  }
  return true;
}

/// Structural wheel recognition: one hub adjacent to every other vertex
/// with a uniform spoke conductance, the rest a single cycle with a uniform
/// rim conductance. rim[k] is the base index playing the role of rim
/// position k+1; the traversal starts at the lowest rim index and turns
/// toward its lower-indexed neighbor, which fixes the mapping
/// deterministically (any rotation or reflection gives the same kernel).
struct WheelShape {
  bool matched = false;
  WheelSpec spec;
  int hub = -1;
  std::vector<int> rim;
};

inline WheelShape detect_wheel(const Network& net) {
  WheelShape shape;
  const int order = net.order();
  const int n = order - 1;
  if (n < 3 || net.size() != 2 * n) return shape;

  for (int hub = 0; hub < order; ++hub) {
    if (static_cast<int>(net.neighbors(hub).size()) != n) continue;
    const double spoke = net.conductance(hub, hub == 0 ? 1 : 0);
    bool uniform = true;
    for (int v = 0; v < order && uniform; ++v) {
      if (v != hub && net.conductance(hub, v) != spoke) uniform = false;
    }
    if (!uniform) continue;

    double rim_conductance = 0.0;
    bool cycle = true;
    for (int v = 0; v < order && cycle; ++v) {
      if (v == hub) continue;
      int rim_neighbors = 0;
      for (const auto& [nbr, e] : net.neighbors(v)) {
        if (nbr == hub) continue;
        ++rim_neighbors;
        const double c = net.edges()[static_cast<std::size_t>(e)].conductance;
        if (rim_conductance == 0.0) {
          rim_conductance = c;
        } else if (c != rim_conductance) {
          cycle = false;
        }
      }
      if (rim_neighbors != 2) cycle = false;
    }
    if (!cycle) continue;

    const int start = hub == 0 ? 1 : 0;
    std::vector<int> rim{start};
    int previous = -1;
    int current = start;
    while (static_cast<int>(rim.size()) < n) {
      int next = -1;
      for (const auto& [nbr, e] : net.neighbors(current)) {
        (void)e;
        if (nbr == hub || nbr == previous) continue;
        if (next < 0 || nbr < next) next = nbr;
      }
      if (next < 0 || next == start) break;
      rim.push_back(next);
      previous = current;
      current = next;
    }
    if (static_cast<int>(rim.size()) != n) continue;
    if (!net.adjacent(rim.back(), start)) continue;

    shape.matched = true;
    shape.spec = WheelSpec{n, spoke, rim_conductance};
    shape.hub = hub;
    shape.rim = std::move(rim);
    return shape;
  }
  return shape;
}

/// Derived-index permutation sending the user's subdivided wheel onto the
/// canonical ordering used by the closed-form wheel kernels.
inline std::vector<int> wheel_derived_map(const SubdividedNetwork& sub,
                                          const WheelShape& shape) {
  const Network& base = sub.base();
  const int n = shape.spec.rim_size;
  std::vector<int> position(static_cast<std::size_t>(base.order()), 0);
  for (int k = 0; k < n; ++k) {
    position[static_cast<std::size_t>(shape.rim[static_cast<std::size_t>(k)])] =
        k + 1;
  }
  std::vector<int> map(static_cast<std::size_t>(sub.derived().order()), 0);
  for (int v = 0; v < base.order(); ++v) {
    map[static_cast<std::size_t>(v)] =
        v == shape.hub ? 0 : position[static_cast<std::size_t>(v)];
  }
  for (int e = 0; e < base.size(); ++e) {
    const WeightedEdge& edge = base.edges()[static_cast<std::size_t>(e)];
    int canonical;
    if (edge.u == shape.hub || edge.v == shape.hub) {
      const int r = edge.u == shape.hub ? edge.v : edge.u;
      canonical = n + position[static_cast<std::size_t>(r)];
    } else {
      const int i = position[static_cast<std::size_t>(edge.u)];
      const int j = position[static_cast<std::size_t>(edge.v)];
      const int lead = j == (i % n) + 1 ? i : j;
      canonical = 2 * n + lead;
    }
    map[static_cast<std::size_t>(sub.inserted_vertex(e))] = canonical;
  }
  return map;
}

}  // namespace detail

/// Runs every closed form against the brute-force oracle on the given
/// network and splits. Checks whose hypotheses the input does not satisfy
/// are reported as skipped, not failed.
inline VerificationReport run_verification(const Network& net,
                                           const SplitMap& splits,
                                           double tol = 1e-9) {
  VerificationReport report;
  const SubdividedNetwork sub = subdivide(net, splits);
  const Network& derived = sub.derived();
  const int derived_order = derived.order();

  const KernelMatrix base_green = green_kernel(net);
  const KernelMatrix oracle_green = green_kernel(derived);
  const SubdivisionGreenContext ctx = green_context(sub, base_green);
  const KernelMatrix closed_green = green_subdivision(sub, base_green, ctx);
  const KernelMatrix base_resistance = resistance_matrix(base_green);
  const KernelMatrix oracle_resistance = resistance_matrix(oracle_green);
  const KernelMatrix closed_resistance =
      resistance_subdivision(sub, base_resistance);

  const bool standard = detail::standard_splits(sub);
  const bool unit = detail::unit_conductances(net);
  const bool regular = detail::regular_degrees(net);

  {
    std::mt19937_64 rng(20260823);
    double deviation = 0.0;
    for (int round = 0; round < 16; ++round) {
      VertexFunction h = VertexFunction::zeros(derived);
      for (int v = 0; v < derived_order; ++v) {
        h[v] = 2.0 * detail::unit_uniform(rng) - 1.0;
      }
      const double mean = h.sum() / derived_order;
      for (int v = 0; v < derived_order; ++v) h[v] -= mean;
      const VertexFunction reduced = solve_poisson_on_subdivision(sub, h);
      const VertexFunction direct = solve_poisson(derived, h);
      deviation = std::max(
          deviation,
          (reduced.values() - direct.values()).cwiseAbs().maxCoeff());
    }
    report.checks.push_back(
        detail::measured_check("thm-2.1-poisson-reduction", deviation, tol));
  }

  report.checks.push_back(detail::measured_check(
      "prop-3.1-green-kernel",
      (closed_green.matrix() - oracle_green.matrix()).cwiseAbs().maxCoeff(),
      tol));

  if (standard && unit && regular) {
    const KernelMatrix fast = green_subdivision_standard_regular(net, base_green);
    report.checks.push_back(detail::measured_check(
        "cor-3.2-green-standard-regular",
        (fast.matrix() - closed_green.matrix()).cwiseAbs().maxCoeff(), 1e-10));
  } else {
    report.checks.push_back(detail::skipped_check(
        "cor-3.2-green-standard-regular",
        !standard ? "nonstandard splits"
                  : (!unit ? "conductances not all 1" : "network not regular")));
  }

  {
    double deviation =
        (closed_resistance.matrix() - oracle_resistance.matrix())
            .cwiseAbs()
            .maxCoeff();
    double base_invariance = 0.0;
    for (int x = 0; x < net.order(); ++x) {
      for (int y = 0; y < net.order(); ++y) {
        base_invariance =
            std::max(base_invariance, std::abs(oracle_resistance(x, y) -
                                               base_resistance(x, y)));
      }
    }
    report.checks.push_back(detail::measured_check(
        "thm-4.1-resistance", std::max(deviation, base_invariance), tol));
  }

  if (standard && unit) {
    const KernelMatrix fast = resistance_subdivision_standard(net, base_resistance);
    report.checks.push_back(detail::measured_check(
        "cor-4.2-resistance-standard",
        (fast.matrix() - closed_resistance.matrix()).cwiseAbs().maxCoeff(),
        1e-10));
  } else {
    report.checks.push_back(detail::skipped_check(
        "cor-4.2-resistance-standard",
        !standard ? "nonstandard splits" : "conductances not all 1"));
  }

  const double closed_kirchhoff = kirchhoff_subdivision(sub, base_green, ctx);
  {
    const double trace_kirchhoff = kirchhoff_index(oracle_green);
    const double sum_kirchhoff = 0.5 * oracle_resistance.matrix().sum();
    const double scale = std::max(1.0, std::abs(trace_kirchhoff));
    const double deviation =
        std::max({std::abs(closed_kirchhoff - trace_kirchhoff),
                  std::abs(closed_kirchhoff - sum_kirchhoff),
                  std::abs(trace_kirchhoff - sum_kirchhoff)}) /
        scale;
    report.checks.push_back(detail::measured_check(
        "thm-4.3-kirchhoff", deviation, 10.0 * tol,
        "value " + format_significant(closed_kirchhoff)));
  }

  if (standard && unit) {
    const double scale = std::max(1.0, std::abs(closed_kirchhoff));
    double deviation =
        std::abs(kirchhoff_subdivision_standard(net, base_green) -
                 closed_kirchhoff) /
        scale;
    if (regular) {
      deviation = std::max(
          deviation,
          std::abs(kirchhoff_subdivision_standard_regular(net, base_green) -
                   closed_kirchhoff) /
              scale);
    }
    report.checks.push_back(detail::measured_check(
        "cor-4.4-kirchhoff-standard", deviation, 1e-10));
  } else {
    report.checks.push_back(detail::skipped_check(
        "cor-4.4-kirchhoff-standard",
        !standard ? "nonstandard splits" : "conductances not all 1"));
  }

  const detail::WheelShape shape = detail::detect_wheel(net);
  if (shape.matched && standard) {
    const std::vector<int> map = detail::wheel_derived_map(sub, shape);
    const KernelMatrix wheel_closed = wheel_subdivision_green(shape.spec);
    double deviation = 0.0;
    for (int u = 0; u < derived_order; ++u) {
      for (int v = 0; v < derived_order; ++v) {
        deviation = std::max(
            deviation,
            std::abs(oracle_green(u, v) -
                     wheel_closed(map[static_cast<std::size_t>(u)],
                                  map[static_cast<std::size_t>(v)])));
      }
    }
    report.checks.push_back(
        detail::measured_check("prop-5.1-wheel-green", deviation, tol));

    const double wheel_kirchhoff = wheel_subdivision_kirchhoff(shape.spec);
    report.checks.push_back(detail::measured_check(
        "cor-5.2-wheel-kirchhoff",
        std::abs(wheel_kirchhoff - closed_kirchhoff) /
            std::max(1.0, std::abs(closed_kirchhoff)),
        10.0 * tol, "value " + format_significant(wheel_kirchhoff)));
  } else {
    const std::string reason =
        shape.matched ? "nonstandard splits" : "not a wheel";
    report.checks.push_back(
        detail::skipped_check("prop-5.1-wheel-green", reason));
    report.checks.push_back(
        detail::skipped_check("cor-5.2-wheel-kirchhoff", reason));
  }

  return report;
}

/// Fixed-layout rendering of a report, one line per check plus an overall
/// verdict line.
inline std::string format_report(const VerificationReport& report) {
  std::string out;
  for (const VerificationCheck& check : report.checks) {
    char line[160];
    if (check.status == CheckStatus::skipped) {
      std::snprintf(line, sizeof(line), "[skip] %-30s %s\n",
                    check.name.c_str(), check.note.c_str());
    } else {
      std::snprintf(line, sizeof(line), "[%s] %-30s max dev %.3e  tol %.3e%s%s\n",
                    check.status == CheckStatus::pass ? "pass" : "FAIL",
                    check.name.c_str(), check.max_deviation, check.tolerance,
                    check.note.empty() ? "" : "  ",
                    check.note.c_str());
    }
    out += line;
  }
  out += report.overall_pass() ? "overall: pass\n" : "overall: FAIL\n";
  return out;
}

}  // namespace netres

#endif  // NETRES_VERIFY_HPP
