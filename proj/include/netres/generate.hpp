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

#ifndef NETRES_GENERATE_HPP
#define NETRES_GENERATE_HPP

#include <string>
#include <vector>

#include "netres/error.hpp"
#include "netres/network.hpp"

namespace netres {

namespace detail {

inline void require_positive(double c, const char* what) {
  if (!(c > 0.0)) {
    throw Error(Errc::non_positive_conductance,
                std::string(what) + " conductance " + std::to_string(c));
  }
}

inline std::vector<VertexId> numbered_labels(const char* prefix, int count,
                                             int first = 0) {
  std::vector<VertexId> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    labels.push_back(prefix + std::to_string(first + i));
  }
  return labels;
}

}  // namespace detail

/// Path on `size` vertices v0, ..., v{size-1} with uniform conductance.
inline Network path_network(int size, double conductance) {
  if (size < 2) throw Error(Errc::bad_size, "path needs >= 2 vertices");
  detail::require_positive(conductance, "path");
  std::vector<EdgeSpec> edges;
  for (int i = 0; i + 1 < size; ++i) {
    edges.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1),
                     conductance});
  }
  return Network::create(detail::numbered_labels("v", size), edges);
}

/// Cycle on `size` vertices with uniform conductance.
inline Network cycle_network(int size, double conductance) {
  if (size < 3) throw Error(Errc::bad_size, "cycle needs >= 3 vertices");
  detail::require_positive(conductance, "cycle");
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < size; ++i) {
    edges.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % size),
                     conductance});
  }
  return Network::create(detail::numbered_labels("v", size), edges);
}

/// Complete graph on `size` vertices with uniform conductance.
inline Network complete_network(int size, double conductance) {
  if (size < 3) throw Error(Errc::bad_size, "complete graph needs >= 3 vertices");
  detail::require_positive(conductance, "complete");
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      edges.push_back({"v" + std::to_string(i), "v" + std::to_string(j),
                       conductance});
    }
  }
  return Network::create(detail::numbered_labels("v", size), edges);
}

/// Wheel with hub x0 joined by spokes of conductance `spoke` to the rim cycle
/// x1, ..., x{rim_size} of conductance `rim`. Edge order is spokes first, then
/// rim edges, each in increasing index order.
inline Network wheel_network(int rim_size, double spoke, double rim) {
  if (rim_size < 3) throw Error(Errc::bad_size, "wheel needs rim >= 3");
  detail::require_positive(spoke, "spoke");
  detail::require_positive(rim, "rim");
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= rim_size; ++i) {
    edges.push_back({"x0", "x" + std::to_string(i), spoke});
  }
  for (int i = 1; i <= rim_size; ++i) {
    edges.push_back({"x" + std::to_string(i),
                     "x" + std::to_string(i % rim_size + 1), rim});
  }
  return Network::create(detail::numbered_labels("x", rim_size + 1), edges);
}

}  // namespace netres

#endif  // NETRES_GENERATE_HPP
