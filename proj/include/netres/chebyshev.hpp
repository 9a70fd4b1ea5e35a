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

#ifndef NETRES_CHEBYSHEV_HPP
#define NETRES_CHEBYSHEV_HPP

#include <string>

#include "netres/error.hpp"

namespace netres {

/// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x,
/// T_m = 2x T_{m-1} - T_{m-2}. Evaluated by the upward recurrence, which is
/// stable for the arguments x >= 1 arising from conductance ratios.
inline double chebyshev_t(int m, double x) {
  if (m < 0) {
    throw Error(Errc::negative_index,
                "chebyshev_t expects m >= 0, got " + std::to_string(m));
  }
  if (m == 0) return 1.0;
  double previous = 1.0;
  double current = x;
  for (int i = 2; i <= m; ++i) {
    const double next = 2.0 * x * current - previous;
    previous = current;
    current = next;
  }
  return current;
}

/// Chebyshev polynomial of the second kind, extended to m = -1:
/// U_{-1} = 0, U_0 = 1, U_m = 2x U_{m-1} - U_{m-2}.
inline double chebyshev_u(int m, double x) {
  if (m < -1) {
    throw Error(Errc::index_below_minus_one,
                "chebyshev_u expects m >= -1, got " + std::to_string(m));
  }
  if (m == -1) return 0.0;
  if (m == 0) return 1.0;
  double previous = 1.0;
  double current = 2.0 * x;
  for (int i = 2; i <= m; ++i) {
    const double next = 2.0 * x * current - previous;
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace netres

#endif  // NETRES_CHEBYSHEV_HPP
