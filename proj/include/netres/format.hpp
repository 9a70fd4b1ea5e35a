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

#ifndef NETRES_FORMAT_HPP
#define NETRES_FORMAT_HPP

#include <cstdio>
#include <string>

namespace netres {

/// Fixed 12-significant-digit rendering used for all scalar and matrix
/// console output, keeping trailing zeros so output width is stable.
inline std::string format_significant(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%#.12g", value);
  return buffer;
}

}  // namespace netres

#endif  // NETRES_FORMAT_HPP
