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

#ifndef NETRES_ERROR_HPP
#define NETRES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace netres {

/// Failure categories raised by validation and numerical routines.
enum class Errc {
  bad_label,
  duplicate_vertex,
  loop_edge,
  duplicate_edge,
  non_positive_conductance,
  disconnected,
  unknown_vertex,
  unknown_edge,
  bad_size,
  domain_mismatch,
  dimension_mismatch,
  not_orthogonal_to_ones,
  solve_failure,
  split_out_of_range,
  not_regular,
  not_unit_conductance,
  negative_index,
  index_below_minus_one,
  index_out_of_range,
  parse_error,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::bad_label: return "bad_label";
    case Errc::duplicate_vertex: return "duplicate_vertex";
    case Errc::loop_edge: return "loop_edge";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::non_positive_conductance: return "non_positive_conductance";
    case Errc::disconnected: return "disconnected";
    case Errc::unknown_vertex: return "unknown_vertex";
    case Errc::unknown_edge: return "unknown_edge";
    case Errc::bad_size: return "bad_size";
    case Errc::domain_mismatch: return "domain_mismatch";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::not_orthogonal_to_ones: return "not_orthogonal_to_ones";
    case Errc::solve_failure: return "solve_failure";
    case Errc::split_out_of_range: return "split_out_of_range";
    case Errc::not_regular: return "not_regular";
    case Errc::not_unit_conductance: return "not_unit_conductance";
    case Errc::negative_index: return "negative_index";
    case Errc::index_below_minus_one: return "index_below_minus_one";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

/// Exception carrying an Errc plus a message naming the offending element.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace netres

#endif  // NETRES_ERROR_HPP
