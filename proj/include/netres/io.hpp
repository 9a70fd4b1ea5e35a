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

#ifndef NETRES_IO_HPP
#define NETRES_IO_HPP

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "netres/error.hpp"
#include "netres/network.hpp"
#include "netres/subdivision.hpp"

namespace netres {

/// Result of parsing a network document: the network plus the per-edge
/// splits that were stated explicitly, keyed canonically.
struct ParsedNetwork {
  Network network;
  SplitMap splits;
};

namespace detail {

inline void require_fields(const nlohmann::json& object,
                           const std::vector<std::string>& known,
                           const std::string& where) {
  for (const auto& item : object.items()) {
    bool found = false;
    for (const std::string& name : known) {
      if (item.key() == name) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(Errc::parse_error,
                  "unknown field '" + item.key() + "' in " + where);
    }
  }
}

inline const nlohmann::json& require_member(const nlohmann::json& object,
                                            const std::string& name,
                                            const std::string& where) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw Error(Errc::parse_error,
                "missing field '" + name + "' in " + where);
  }
  return *it;
}

inline std::string require_string(const nlohmann::json& value,
                                  const std::string& where) {
  if (!value.is_string()) {
    throw Error(Errc::parse_error, where + " must be a string");
  }
  return value.get<std::string>();
}

inline double require_number(const nlohmann::json& value,
                             const std::string& where) {
  if (!value.is_number()) {
    throw Error(Errc::parse_error, where + " must be a number");
  }
  return value.get<double>();
}

}  // namespace detail

/// Parses a network document:
///   {"vertices": [label, ..],
///    "edges": [{"u": label, "v": label, "c": number, "split": number?}, ..]}
/// Unknown fields anywhere in the document are rejected. The optional split
/// lies in (0,1) and is measured from the edge's u endpoint; it is stored
/// canonically, so a flipped endpoint order stores 1 - split.
inline ParsedNetwork parse_network(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(Errc::parse_error, ex.what());
  }
  if (!doc.is_object()) {
    throw Error(Errc::parse_error, "document must be a JSON object");
  }
  detail::require_fields(doc, {"vertices", "edges"}, "network document");

  const nlohmann::json& vertex_list =
      detail::require_member(doc, "vertices", "network document");
  if (!vertex_list.is_array()) {
    throw Error(Errc::parse_error, "'vertices' must be an array");
  }
  std::vector<VertexId> vertices;
  vertices.reserve(vertex_list.size());
  for (const auto& value : vertex_list) {
    vertices.push_back(detail::require_string(value, "vertex label"));
  }

  const nlohmann::json& edge_list =
      detail::require_member(doc, "edges", "network document");
  if (!edge_list.is_array()) {
    throw Error(Errc::parse_error, "'edges' must be an array");
  }
  std::vector<EdgeSpec> edges;
  SplitMap splits;
  edges.reserve(edge_list.size());
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const nlohmann::json& record = edge_list[i];
    const std::string where = "edge record " + std::to_string(i);
    if (!record.is_object()) {
      throw Error(Errc::parse_error, where + " must be an object");
    }
    detail::require_fields(record, {"u", "v", "c", "split"}, where);
    EdgeSpec spec;
    spec.u = detail::require_string(detail::require_member(record, "u", where),
                                    where + " field 'u'");
    spec.v = detail::require_string(detail::require_member(record, "v", where),
                                    where + " field 'v'");
    spec.conductance = detail::require_number(
        detail::require_member(record, "c", where), where + " field 'c'");
    edges.push_back(spec);
    auto it = record.find("split");
    if (it != record.end()) {
      const double t =
          detail::require_number(*it, where + " field 'split'");
      if (!(t > 0.0 && t < 1.0)) {
        throw Error(Errc::split_out_of_range,
                    "split " + std::to_string(t) + " on edge (" + spec.u +
                        "," + spec.v + ") lies outside (0,1)");
      }
      splits.insert_or_assign({spec.u, spec.v}, t);
    }
  }

  ParsedNetwork out{
      Network::create(std::move(vertices), edges, LabelPolicy::generated), {}};
  out.splits = normalize_splits(out.network, splits);
  return out;
}

/// Reads and parses the document at path.
inline ParsedNetwork load_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

/// Network document for a network and (optionally) explicit splits, with
/// vertices and edges in stored order and canonical endpoint orientation.
inline nlohmann::ordered_json network_document(const Network& net,
                                               const SplitMap& splits = {}) {
  const SplitMap canonical = normalize_splits(net, splits);
  nlohmann::ordered_json doc;
  doc["vertices"] = net.vertices();
  nlohmann::ordered_json edge_list = nlohmann::ordered_json::array();
  for (const WeightedEdge& e : net.edges()) {
    nlohmann::ordered_json record;
    record["u"] = net.label(e.u);
    record["v"] = net.label(e.v);
    record["c"] = e.conductance;
    auto it = canonical.find({net.label(e.u), net.label(e.v)});
    if (it != canonical.end()) {
      record["split"] = it->second;
    }
    edge_list.push_back(std::move(record));
  }
  doc["edges"] = std::move(edge_list);
  return doc;
}

/// Serialized network document, two-space indented with a trailing newline.
inline std::string write_network(const Network& net,
                                 const SplitMap& splits = {}) {
  return network_document(net, splits).dump(2) + "\n";
}

/// Writes the serialized document to path.
inline void save_network(const Network& net, const SplitMap& splits,
                         const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(Errc::parse_error, "cannot open file '" + path + "' for writing");
  }
  out << write_network(net, splits);
}

}  // namespace netres

#endif  // NETRES_IO_HPP
