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

#ifndef NETRES_TESTS_SUPPORT_HPP
#define NETRES_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifdef NET_CLI_PATH
#include <sys/wait.h>
#endif

#include "netres/netres.hpp"

namespace netres::testing {

/// Runs f, which must throw Error, and returns the thrown code.
template <class F>
Errc error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error");
}

// Raw-bits uniforms: identical streams on every platform for a given seed.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform_in(rng, std::log(lo), std::log(hi)));
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() %
                               static_cast<std::uint64_t>(hi - lo + 1));
}

struct RandomNetwork {
  Network network;
  SplitMap splits;
};

/// Random connected network: a random attachment tree plus extra random
/// edges, conductances log-uniform in [0.1, 10], per-edge splits uniform in
/// [0.05, 0.95].
inline RandomNetwork random_network(std::mt19937_64& rng, int max_order = 30) {
  const int n = uniform_int(rng, 2, max_order);
  std::vector<VertexId> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));

  std::set<std::pair<int, int>> used;
  std::vector<EdgeSpec> edges;
  const auto add_edge = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == j || !used.insert({i, j}).second) return;
    edges.push_back({labels[static_cast<std::size_t>(i)],
                     labels[static_cast<std::size_t>(j)],
                     log_uniform(rng, 0.1, 10.0)});
  };
  for (int i = 1; i < n; ++i) add_edge(uniform_int(rng, 0, i - 1), i);
  const int extras = uniform_int(rng, 0, 2 * n);
  for (int k = 0; k < extras; ++k) {
    add_edge(uniform_int(rng, 0, n - 1), uniform_int(rng, 0, n - 1));
  }

  RandomNetwork out{Network::create(std::move(labels), edges), {}};
  for (const WeightedEdge& e : out.network.edges()) {
    out.splits.emplace(
        std::make_pair(out.network.label(e.u), out.network.label(e.v)),
        uniform_in(rng, 0.05, 0.95));
  }
  return out;
}

#ifdef NET_CLI_PATH
/// Runs the CLI with the given argument string, capturing stdout and stderr
/// merged; returns the exit code.
inline int run_cli(const std::string& args, std::string* captured = nullptr) {
  const std::string command = std::string(NET_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string text;
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    text.append(buffer, got);
  }
  const int status = ::pclose(pipe);
  if (captured != nullptr) *captured = std::move(text);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

}  // namespace netres::testing

#endif  // NETRES_TESTS_SUPPORT_HPP
