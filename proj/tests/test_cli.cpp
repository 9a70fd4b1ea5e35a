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

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace netres;
using netres::testing::run_cli;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir =
      std::filesystem::temp_directory_path() / "netres_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string k3_document() {
  return write_network(complete_network(3, 1.0));
}

}  // namespace

TEST_CASE("validate reports size and exit zero") {
  const std::string path = write_file("k3.json", k3_document());
  std::string output;
  CHECK(run_cli("validate " + path, &output) == 0);
  CHECK(output == "ok: 3 vertices, 3 edges\n");
}

TEST_CASE("input errors exit with code two") {
  CHECK(run_cli("validate " + (scratch_dir() / "missing.json").string()) == 2);
  const std::string bad = write_file("bad.json", "{\"vertices\":");
  CHECK(run_cli("validate " + bad) == 2);
  const std::string unknown = write_file(
      "unknown.json",
      R"({"vertices":["x","y"],"edges":[{"u":"x","v":"y","c":1}],"zz":0})");
  CHECK(run_cli("validate " + unknown) == 2);
  CHECK(run_cli("nonsense") == 2);
  CHECK(run_cli("wheel --n 2 --a 1 --c 1") == 2);
}

TEST_CASE("kirchhoff prints twelve significant digits") {
  const std::string path = write_file("k3.json", k3_document());
  std::string output;
  CHECK(run_cli("kirchhoff " + path, &output) == 0);
  CHECK(output == "2.00000000000\n");
}

TEST_CASE("green emits a labeled csv matrix") {
  const std::string path = write_file(
      "w3.json", write_network(wheel_network(3, 1.0, 1.0)));
  std::string output;
  CHECK(run_cli("green " + path, &output) == 0);
  CHECK(output.substr(0, output.find('\n')) == ",x0,x1,x2,x3");
  CHECK(output.find("x0,0.187500000000") != std::string::npos);
}

TEST_CASE("resistance of a single edge") {
  const std::string path = write_file(
      "edge.json",
      R"({"vertices":["x","y"],"edges":[{"u":"x","v":"y","c":1.0}]})");
  std::string output;
  CHECK(run_cli("resistance " + path, &output) == 0);
  CHECK(output.find("x,0.00000000000,1.00000000000") != std::string::npos);
}

TEST_CASE("json format parses and carries subdivision labels") {
  const std::string path = write_file("k3.json", k3_document());
  std::string output;
  CHECK(run_cli("subdiv-green " + path + " --format json", &output) == 0);
  const nlohmann::json doc = nlohmann::json::parse(output);
  CHECK(doc["labels"].size() == 6);
  CHECK(doc["labels"][3].get<std::string>().find("s(") == 0);
  CHECK(doc["matrix"].size() == 6);
}

TEST_CASE("subdivide writes a document that reproduces the derived network") {
  const Network base = complete_network(3, 1.0);
  const SplitMap splits{{{"v0", "v1"}, 0.3}};
  const std::string path = write_file("k3s.json", write_network(base, splits));
  const std::string out_a = (scratch_dir() / "k3s_out_a.json").string();
  const std::string out_b = (scratch_dir() / "k3s_out_b.json").string();

  std::string first;
  std::string second;
  CHECK(run_cli("subdivide " + path + " --out " + out_a, &first) == 0);
  CHECK(run_cli("subdivide " + path + " --out " + out_b, &second) == 0);
  CHECK(first == second);
  CHECK(read_file(out_a) == read_file(out_b));

  const ParsedNetwork reparsed = load_network(out_a);
  const SubdividedNetwork sub = subdivide(base, splits);
  const Network& derived = sub.derived();
  REQUIRE(reparsed.network.order() == derived.order());
  CHECK(reparsed.network.vertices() == derived.vertices());
  for (int e = 0; e < derived.size(); ++e) {
    const WeightedEdge& expected = derived.edges()[static_cast<std::size_t>(e)];
    const WeightedEdge& got =
        reparsed.network.edges()[static_cast<std::size_t>(e)];
    CHECK(got.u == expected.u);
    CHECK(got.v == expected.v);
    CHECK(got.conductance == expected.conductance);
  }
}

TEST_CASE("subdiv-kirchhoff on the triangle") {
  const std::string path = write_file("k3.json", k3_document());
  std::string output;
  CHECK(run_cli("subdiv-kirchhoff " + path, &output) == 0);
  CHECK(output == "8.75000000000\n");
}

TEST_CASE("verify exit codes honor the report") {
  const std::string path = write_file("k3.json", k3_document());
  std::string output;
  CHECK(run_cli("verify " + path, &output) == 0);
  CHECK(output.find("overall: pass") != std::string::npos);
  CHECK(run_cli("verify " + path + " --tol 1e-18", &output) == 1);
  CHECK(output.find("overall: FAIL") != std::string::npos);
  CHECK(run_cli("verify " + (scratch_dir() / "missing.json").string()) == 2);
}

TEST_CASE("verify reports skipped corollaries on random splits") {
  std::mt19937_64 rng(59);
  const auto random = netres::testing::random_network(rng, 10);
  const std::string path =
      write_file("random.json", write_network(random.network, random.splits));
  std::string output;
  CHECK(run_cli("verify " + path, &output) == 0);
  CHECK(output.find("hypotheses not met") != std::string::npos);
}

TEST_CASE("wheel command emits kernel and kirchhoff line") {
  std::string output;
  CHECK(run_cli("wheel --n 3 --a 1 --c 1", &output) == 0);
  CHECK(output.find("x0,0.187500000000") != std::string::npos);

  CHECK(run_cli("wheel --n 3 --a 1 --c 1 --subdivide", &output) == 0);
  CHECK(output.find("kirchhoff 24.7500000000") != std::string::npos);
  CHECK(output.find("s(x0|x1)") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string path = write_file(
      "w4.json", write_network(wheel_network(4, 0.5, 2.0)));
  std::string first;
  std::string second;
  CHECK(run_cli("green " + path, &first) == 0);
  CHECK(run_cli("green " + path, &second) == 0);
  CHECK(first == second);
  CHECK(run_cli("verify " + path, &first) == 0);
  CHECK(run_cli("verify " + path, &second) == 0);
  CHECK(first == second);
}

TEST_CASE("bundled sample documents validate") {
  CHECK(run_cli(std::string("validate ") + NET_DATA_DIR + "/k3.json") == 0);
  CHECK(run_cli(std::string("validate ") + NET_DATA_DIR + "/wheel5.json") == 0);
  CHECK(run_cli(std::string("validate ") + NET_DATA_DIR +
                "/path4_splits.json") == 0);
  CHECK(run_cli(std::string("verify ") + NET_DATA_DIR + "/wheel5.json") == 0);
}
