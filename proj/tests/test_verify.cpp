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
#include <string>

#include "support.hpp"

using namespace netres;
using netres::testing::random_network;

namespace {

const VerificationCheck& find_check(const VerificationReport& report,
                                    const std::string& name) {
  for (const VerificationCheck& check : report.checks) {
    if (check.name == name) return check;
  }
  throw std::logic_error("missing check " + name);
}

}  // namespace

TEST_CASE("triangle with default splits passes every applicable check") {
  const Network net = complete_network(3, 1.0);
  const VerificationReport report = run_verification(net, {});
  CHECK(report.overall_pass());
  CHECK(find_check(report, "thm-2.1-poisson-reduction").status ==
        CheckStatus::pass);
  CHECK(find_check(report, "prop-3.1-green-kernel").status ==
        CheckStatus::pass);
  CHECK(find_check(report, "cor-3.2-green-standard-regular").status ==
        CheckStatus::pass);
  CHECK(find_check(report, "thm-4.1-resistance").status == CheckStatus::pass);
  CHECK(find_check(report, "cor-4.2-resistance-standard").status ==
        CheckStatus::pass);
  CHECK(find_check(report, "thm-4.3-kirchhoff").status == CheckStatus::pass);
  CHECK(find_check(report, "cor-4.4-kirchhoff-standard").status ==
        CheckStatus::pass);
  // a triangle is no wheel: the rim would need three vertices
  CHECK(find_check(report, "prop-5.1-wheel-green").status ==
        CheckStatus::skipped);
  CHECK(find_check(report, "cor-5.2-wheel-kirchhoff").status ==
        CheckStatus::skipped);
}

TEST_CASE("random splits skip the standard-subdivision corollaries") {
  std::mt19937_64 rng(53);
  const auto random = random_network(rng, 10);
  const VerificationReport report =
      run_verification(random.network, random.splits);
  CHECK(report.overall_pass());
  CHECK(find_check(report, "thm-2.1-poisson-reduction").status ==
        CheckStatus::pass);
  CHECK(find_check(report, "prop-3.1-green-kernel").status ==
        CheckStatus::pass);
  CHECK(find_check(report, "thm-4.1-resistance").status == CheckStatus::pass);
  CHECK(find_check(report, "thm-4.3-kirchhoff").status == CheckStatus::pass);
  const VerificationCheck& skipped =
      find_check(report, "cor-4.2-resistance-standard");
  CHECK(skipped.status == CheckStatus::skipped);
  CHECK(skipped.note.find("hypotheses not met") != std::string::npos);
}

TEST_CASE("wheel input activates the wheel checks") {
  const Network wheel = wheel_network(3, 1.0, 1.0);
  const VerificationReport report = run_verification(wheel, {});
  CHECK(report.overall_pass());
  CHECK(find_check(report, "prop-5.1-wheel-green").status ==
        CheckStatus::pass);
  const VerificationCheck& kirchhoff =
      find_check(report, "cor-5.2-wheel-kirchhoff");
  CHECK(kirchhoff.status == CheckStatus::pass);
  CHECK(kirchhoff.note.find("24.7500000000") != std::string::npos);
}

TEST_CASE("wheel detection is structural, not label-based") {
  // W_4 with hub listed last and scrambled rim labels
  const Network wheel = Network::create(
      {"rimB", "rimA", "rimD", "rimC", "hub"},
      {{"hub", "rimA", 2.0},
       {"hub", "rimB", 2.0},
       {"hub", "rimC", 2.0},
       {"hub", "rimD", 2.0},
       {"rimA", "rimB", 0.5},
       {"rimB", "rimC", 0.5},
       {"rimC", "rimD", 0.5},
       {"rimD", "rimA", 0.5}});
  const VerificationReport report = run_verification(wheel, {});
  CHECK(report.overall_pass());
  CHECK(find_check(report, "prop-5.1-wheel-green").status ==
        CheckStatus::pass);
  CHECK(find_check(report, "cor-5.2-wheel-kirchhoff").status ==
        CheckStatus::pass);
}

TEST_CASE("wheel with nonstandard splits skips the wheel checks") {
  const Network wheel = wheel_network(3, 1.0, 1.0);
  const VerificationReport report =
      run_verification(wheel, {{{"x0", "x1"}, 0.25}});
  CHECK(report.overall_pass());
  CHECK(find_check(report, "prop-5.1-wheel-green").status ==
        CheckStatus::skipped);
  CHECK(find_check(report, "cor-3.2-green-standard-regular").status ==
        CheckStatus::skipped);
}

TEST_CASE("impossible tolerance fails the report") {
  const Network net = complete_network(3, 1.0);
  const VerificationReport report = run_verification(net, {}, 1e-18);
  CHECK_FALSE(report.overall_pass());
  const std::string text = format_report(report);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("report formatting is deterministic") {
  // W_3 with unit conductances is K_4: regular, unit, and a wheel, so no
  // check is skipped
  const Network wheel = wheel_network(3, 1.0, 1.0);
  const std::string first = format_report(run_verification(wheel, {}));
  const std::string second = format_report(run_verification(wheel, {}));
  CHECK(first == second);
  CHECK(first.find("overall: pass") != std::string::npos);
  CHECK(first.find("[skip]") == std::string::npos);
}
