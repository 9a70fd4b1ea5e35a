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

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "netres/netres.hpp"

namespace {

using namespace netres;

std::string csv_matrix(const KernelMatrix& kernel) {
  std::string out;
  for (const VertexId& label : kernel.labels()) {
    out += ',';
    out += label;
  }
  out += '\n';
  for (int i = 0; i < kernel.size(); ++i) {
    out += kernel.labels()[static_cast<std::size_t>(i)];
    for (int j = 0; j < kernel.size(); ++j) {
      out += ',';
      out += format_significant(kernel(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string json_matrix(const KernelMatrix& kernel) {
  std::string out = "{\"labels\":[";
  for (int i = 0; i < kernel.size(); ++i) {
    if (i > 0) out += ',';
    out += nlohmann::json(kernel.labels()[static_cast<std::size_t>(i)]).dump();
  }
  out += "],\"matrix\":[";
  for (int i = 0; i < kernel.size(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (int j = 0; j < kernel.size(); ++j) {
      if (j > 0) out += ',';
      out += format_significant(kernel(i, j));
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

void print_matrix(const KernelMatrix& kernel, const std::string& format) {
  std::cout << (format == "json" ? json_matrix(kernel) : csv_matrix(kernel));
}

void print_scalar(double value, const std::string& format) {
  if (format == "json") {
    std::cout << "{\"value\":" << format_significant(value) << "}\n";
  } else {
    std::cout << format_significant(value) << "\n";
  }
}

int cmd_validate(const std::string& path) {
  const ParsedNetwork parsed = load_network(path);
  std::cout << "ok: " << parsed.network.order() << " vertices, "
            << parsed.network.size() << " edges\n";
  return 0;
}

int cmd_green(const std::string& path, const std::string& format) {
  print_matrix(green_kernel(load_network(path).network), format);
  return 0;
}

int cmd_resistance(const std::string& path, const std::string& format) {
  print_matrix(resistance_matrix(green_kernel(load_network(path).network)),
               format);
  return 0;
}

int cmd_kirchhoff(const std::string& path, const std::string& format) {
  print_scalar(kirchhoff_index(green_kernel(load_network(path).network)),
               format);
  return 0;
}

int cmd_subdivide(const std::string& path, const std::string& out) {
  const ParsedNetwork parsed = load_network(path);
  const SubdividedNetwork sub = subdivide(parsed.network, parsed.splits);
  save_network(sub.derived(), {}, out);
  std::cout << "wrote " << sub.derived().order() << " vertices, "
            << sub.derived().size() << " edges\n";
  return 0;
}

int cmd_subdiv_green(const std::string& path, const std::string& format) {
  const ParsedNetwork parsed = load_network(path);
  const SubdividedNetwork sub = subdivide(parsed.network, parsed.splits);
  const KernelMatrix base_green = green_kernel(parsed.network);
  print_matrix(
      green_subdivision(sub, base_green, green_context(sub, base_green)),
      format);
  return 0;
}

int cmd_subdiv_kirchhoff(const std::string& path, const std::string& format) {
  const ParsedNetwork parsed = load_network(path);
  const SubdividedNetwork sub = subdivide(parsed.network, parsed.splits);
  const KernelMatrix base_green = green_kernel(parsed.network);
  print_scalar(
      kirchhoff_subdivision(sub, base_green, green_context(sub, base_green)),
      format);
  return 0;
}

int cmd_verify(const std::string& path, double tol) {
  const ParsedNetwork parsed = load_network(path);
  const VerificationReport report =
      run_verification(parsed.network, parsed.splits, tol);
  std::cout << format_report(report);
  return report.overall_pass() ? 0 : 1;
}

int cmd_wheel(int rim_size, double spoke, double rim, bool subdivided) {
  const WheelSpec spec{rim_size, spoke, rim};
  const Network base = wheel_network(rim_size, spoke, rim);
  if (!subdivided) {
    const KernelMatrix closed = wheel_green(spec);
    const KernelMatrix oracle = green_kernel(base);
    const double deviation =
        (closed.matrix() - oracle.matrix()).cwiseAbs().maxCoeff();
    if (deviation > 1e-8) {
      std::cerr << "error: closed-form wheel kernel deviates from the oracle "
                   "by " << deviation << "\n";
      return 1;
    }
    print_matrix(closed, "csv");
    return 0;
  }
  const SubdividedNetwork sub = subdivide(base);
  const KernelMatrix closed = wheel_subdivision_green(spec);
  const KernelMatrix oracle = green_kernel(sub.derived());
  const double deviation =
      (closed.matrix() - oracle.matrix()).cwiseAbs().maxCoeff();
  if (deviation > 1e-8) {
    std::cerr << "error: closed-form subdivision kernel deviates from the "
                 "oracle by " << deviation << "\n";
    return 1;
  }
  const double closed_kirchhoff = wheel_subdivision_kirchhoff(spec);
  const double oracle_kirchhoff = kirchhoff_index(oracle);
  if (std::abs(closed_kirchhoff - oracle_kirchhoff) /
          std::max(1.0, std::abs(oracle_kirchhoff)) >
      1e-8) {
    std::cerr << "error: closed-form Kirchhoff index deviates from the "
                 "oracle: " << closed_kirchhoff << " vs " << oracle_kirchhoff
              << "\n";
    return 1;
  }
  print_matrix(closed, "csv");
  std::cout << "kirchhoff " << format_significant(closed_kirchhoff) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite weighted networks as electric circuits: Green "
               "kernels, effective resistances, Kirchhoff indices, and "
               "electrically compatible subdivisions"};
  app.require_subcommand(1);

  std::string file;
  std::string out;
  std::string format = "csv";
  double tol = 1e-9;
  int rim_size = 0;
  double spoke = 0.0;
  double rim = 0.0;
  bool subdivided = false;

  const auto add_file = [&file](CLI::App* cmd) {
    cmd->add_option("file", file, "network document")->required();
  };
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "Parse a network document and report its size");
  add_file(validate);

  CLI::App* green =
      app.add_subcommand("green", "Green kernel of the network");
  add_file(green);
  add_format(green);

  CLI::App* resistance = app.add_subcommand(
      "resistance", "All-pairs effective resistance matrix");
  add_file(resistance);
  add_format(resistance);

  CLI::App* kirchhoff =
      app.add_subcommand("kirchhoff", "Kirchhoff index of the network");
  add_file(kirchhoff);
  add_format(kirchhoff);

  CLI::App* subdivide_cmd = app.add_subcommand(
      "subdivide", "Write the subdivision network as a document");
  add_file(subdivide_cmd);
  subdivide_cmd->add_option("--out", out, "output path")->required();

  CLI::App* subdiv_green = app.add_subcommand(
      "subdiv-green", "Green kernel of the subdivision network, assembled "
                      "from the base kernel");
  add_file(subdiv_green);
  add_format(subdiv_green);

  CLI::App* subdiv_kirchhoff = app.add_subcommand(
      "subdiv-kirchhoff", "Kirchhoff index of the subdivision network, from "
                          "base quantities");
  add_file(subdiv_kirchhoff);
  add_format(subdiv_kirchhoff);

  CLI::App* verify = app.add_subcommand(
      "verify", "Check every closed form against the dense oracle");
  add_file(verify);
  verify->add_option("--tol", tol, "absolute tolerance");

  CLI::App* wheel = app.add_subcommand(
      "wheel", "Closed-form wheel kernels, cross-checked against the oracle");
  wheel->add_option("--n", rim_size, "rim vertex count")->required();
  wheel->add_option("--a", spoke, "spoke conductance")->required();
  wheel->add_option("--c", rim, "rim conductance")->required();
  wheel->add_flag("--subdivide", subdivided,
                  "emit the standard-subdivision kernel and Kirchhoff index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (green->parsed()) return cmd_green(file, format);
    if (resistance->parsed()) return cmd_resistance(file, format);
    if (kirchhoff->parsed()) return cmd_kirchhoff(file, format);
    if (subdivide_cmd->parsed()) return cmd_subdivide(file, out);
    if (subdiv_green->parsed()) return cmd_subdiv_green(file, format);
    if (subdiv_kirchhoff->parsed()) return cmd_subdiv_kirchhoff(file, format);
    if (verify->parsed()) return cmd_verify(file, tol);
    if (wheel->parsed()) return cmd_wheel(rim_size, spoke, rim, subdivided);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
