// Copyright 2026 The ratsep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/svg.hpp"
#include "ratsep/errors.hpp"
#include "ratsep/separation.hpp"

namespace ratsep::cli {
namespace {

using json::Json;

constexpr const char* kUsage =
    "usage: ratsep <command> [options]\n"
    "\n"
    "commands:\n"
    "  separate        rational halfspace separating --point from the set, with trace\n"
    "  verify          check a certificate against the set and point\n"
    "  approximate     outer approximation from the instance probes\n"
    "  counterexample  rational direction parallel to a normal, if any\n"
    "  plot            render set, cuts and point as SVG\n"
    "\n"
    "options: --instance <path> --point \"[x,y]\" --certificate <path> --budget N\n"
    "         --max-den N --grid <json> --out <path>\n";

struct Options {
  std::string instance_path;
  std::string point;
  std::string certificate_path;
  std::string grid;
  std::string out_path;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> max_den;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

Json parse_json_text(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Instance load_instance(const Options& opts) {
  if (opts.instance_path.empty()) throw ParseError("--instance is required");
  Instance inst = instance_from_json(read_json_file(opts.instance_path));
  const long k = json::field_of(inst.set);
  if (!opts.point.empty()) inst.point = json::vector_from_json(parse_json_text(opts.point, "--point"), k);
  if (!opts.certificate_path.empty()) {
    inst.certificate = json::certificate_from_json(read_json_file(opts.certificate_path));
  }
  if (opts.budget) inst.budget = opts.budget;
  if (opts.max_den) inst.max_den = opts.max_den;
  if (!opts.grid.empty()) inst.grid = json::grid_from_json(parse_json_text(opts.grid, "--grid"));
  return inst;
}

const Vector& require_point(const Instance& inst) {
  if (!inst.point) throw ParseError("a query point is required (--point or \"point\")");
  if (inst.point->dim() != inst.set.dim()) throw ParseError("point dimension differs from set");
  return *inst.point;
}

Json cmd_separate(const Instance& inst) {
  const Vector& y = require_point(inst);
  SeparationResult result = separate(inst.set, y);
  Json out{{"certificate", json::to_json(result.certificate)},
           {"trace", json::to_json(result.trace)}};
  if (inst.max_den && inst.set.dim() == 2) {
    auto oracle = brute_force_separator(inst.set, y, *inst.max_den);
    out["oracle"] = oracle ? json::to_json(*oracle) : Json(nullptr);
  }
  return out;
}

Json cmd_verify(const Instance& inst) {
  const Vector& y = require_point(inst);
  if (!inst.certificate) throw ParseError("a certificate is required (--certificate or \"certificate\")");
  if (inst.certificate->a.dim() != inst.set.dim()) throw ParseError("certificate dimension differs from set");
  return Json{{"valid", verify_certificate(inst.set, y, *inst.certificate)}};
}

Json cmd_approximate(const Instance& inst) {
  for (const Vector& p : inst.probes) {
    if (p.dim() != inst.set.dim()) throw ParseError("probe dimension differs from set");
  }
  const std::size_t budget = inst.budget.value_or(inst.probes.size());
  OuterApprox approx = outer_approximate(inst.set, inst.probes, budget);
  Json out = json::to_json(approx);
  out["excess"] = nullptr;
  if (inst.grid && inst.set.dim() == 2) out["excess"] = json::to_json(excess_measure(inst.set, approx, *inst.grid));
  return out;
}

Json cmd_counterexample(const std::optional<Vector>& normal) {
  Vector a = normal ? *normal : Vector{Surd(1), Surd::root(2)};
  std::optional<Vector> c = rational_parallel_direction(a);
  return Json{{"normal", json::to_json(a)},
              {"rational_direction", c ? json::to_json(*c) : Json(nullptr)},
              {"contained_in_rational_halfspace", c.has_value()}};
}

Json cmd_plot(const Instance& inst, const std::string& out_path) {
  std::vector<Certificate> cuts = inst.cuts;
  if (inst.certificate) cuts.push_back(*inst.certificate);
  std::string svg = render_svg(inst.set, cuts, inst.point);
  const std::string path = out_path.empty() ? "ratsep.svg" : out_path;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << svg;
  return Json{{"svg", path}};
}

}  // namespace

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (!j.contains("set")) {
    if (j.contains("vertices")) return Instance(json::polyhedron_from_json(j));
    throw ParseError("instance has no \"set\"");
  }
  Instance inst(json::polyhedron_from_json(j["set"]));
  const long k = json::field_of(inst.set);
  if (j.contains("point") && !j["point"].is_null()) inst.point = json::vector_from_json(j["point"], k);
  if (j.contains("probes")) {
    if (!j["probes"].is_array()) throw ParseError("\"probes\" must be an array");
    for (const Json& p : j["probes"]) inst.probes.push_back(json::vector_from_json(p, k));
  }
  if (j.contains("certificate") && !j["certificate"].is_null()) {
    inst.certificate = json::certificate_from_json(j["certificate"]);
  }
  if (j.contains("cuts")) inst.cuts = json::outer_approx_from_json(j).cuts;
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) throw ParseError("\"options\" must be an object");
    auto count = [&](const char* key) -> std::optional<std::size_t> {
      if (!o.contains(key)) return std::nullopt;
      if (!o[key].is_number_unsigned() || o[key].get<std::size_t>() == 0) {
        throw ParseError(std::string("option '") + key + "' must be a positive integer");
      }
      return o[key].get<std::size_t>();
    };
    inst.budget = count("budget");
    inst.max_den = count("max_den");
    if (o.contains("grid")) inst.grid = json::grid_from_json(o["grid"]);
  }
  return inst;
}

Json to_json(const Instance& inst) {
  Json j{{"set", json::to_json(inst.set)}};
  if (inst.point) j["point"] = json::to_json(*inst.point);
  if (!inst.probes.empty()) {
    Json probes = Json::array();
    for (const Vector& p : inst.probes) probes.push_back(json::to_json(p));
    j["probes"] = std::move(probes);
  }
  if (inst.certificate) j["certificate"] = json::to_json(*inst.certificate);
  if (!inst.cuts.empty()) j["cuts"] = json::to_json(OuterApprox{inst.cuts, {}})["cuts"];
  Json options = Json::object();
  if (inst.budget) options["budget"] = *inst.budget;
  if (inst.max_den) options["max_den"] = *inst.max_den;
  if (inst.grid) options["grid"] = json::to_json(*inst.grid);
  if (!options.empty()) j["options"] = std::move(options);
  return j;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kCommands = {"separate", "verify", "approximate",
                                                     "counterexample", "plot"};
  if (args.empty() || std::find(kCommands.begin(), kCommands.end(), args[0]) == kCommands.end()) {
    if (!args.empty()) err << "unknown command '" << args[0] << "'\n";
    err << kUsage;
    return kExitUsage;
  }
  const std::string& command = args[0];

  Options opts;
  CLI::App app("ratsep " + command, "ratsep " + command);
  app.add_option("--instance", opts.instance_path, "instance JSON file");
  app.add_option("--point", opts.point, "query point as a JSON array");
  app.add_option("--certificate", opts.certificate_path, "certificate JSON file");
  app.add_option("--budget", opts.budget, "maximum number of cuts")->check(CLI::PositiveNumber);
  app.add_option("--max-den", opts.max_den, "denominator bound for the brute-force oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", opts.grid, "grid as JSON {\"min\",\"max\",\"step\"}");
  app.add_option("--out", opts.out_path, "output path for plot");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);  // CLI11 wants reversed
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    Json result;
    if (command == "counterexample") {
      std::optional<Vector> normal;
      if (!opts.instance_path.empty()) {
        Json j = read_json_file(opts.instance_path);
        if (j.contains("point")) normal = json::vector_from_json(j["point"]);
      }
      if (!opts.point.empty()) normal = json::vector_from_json(parse_json_text(opts.point, "--point"));
      result = cmd_counterexample(normal);
    } else {
      Instance inst = load_instance(opts);
      if (command == "separate") result = cmd_separate(inst);
      if (command == "verify") result = cmd_verify(inst);
      if (command == "approximate") result = cmd_approximate(inst);
      if (command == "plot") result = cmd_plot(inst, opts.out_path);
    }
    out << result.dump(2) << "\n";
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
}

}  // namespace ratsep::cli
