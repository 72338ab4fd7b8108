#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "napgeo/errors.hpp"
#include "napgeo/json_io.hpp"
#include "napgeo/scenario.hpp"
#include "napgeo/svg.hpp"
#include "napgeo/theorems.hpp"

namespace napgeo::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? at : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::vector<std::string_view> words(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto w : split(text, ' ')) {
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

}  // namespace

Triple parse_triangle(std::string_view text) {
  const auto vertices = words(text);
  if (vertices.size() != 3) {
    throw std::invalid_argument("expected three vertices \"ax,ay bx,by cx,cy\", got " +
                                std::to_string(vertices.size()));
  }
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto xy = split(vertices[i], ',');
    if (xy.size() != 2) {
      throw std::invalid_argument("vertex '" + std::string(vertices[i]) + "' is not \"x,y\"");
    }
    try {
      t[i] = Point{F3(Rat::parse(xy[0])), F3(Rat::parse(xy[1]))};
    } catch (const std::exception& e) {
      throw std::invalid_argument("vertex '" + std::string(vertices[i]) + "': " + e.what());
    }
  }
  return t;
}

int cmd_verify(std::string_view triangle, std::ostream& out, std::ostream& err) {
  Triple t;
  try {
    t = parse_triangle(triangle);
  } catch (const std::invalid_argument& e) {
    err << "verify: " << e.what() << "\n";
    return kExitUsage;
  }
  const Report report = run_all(t[0], t[1], t[2]);
  out << to_json(report).dump(2) << "\n";
  return report.all_passed ? kExitOk : kExitClaimFailed;
}

int cmd_run(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "run: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const scenario::ScriptRun run = scenario::run_script(buf.str());
  if (run.outcome) {
    std::size_t passed = 0;
    for (const auto& a : run.outcome->assertions) {
      out << "line " << a.line << ": " << (a.passed ? "PASS" : "FAIL") << ": " << a.text
          << ": " << a.details << "\n";
      passed += a.passed ? 1 : 0;
    }
    out << passed << "/" << run.outcome->assertions.size() << " assertions passed\n";
  }
  for (const auto& d : run.diagnostics) err << path << ": " << d << "\n";
  return run.status;
}

int cmd_fuzz(const fuzz::FuzzConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const fuzz::FuzzSummary summary = fuzz::run_fuzz(config);
    out << fuzz::format_summary(summary);
    return summary.failures.empty() ? kExitOk : kExitClaimFailed;
  } catch (const std::invalid_argument& e) {
    err << "fuzz: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_svg(std::string_view triangle, std::string_view layers, const std::string& path,
            std::ostream& out, std::ostream& err) {
  Triple t;
  try {
    t = parse_triangle(triangle);
  } catch (const std::invalid_argument& e) {
    err << "svg: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto selected = svg::parse_layer_set(layers);
  if (!selected) {
    err << "svg: unknown layer set '" << layers << "' (expected config, napoleon or grunbaum)\n";
    return kExitUsage;
  }
  NapoleonBundle bundle;
  try {
    bundle = build_bundle(t[0], t[1], t[2]);
  } catch (const GeometryError& e) {
    err << "svg: " << e.what() << "\n";
    return kExitClaimFailed;
  }
  const std::string doc = svg::render(svg::build_scene(bundle, *selected));
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << doc) || !file.flush()) {
    err << "svg: cannot write '" << path << "'\n";
    return kExitUsage;
  }
  out << "wrote " << path << "\n";
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Napoleon-configuration verifier over Q(sqrt 3)", "napgeo"};
  app.require_subcommand(1);

  std::string triangle;
  auto* verify = app.add_subcommand("verify", "certify every claim for one base triangle");
  verify->add_option("--triangle", triangle, "vertices as \"ax,ay bx,by cx,cy\"")->required();

  std::string script;
  auto* run_cmd = app.add_subcommand("run", "evaluate a .geo construction script");
  run_cmd->add_option("path", script, "script file")->required();

  fuzz::FuzzConfig config;
  const auto at_least_one = CLI::Validator(
      [](std::string& v) {
        const bool digits = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
        if (digits && v.find_first_not_of('0') != std::string::npos) return std::string();
        return "must be a positive integer, got '" + v + "'";
      },
      "POSITIVE");
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* fuzz_cmd = app.add_subcommand("fuzz", "run the claim suite on random triangles");
  fuzz_cmd->add_option("--trials", config.trials, "number of triangles")->check(at_least_one);
  fuzz_cmd->add_option("--seed", config.seed, "64-bit seed");
  fuzz_cmd->add_option("--bound", config.bound, "coordinate numerator/denominator bound")
      ->check(at_least_one);
  fuzz_cmd->add_option("--jobs", config.jobs, "worker threads")->check(at_least_one);

  std::string layers = "grunbaum";
  std::string svg_out;
  auto* svg_cmd = app.add_subcommand("svg", "draw the configuration as SVG");
  svg_cmd->add_option("--triangle", triangle, "vertices as \"ax,ay bx,by cx,cy\"")->required();
  svg_cmd->add_option("--layers", layers, "config, napoleon or grunbaum");
  svg_cmd->add_option("--out", svg_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (verify->parsed()) return cmd_verify(triangle, out, err);
  if (run_cmd->parsed()) return cmd_run(script, out, err);
  if (fuzz_cmd->parsed()) return cmd_fuzz(config, out, err);
  return cmd_svg(triangle, layers, svg_out, out, err);
}

}  // namespace napgeo::cli
