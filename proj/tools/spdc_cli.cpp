#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spdc/config.hpp"

namespace fs = std::filesystem;

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spdc::ConfigError("cannot open config file: " + path);
  return nlohmann::json::parse(in);
}

int run_payload(const nlohmann::json& payload, const std::string& out_dir) {
  const spdc::RunConfig config = spdc::parse_config(payload);
  const spdc::RunResult result = spdc::execute(config);

  fs::path base(out_dir);
  if (!base.empty()) fs::create_directories(base);

  const fs::path csv_path = base / config.output.csv_path;
  std::ofstream csv(csv_path);
  if (!csv) {
    std::cerr << "error: cannot write " << csv_path << "\n";
    return 1;
  }
  spdc::write_csv(csv, result.table);
  std::cout << "wrote " << csv_path.string() << "\n";

  if (!config.output.svg_path.empty()) {
    const fs::path svg_path = base / config.output.svg_path;
    std::ofstream svg(svg_path);
    if (!svg) {
      std::cerr << "error: cannot write " << svg_path << "\n";
      return 1;
    }
    const std::string y_label =
        config.kind == "state_function" ? "|chi|^2" : "V";
    spdc::write_svg_chart(svg, config.label, config.sweep.variable, y_label,
                          result.series);
    std::cout << "wrote " << svg_path.string() << "\n";
  }
  std::cout << result.summary << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type-II SPDC interference simulator"};
  app.require_subcommand(1);

  std::string config_path, preset, out_dir;

  CLI::App* run = app.add_subcommand("run", "evaluate a sweep");
  run->add_option("config", config_path, "JSON config file");
  run->add_option("--preset", preset, "built-in configuration name");
  run->add_option("--out", out_dir, "output directory (default: cwd)");

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("validate", "check a config without running it");
  validate->add_option("config", validate_path, "JSON config file")
      ->required();

  app.add_subcommand("list-presets", "print built-in configuration names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (config_path.empty() == preset.empty()) {
        std::cerr << "error: pass exactly one of <config> or --preset\n";
        return 2;
      }
      const nlohmann::json payload = preset.empty()
                                         ? load_json(config_path)
                                         : spdc::preset_payload(preset);
      return run_payload(payload, out_dir);
    }
    if (validate->parsed()) {
      const auto problems = spdc::validate_config(load_json(validate_path));
      if (problems.empty()) {
        std::cout << "ok\n";
        return 0;
      }
      for (const auto& p : problems) std::cerr << p << "\n";
      return 1;
    }
    for (const auto& name : spdc::preset_names()) std::cout << name << "\n";
    return 0;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
