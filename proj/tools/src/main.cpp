#include <iostream>

#include <CLI11.hpp>

#include "fluct/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fluctuation-induced energies of polarizable atoms"};
  app.set_version_flag("--version", fluct::cli::version);
  app.require_subcommand(1);

  fluct::cli::RunOptions options;
  std::string format = "csv";
  auto* run = app.add_subcommand("run", "evaluate a config file");
  run->add_option("--config", options.config_path, "JSON config")->required()->check(CLI::ExistingFile);
  run->add_option("--output", options.output_path, "output path, or - for stdout")->capture_default_str();
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run->add_flag("--strict", options.strict, "exit 2 on validity warnings");
  run->add_flag("--fit-slope", options.fit_slope, "add a log-log slope column to scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  options.format = format == "json" ? fluct::cli::Format::json : fluct::cli::Format::csv;
  return fluct::cli::run(options, std::cerr);
}
