#include <CLI11.hpp>

#include "pburgers_cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Spectral solver and verification lab for time-periodic forced Burgers"};
  app.require_subcommand(1);
  std::string config;
  std::string out = ".";
  for (const auto& name : pburgers::cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "run configuration (JSON)")->required();
    sub->add_option("--out", out, "output directory")->capture_default_str();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : pburgers::cli::kInputError;
  }
  return pburgers::cli::run_command(app.get_subcommands().front()->get_name(), config, out);
}
