#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "balrig/cli.hpp"
#include "balrig/errors.hpp"
#include "balrig/io.hpp"

int main(int argc, char** argv) {
  using balrig::cli::CommandConfig;
  CommandConfig config;
  CLI::App app{"Balanced shifting and bipartite rigidity toolkit", "balrig"};
  app.set_help_all_flag("--help-all");

  app.add_option("command", config.subcommand, "shift | analyze | laman | mcheck | generate | selftest")
      ->required()
      ->check(CLI::IsMember({"shift", "analyze", "laman", "mcheck", "generate", "selftest"}));
  app.add_option("family", config.family, "generator family (generate only)");
  app.add_option("--graph", config.graph_path, "bipartite graph JSON file");
  app.add_option("--complex", config.complex_path, "balanced complex JSON file");
  app.add_option("--inline", config.inline_spec, "graph or complex JSON given on the command line");
  app.add_option("-k", config.k, "k of (k,l)")->capture_default_str();
  app.add_option("-l", config.l, "l of (k,l)")->capture_default_str();
  app.add_option("--order", config.order, "default | interleaved | comma-separated vertices (1,1',2 or 1:1,2:1)")
      ->capture_default_str();
  app.add_option("--prime", config.prime, "field modulus")->capture_default_str();
  app.add_option("--trials", config.trials, "random trials per verdict")->capture_default_str();
  app.add_option("--seed", config.seed, "base seed")->envname("BALRIG_SEED")->capture_default_str();
  app.add_option("--format", config.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--mode", config.mode, "stacked-cubical augmentation: two-vertex | opposite-facets | laman");
  app.add_flag("--stresses", config.stresses, "analyze: include a stress basis");

  std::map<std::string, std::optional<long long>> params;
  for (const char* key : {"n", "m", "d", "t", "faces", "facet", "pendants", "deletions", "max-back", "num", "den",
                          "size", "facets", "colors"}) {
    app.add_option(std::string("--") + key, params[key], "generator parameter")->group("Generator parameters");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << balrig::io::error_json(balrig::ErrorKind::kInvalidInput, e.what()).dump() << '\n';
    return balrig::cli::kUsage;
  }
  for (const auto& [key, value] : params) {
    if (value) config.params[key] = *value;
  }
  return balrig::cli::run(config, std::cout, std::cerr);
}
