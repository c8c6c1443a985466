// olpc: compiles a robot-cell scene file into executable robot programs.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "olp/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Compile a robot-cell scene description into INFORM-style (.jbi) "
               "and RAPID-style (.mod) robot programs."};

  olp::RunConfig config;
  std::vector<std::string> dialect_names;
  std::string motion;
  bool explain_only = false;

  app.add_option("scene", config.input_path, "Scene file to compile")->required();
  app.add_option("--dialect", dialect_names,
                 "Output dialect: inform or rapid (repeatable; default both)")
      ->check(CLI::IsMember({"inform", "rapid"}));
  app.add_option("--out", config.output_dir, "Output directory (default .)");
  app.add_option("--speed", config.speed_percent, "Override speed percent, (0, 100]");
  app.add_option("--cycles", config.cycles, "Override number of working cycles");
  app.add_option("--approach", config.approach_distance,
                 "Override approach/departure distance in mm");
  app.add_option("--motion", motion, "Override default motion: joint or linear")
      ->check(CLI::IsMember({"joint", "linear"}));
  app.add_flag("--strict", config.strict, "Treat warnings as errors");
  app.add_flag("--explain", explain_only,
               "Print the planned target table instead of emitting programs");
  app.add_flag("-v,--verbose", config.verbosity, "Verbose progress on stderr");

  CLI11_PARSE(app, argc, argv);

  if (!dialect_names.empty()) {
    config.dialects.clear();
    for (const auto& name : dialect_names) {
      const olp::Dialect d =
          name == "inform" ? olp::Dialect::inform : olp::Dialect::rapid;
      bool seen = false;
      for (olp::Dialect existing : config.dialects)
        if (existing == d) seen = true;
      if (!seen) config.dialects.push_back(d);
    }
  }
  if (!motion.empty())
    config.default_motion =
        motion == "joint" ? olp::DefaultMotion::joint : olp::DefaultMotion::linear;

  if (explain_only) return olp::explain(config, std::cout, std::cerr);
  return olp::run(config, std::cout, std::cerr);
}
