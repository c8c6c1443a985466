#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "olp/codegen.hpp"
#include "olp/scene.hpp"

namespace olp {

/// One CLI invocation: scene file in, robot programs out. Overrides, when
/// set, win over the scene file's params and must respect the same bounds.
struct RunConfig {
  std::string input_path;
  std::vector<Dialect> dialects = {Dialect::inform, Dialect::rapid};
  std::string output_dir = ".";
  std::optional<double> speed_percent;
  std::optional<int> cycles;
  std::optional<double> approach_distance;
  std::optional<DefaultMotion> default_motion;
  int verbosity = 0;
  bool strict = false;  // warnings become errors
};

/// Runs parse -> validate -> extract -> approach/departure -> risk
/// densification -> lower -> emit, then writes one program file per dialect
/// plus a <job>.report, all via write-then-rename so failures leave no
/// partial files. Returns 0 on success, 1 when the scene is rejected at any
/// stage, 2 on I/O failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Prints the ordered target table (row, source, motion, pose as x y z plus
/// X-Y-Z Euler degrees, op) without emitting programs. Same exit codes as
/// run(); an empty plan is not an error here.
int explain(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace olp
