#include "olp/pipeline.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "olp/error.hpp"
#include "olp/interpolation.hpp"
#include "olp/scene_io.hpp"
#include "text_format.hpp"

namespace olp {
namespace {

namespace fs = std::filesystem;

constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr int kDefaultRiskSamples = 11;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

std::string job_name_from(const std::string& input_path) {
  std::string stem = fs::path(input_path).stem().string();
  std::string name;
  for (char c : stem)
    name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front())))
    name = "job_" + name;
  return name;
}

void apply_overrides(ProcessParams& params, const RunConfig& config) {
  if (config.speed_percent) {
    if (!(*config.speed_percent > 0.0 && *config.speed_percent <= 100.0))
      throw ConfigError("--speed must be in (0, 100]");
    params.speed_percent = *config.speed_percent;
  }
  if (config.cycles) {
    if (*config.cycles < 1) throw ConfigError("--cycles must be positive");
    params.cycles = *config.cycles;
  }
  if (config.approach_distance) {
    if (!(*config.approach_distance >= 0.0))
      throw ConfigError("--approach must be >= 0");
    params.approach_distance = *config.approach_distance;
  }
  if (config.default_motion) params.default_motion = *config.default_motion;
}

struct Plan {
  SceneDocument doc;
  std::vector<MotionTarget> targets;
  std::vector<Violation> warnings;
  std::string base_frame;
};

/// Densifies every risk-flagged linear path segment between its
/// predecessor target and the path target itself.
std::vector<MotionTarget> densify_risk_segments(std::vector<MotionTarget> targets,
                                                const SceneDocument& doc) {
  std::vector<MotionTarget> out;
  out.reserve(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) {
    const MotionTarget& target = targets[i];
    const PathEntity* path = nullptr;
    for (const auto& p : doc.paths)
      if (p.id == target.source_id && p.risk) path = &p;
    if (!path) {
      out.push_back(target);
      continue;
    }
    if (path->kind != PathKind::line)
      throw InterpolationError("risk path '" + path->id +
                               "' is not a line; only linear segments can be densified");
    if (out.empty())
      throw InterpolationError("risk path '" + path->id + "' has no preceding target");
    const MotionTarget& prev = out.back();
    InterpolationSpec spec;
    spec.n = path->risk_samples.value_or(kDefaultRiskSamples);
    spec.dt = doc.params.sample_width_dt;
    std::vector<MotionTarget> chain = interpolate_segment(prev, target, spec);
    // The predecessor is already in the output; splice in the rest so the
    // boundary pose appears exactly once.
    for (size_t k = 1; k < chain.size(); ++k) out.push_back(std::move(chain[k]));
  }
  return out;
}

Plan build_plan(const RunConfig& config, std::ostream& err) {
  Plan plan;
  const std::string text = read_file(config.input_path);

  try {
    plan.doc = parse_scene(text);
  } catch (const ParseError& e) {
    throw Error(std::string("[parse] ") + e.what());
  }
  apply_overrides(plan.doc.params, config);

  const std::vector<Violation> violations = validate_scene(plan.doc);
  if (!violations.empty()) {
    for (const auto& v : violations)
      err << "[validate] " << v.entity << ": " << v.code << ": " << v.message << "\n";
    throw Error("[validate] scene has " + std::to_string(violations.size()) +
                " violation(s)");
  }
  if (const FrameDef* base = plan.doc.base_frame()) plan.base_frame = base->id;

  ExtractionResult extracted;
  try {
    extracted = extract_targets(plan.doc);
  } catch (const ExtractionError& e) {
    throw Error(std::string("[extract] ") + e.what());
  }
  plan.warnings = std::move(extracted.warnings);

  try {
    extracted.targets = insert_approach_departure(std::move(extracted.targets),
                                                  plan.doc.params.approach_distance);
  } catch (const ExtractionError& e) {
    throw Error(std::string("[approach] ") + e.what());
  }

  try {
    plan.targets = densify_risk_segments(std::move(extracted.targets), plan.doc);
  } catch (const InterpolationError& e) {
    throw Error(std::string("[interpolate] ") + e.what());
  }
  return plan;
}

void report_warnings(const Plan& plan, const RunConfig& config, std::ostream& err) {
  for (const auto& w : plan.warnings)
    err << "[extract] warning: " << w.entity << ": " << w.message << "\n";
  if (config.strict && !plan.warnings.empty())
    throw Error("[extract] " + std::to_string(plan.warnings.size()) +
                " warning(s) with --strict");
}

int count_motion_instructions(const ProgramIR& ir) {
  int count = 0;
  for (const auto& in : ir.instructions)
    switch (in.kind) {
      case InstructionKind::move_joint:
      case InstructionKind::move_linear:
      case InstructionKind::move_circular:
      case InstructionKind::move_spline:
        ++count;
        break;
      default:
        break;
    }
  return count;
}

std::string build_report(const Plan& plan, const std::string& job,
                         const std::vector<std::pair<Dialect, std::string>>& outputs,
                         const ProgramIR& ir) {
  std::ostringstream out;
  const ProcessParams& p = plan.doc.params;
  out << "report\n";
  out << "  job " << job << "\n";
  out << "  base_frame " << plan.base_frame << "\n";
  out << "end\n";
  out << "\ncounts\n";
  out << "  targets " << plan.targets.size() << "\n";
  out << "  poses " << ir.declarations.size() << "\n";
  out << "  motion_instructions " << count_motion_instructions(ir) << "\n";
  out << "  warnings " << plan.warnings.size() << "\n";
  out << "end\n";
  out << "\nparams\n";
  out << "  speed_percent " << detail::fmt_g(p.speed_percent, 15) << "\n";
  out << "  cycles " << p.cycles << "\n";
  out << "  approach_distance " << detail::fmt_g(p.approach_distance, 15) << "\n";
  out << "  sample_width_dt " << detail::fmt_g(p.sample_width_dt, 15) << "\n";
  out << "  default_motion " << to_string(p.default_motion) << "\n";
  out << "  output_channel " << p.output_channel << "\n";
  out << "end\n";
  for (const auto& [dialect, file] : outputs) {
    out << "\noutput\n";
    out << "  dialect " << to_string(dialect) << "\n";
    out << "  file " << file << "\n";
    out << "end\n";
  }
  int row = 0;
  for (const auto& t : plan.targets) {
    const OrientationTriple e = rot_to_euler(t.pose_in_base.rotation());
    const Vec3& pos = t.pose_in_base.translation();
    out << "\ntarget " << ++row << "\n";
    out << "  source " << t.source_id << "\n";
    out << "  motion " << to_string(t.motion) << "\n";
    out << "  speed_percent " << detail::fmt_g(t.speed_percent, 15) << "\n";
    out << "  op " << to_string(t.op) << "\n";
    out << "  position " << detail::fmt_g(pos.x, 15) << ' ' << detail::fmt_g(pos.y, 15)
        << ' ' << detail::fmt_g(pos.z, 15) << "\n";
    out << "  euler_deg " << detail::fmt_g(e.alpha * kDegPerRad, 15) << ' '
        << detail::fmt_g(e.beta * kDegPerRad, 15) << ' '
        << detail::fmt_g(e.gamma * kDegPerRad, 15) << "\n";
    out << "end\n";
  }
  out << "\nwarnings\n";
  for (const auto& w : plan.warnings)
    out << "  " << w.entity << ' ' << w.code << "\n";
  out << "end\n";
  return out.str();
}

/// Writes every file to a temporary sibling first and renames at the end,
/// so an error while producing any of them leaves nothing behind.
void write_outputs(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<fs::path> staged;
  std::vector<fs::path> renamed;
  try {
    for (const auto& [path, content] : files) {
      const fs::path tmp = path.string() + ".tmp";
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot write '" + tmp.string() + "'");
      out << content;
      out.close();
      if (!out) throw IoError("cannot write '" + tmp.string() + "'");
      staged.push_back(tmp);
    }
    for (size_t i = 0; i < files.size(); ++i) {
      fs::rename(staged[i], files[i].first);
      renamed.push_back(files[i].first);
    }
  } catch (...) {
    std::error_code ec;
    for (const auto& tmp : staged) fs::remove(tmp, ec);
    for (const auto& done : renamed) fs::remove(done, ec);
    throw;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.dialects.empty()) throw ConfigError("select at least one dialect");

    const Plan plan = build_plan(config, err);
    report_warnings(plan, config, err);
    if (plan.targets.empty()) throw Error("[extract] scene produced no motion targets");

    ProgramMeta meta;
    meta.job_name = job_name_from(config.input_path);
    meta.base_frame = plan.base_frame;

    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + config.output_dir + "'");

    std::vector<std::pair<fs::path, std::string>> files;
    std::vector<std::pair<Dialect, std::string>> outputs;
    const ProgramIR* report_ir = nullptr;
    ProgramIR euler_ir, quat_ir;
    for (Dialect dialect : config.dialects) {
      if (dialect == Dialect::inform) {
        euler_ir = lower(plan.targets, plan.doc.params, PoseEncoding::euler, meta);
        const std::string file = meta.job_name + ".jbi";
        files.emplace_back(fs::path(config.output_dir) / file, emit_inform(euler_ir));
        outputs.emplace_back(dialect, file);
        report_ir = &euler_ir;
      } else {
        quat_ir = lower(plan.targets, plan.doc.params, PoseEncoding::quaternion, meta);
        const std::string file = meta.job_name + ".mod";
        files.emplace_back(fs::path(config.output_dir) / file, emit_rapid(quat_ir));
        outputs.emplace_back(dialect, file);
        if (!report_ir) report_ir = &quat_ir;
      }
    }

    const std::string report = build_report(plan, meta.job_name, outputs, *report_ir);
    files.emplace_back(fs::path(config.output_dir) / (meta.job_name + ".report"), report);

    write_outputs(files);

    if (config.verbosity > 0) {
      for (const auto& [dialect, file] : outputs)
        err << "[emit] " << to_string(dialect) << " -> " << file << "\n";
    }
    out << meta.job_name << ": " << plan.targets.size() << " targets, "
        << report_ir->declarations.size() << " poses, " << outputs.size()
        << " program file(s) in " << config.output_dir << "\n";
    return 0;
  } catch (const IoError& e) {
    err << "olpc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "olpc: " << e.what() << "\n";
    return 1;
  }
}

int explain(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Plan plan = build_plan(config, err);
    report_warnings(plan, config, err);

    out << "  # source            motion    op              x          y          z"
           "         Rx         Ry         Rz\n";
    int row = 0;
    for (const auto& t : plan.targets) {
      const OrientationTriple e = rot_to_euler(t.pose_in_base.rotation());
      const Vec3& pos = t.pose_in_base.translation();
      char line[256];
      std::snprintf(line, sizeof line,
                    "%3d %-18s %-9s %-13s %10.3f %10.3f %10.3f %10.6f %10.6f %10.6f\n",
                    ++row, t.source_id.c_str(), to_string(t.motion), to_string(t.op),
                    pos.x, pos.y, pos.z, e.alpha * kDegPerRad, e.beta * kDegPerRad,
                    e.gamma * kDegPerRad);
      out << line;
    }
    return 0;
  } catch (const IoError& e) {
    err << "olpc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "olpc: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace olp
