#include <cmath>
#include <cstdio>

#include "olp/codegen.hpp"
#include "olp/error.hpp"

namespace olp {
namespace {

constexpr double kDedupPosition = 1e-9;  // mm
constexpr double kDedupAngle = 1e-9;     // rad

// Declared poses keep their exact transform around so later targets can be
// matched against them.
struct PoseTable {
  std::vector<Transform> poses;
  std::vector<std::string> names;

  std::string declare(const Transform& pose, ProgramIR& ir, PoseEncoding encoding) {
    const UnitQuaternion q = rot_to_quat(pose.rotation());
    for (size_t i = 0; i < poses.size(); ++i) {
      const Vec3 d = poses[i].translation() - pose.translation();
      if (std::abs(d.x) > kDedupPosition || std::abs(d.y) > kDedupPosition ||
          std::abs(d.z) > kDedupPosition)
        continue;
      if (rotation_angle_between(rot_to_quat(poses[i].rotation()), q) > kDedupAngle)
        continue;
      return names[i];
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "P%04zu", poses.size() + 1);
    poses.push_back(pose);
    names.emplace_back(buf);

    PoseDecl decl;
    decl.name = buf;
    decl.position = pose.translation();
    if (encoding == PoseEncoding::euler)
      decl.orientation = rot_to_euler(pose.rotation());
    else
      decl.orientation = q;
    ir.declarations.push_back(std::move(decl));
    return names.back();
  }
};

InstructionKind motion_instruction(MotionKind kind) {
  switch (kind) {
    case MotionKind::joint: return InstructionKind::move_joint;
    case MotionKind::linear: return InstructionKind::move_linear;
    case MotionKind::circular: return InstructionKind::move_circular;
    case MotionKind::spline: return InstructionKind::move_spline;
  }
  return InstructionKind::move_joint;
}

}  // namespace

ProgramIR lower(const std::vector<MotionTarget>& targets, const ProcessParams& params,
                PoseEncoding encoding, ProgramMeta meta) {
  if (targets.empty()) throw CodegenError("cannot lower an empty target list");
  if (params.cycles < 1) throw CodegenError("cycles must be positive");

  ProgramIR ir;
  ir.encoding = encoding;
  ir.cycles = params.cycles;
  ir.meta = std::move(meta);

  PoseTable table;
  std::string home_name;
  if (params.home) {
    const Transform home = Transform::projected(params.home->rotation,
                                                params.home->translation);
    home_name = table.declare(home, ir, encoding);
  }

  auto add_home_move = [&] {
    Instruction move;
    move.kind = InstructionKind::move_joint;
    move.pose = home_name;
    move.speed_percent = params.speed_percent;
    ir.instructions.push_back(std::move(move));
  };

  if (!home_name.empty()) add_home_move();

  if (ir.cycles > 1) {
    Instruction label;
    label.kind = InstructionKind::label;
    label.label = "LABEL1";
    ir.instructions.push_back(std::move(label));
  }

  for (const auto& target : targets) {
    Instruction move;
    move.kind = motion_instruction(target.motion);
    move.speed_percent = target.speed_percent;

    if (target.motion == MotionKind::circular && target.vias_in_base.size() != 1)
      throw CodegenError("circular target '" + target.source_id +
                         "' needs exactly one via pose");
    if (target.motion == MotionKind::spline && target.vias_in_base.empty())
      throw CodegenError("spline target '" + target.source_id +
                         "' needs at least one via pose");
    if (target.motion != MotionKind::circular && target.motion != MotionKind::spline &&
        !target.vias_in_base.empty())
      throw CodegenError("target '" + target.source_id +
                         "' carries via poses but is not circular or spline");

    for (const auto& via : target.vias_in_base)
      move.vias.push_back(table.declare(via, ir, encoding));
    move.pose = table.declare(target.pose_in_base, ir, encoding);
    ir.instructions.push_back(std::move(move));

    switch (target.op) {
      case OpAction::none:
        break;
      case OpAction::set_output_on:
      case OpAction::set_output_off: {
        Instruction io;
        io.kind = InstructionKind::set_output;
        io.channel = params.output_channel;
        io.output_on = target.op == OpAction::set_output_on;
        ir.instructions.push_back(std::move(io));
        if (target.op == OpAction::set_output_on) {
          Instruction wait;
          wait.kind = InstructionKind::wait_timer;
          wait.seconds = 1.0;
          ir.instructions.push_back(std::move(wait));
        }
        break;
      }
      case OpAction::wait_timer: {
        Instruction wait;
        wait.kind = InstructionKind::wait_timer;
        wait.seconds = 1.0;
        ir.instructions.push_back(std::move(wait));
        break;
      }
    }
  }

  if (ir.cycles > 1) {
    Instruction jump;
    jump.kind = InstructionKind::jump;
    jump.label = "LABEL1";
    ir.instructions.push_back(std::move(jump));
  }

  if (!home_name.empty()) add_home_move();

  return ir;
}

const char* to_string(Dialect d) { return d == Dialect::inform ? "inform" : "rapid"; }

}  // namespace olp
