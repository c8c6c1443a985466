#pragma once

#include <string>
#include <variant>
#include <vector>

#include "olp/geometry.hpp"
#include "olp/rotation.hpp"

namespace olp {

/// Which of the two pose encodings the program's declarations carry.
enum class PoseEncoding { euler, quaternion };

/// A named pose: position in millimetres plus the orientation in the
/// encoding the target dialect wants. Euler angles are stored in radians
/// and printed in degrees.
struct PoseDecl {
  std::string name;
  Vec3 position;
  std::variant<OrientationTriple, UnitQuaternion> orientation;

  bool operator==(const PoseDecl&) const = default;
};

enum class InstructionKind {
  move_joint,
  move_linear,
  move_circular,
  move_spline,
  set_output,
  wait_timer,
  label,
  jump
};

struct Instruction {
  InstructionKind kind = InstructionKind::move_joint;
  std::string pose;               // motion kinds: target declaration name
  std::vector<std::string> vias;  // circular: 1, spline: >= 1
  double speed_percent = 0.0;
  int channel = 1;      // set_output
  bool output_on = false;
  double seconds = 0.0;  // wait_timer
  std::string label;     // label definition or jump target

  bool operator==(const Instruction&) const = default;
};

struct ProgramMeta {
  std::string job_name = "job";
  std::string base_frame;

  bool operator==(const ProgramMeta&) const = default;
};

/// Backend-neutral program: pose declarations plus an instruction list.
/// Every pose reference resolves to a declaration and declaration names
/// are unique; lower() guarantees both.
struct ProgramIR {
  PoseEncoding encoding = PoseEncoding::euler;
  std::vector<PoseDecl> declarations;
  std::vector<Instruction> instructions;
  int cycles = 1;
  ProgramMeta meta;

  bool operator==(const ProgramIR&) const = default;
};

}  // namespace olp
