#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "olp/extraction.hpp"
#include "olp/program_ir.hpp"
#include "olp/scene.hpp"

namespace olp {

enum class Dialect { inform, rapid };

/// Lowers motion targets to a ProgramIR. Poses are deduplicated within
/// 1e-9 (mm and radians) and named P0001, P0002, ... in first-use order.
/// A target's op expands behind its move: set_output_on becomes DOUT +
/// 1 s timer, set_output_off a bare DOUT, wait_timer a 1 s timer. cycles
/// > 1 wraps the body in a label/jump pair; an optional home pose is
/// emitted first and last, outside the loop.
ProgramIR lower(const std::vector<MotionTarget>& targets, const ProcessParams& params,
                PoseEncoding encoding, ProgramMeta meta = {});

/// INFORM-style text (.jbi): /JOB header, //POS pose records as
/// P<nnnn>=x,y,z,Rx,Ry,Rz in degrees, //INST body, END. Byte-identical
/// across runs for equal IR. Rejects quaternion-encoded IR.
std::string emit_inform(const ProgramIR& ir);

/// RAPID-style text (.mod): MODULE with robtarget declarations carrying
/// [[x,y,z],[qw,qx,qy,qz],...] and a main() PROC. Byte-identical across
/// runs for equal IR. Rejects Euler-encoded IR.
std::string emit_rapid(const ProgramIR& ir);

struct Diagnostic {
  int line = 0;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

/// Re-parses emitted program text against the dialect grammar. Empty
/// result iff every line is grammatical, sections are ordered, and every
/// referenced pose or label is declared.
std::vector<Diagnostic> check_program(std::string_view text, Dialect dialect);

const char* to_string(Dialect d);

}  // namespace olp
