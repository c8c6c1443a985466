#include <cmath>
#include <sstream>

#include "olp/codegen.hpp"
#include "olp/error.hpp"
#include "text_format.hpp"

namespace olp {
namespace {

/// speed_percent p maps to the named speed term v<round(10*p)>: 23% -> v230.
std::string speed_term(double speed_percent) {
  return "v" + std::to_string(static_cast<long>(std::lround(10.0 * speed_percent)));
}

std::string robtarget(const PoseDecl& decl) {
  const auto* q = std::get_if<UnitQuaternion>(&decl.orientation);
  if (!q) throw CodegenError("RAPID-style output needs quaternion-encoded poses");
  std::ostringstream line;
  line << "  CONST robtarget " << decl.name << ":=[["
       << detail::fmt_g(decl.position.x, 14) << ',' << detail::fmt_g(decl.position.y, 14)
       << ',' << detail::fmt_g(decl.position.z, 14) << "],["
       << detail::fmt_g(q->w, 14) << ',' << detail::fmt_g(q->x, 14) << ','
       << detail::fmt_g(q->y, 14) << ',' << detail::fmt_g(q->z, 14)
       << "],[0,0,0,0],[9E9,9E9,9E9,9E9,9E9,9E9]];";
  return line.str();
}

}  // namespace

std::string emit_rapid(const ProgramIR& ir) {
  if (ir.encoding != PoseEncoding::quaternion)
    throw CodegenError("RAPID-style output needs quaternion-encoded poses");

  std::ostringstream out;
  out << "MODULE " << ir.meta.job_name << "\n";
  for (const auto& decl : ir.declarations) out << robtarget(decl) << "\n";
  out << "  PROC main()\n";

  for (const auto& in : ir.instructions) {
    switch (in.kind) {
      case InstructionKind::move_joint:
        out << "    MoveJ " << in.pose << ',' << speed_term(in.speed_percent)
            << ",fine,tool0;\n";
        break;
      case InstructionKind::move_linear:
        out << "    MoveL " << in.pose << ',' << speed_term(in.speed_percent)
            << ",fine,tool0;\n";
        break;
      case InstructionKind::move_circular:
        out << "    MoveC " << in.vias.at(0) << ',' << in.pose << ','
            << speed_term(in.speed_percent) << ",fine,tool0;\n";
        break;
      case InstructionKind::move_spline: {
        out << "    MoveSpl [";
        for (size_t i = 0; i < in.vias.size(); ++i) {
          if (i) out << ',';
          out << in.vias[i];
        }
        out << "]," << in.pose << ',' << speed_term(in.speed_percent) << ",fine,tool0;\n";
        break;
      }
      case InstructionKind::set_output:
        out << "    SetDO do" << in.channel << ',' << (in.output_on ? 1 : 0) << ";\n";
        break;
      case InstructionKind::wait_timer:
        out << "    WaitTime " << detail::fmt_g(in.seconds, 14) << ";\n";
        break;
      case InstructionKind::label:
        out << "    FOR cycle FROM 1 TO " << ir.cycles << " DO\n";
        break;
      case InstructionKind::jump:
        out << "    ENDFOR\n";
        break;
    }
  }

  out << "  ENDPROC\n";
  out << "ENDMODULE\n";
  return out.str();
}

}  // namespace olp
