#include <numbers>
#include <sstream>

#include "olp/codegen.hpp"
#include "olp/error.hpp"
#include "text_format.hpp"

namespace olp {
namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::string pose_record(const PoseDecl& decl) {
  const auto* e = std::get_if<OrientationTriple>(&decl.orientation);
  if (!e) throw CodegenError("INFORM-style output needs Euler-encoded poses");
  std::ostringstream line;
  line << decl.name << '=' << detail::fmt_g(decl.position.x, 14) << ','
       << detail::fmt_g(decl.position.y, 14) << ','
       << detail::fmt_g(decl.position.z, 14) << ','
       << detail::fmt_g(e->alpha * kDegPerRad, 14) << ','
       << detail::fmt_g(e->beta * kDegPerRad, 14) << ','
       << detail::fmt_g(e->gamma * kDegPerRad, 14);
  return line.str();
}

}  // namespace

std::string emit_inform(const ProgramIR& ir) {
  if (ir.encoding != PoseEncoding::euler)
    throw CodegenError("INFORM-style output needs Euler-encoded poses");

  std::ostringstream out;
  out << "/JOB\n";
  out << "//NAME " << ir.meta.job_name << "\n";
  out << "//POS\n";
  for (const auto& decl : ir.declarations) out << pose_record(decl) << "\n";
  out << "//INST\n";
  // Fixed placeholder: emitted programs carry no environment-dependent text.
  out << "///DATE 0000/00/00 00:00\n";
  out << "///ATTR SC,RW\n";
  out << "///GROUP1 RB1\n";
  out << "NOP\n";

  for (const auto& in : ir.instructions) {
    switch (in.kind) {
      case InstructionKind::move_joint:
        out << "MOVJ " << in.pose << " VJ=" << detail::fmt_f(in.speed_percent, 2) << "\n";
        break;
      case InstructionKind::move_linear:
        out << "MOVL " << in.pose << " V=" << detail::fmt_f(in.speed_percent, 2) << "\n";
        break;
      case InstructionKind::move_circular:
        out << "MOVC " << in.vias.at(0) << ' ' << in.pose << " V="
            << detail::fmt_f(in.speed_percent, 2) << "\n";
        break;
      case InstructionKind::move_spline: {
        out << "MOVS";
        for (const auto& via : in.vias) out << ' ' << via;
        out << ' ' << in.pose << " V=" << detail::fmt_f(in.speed_percent, 2) << "\n";
        break;
      }
      case InstructionKind::set_output:
        out << "DOUT OT#(" << in.channel << ") " << (in.output_on ? "ON" : "OFF") << "\n";
        break;
      case InstructionKind::wait_timer:
        out << "TIMER T=" << detail::fmt_f(in.seconds, 2) << "\n";
        break;
      case InstructionKind::label:
        out << "SET I000 " << ir.cycles << "\n";
        out << '*' << in.label << "\n";
        break;
      case InstructionKind::jump:
        out << "DEC I000\n";
        out << "JUMP *" << in.label << " IF I000>0\n";
        break;
    }
  }

  out << "END\n";
  return out.str();
}

}  // namespace olp
