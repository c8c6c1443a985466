#include <algorithm>
#include <cmath>
#include <map>

#include "olp/error.hpp"
#include "olp/extraction.hpp"
#include "olp/scene_io.hpp"

namespace olp {
namespace {

// Hand-authored files carry rounded decimals, so the structural check is
// looser than the 1e-9 the math layer enforces after projection.
constexpr double kRotationTolerance = 1e-6;

void check_rotation_block(const std::string& entity, const Mat3& r,
                          std::vector<Violation>& out) {
  for (int c = 0; c < 3; ++c) {
    const Vec3 col{r(0, c), r(1, c), r(2, c)};
    if (std::abs(col.norm() - 1.0) > kRotationTolerance) {
      out.push_back({entity, "rotation_not_orthonormal",
                     "column " + std::to_string(c + 1) + " has norm " +
                         std::to_string(col.norm())});
      return;
    }
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const Vec3 ca{r(0, a), r(1, a), r(2, a)};
      const Vec3 cb{r(0, b), r(1, b), r(2, b)};
      if (std::abs(ca.dot(cb)) > kRotationTolerance) {
        out.push_back({entity, "rotation_not_orthonormal",
                       "columns " + std::to_string(a + 1) + " and " +
                           std::to_string(b + 1) + " are not orthogonal"});
        return;
      }
    }
  if (r.det() <= 0.0) {
    out.push_back({entity, "rotation_not_orthonormal",
                   "rotation block is left-handed (determinant <= 0)"});
  }
}

}  // namespace

std::vector<Violation> validate_scene(const SceneDocument& doc) {
  std::vector<Violation> out;

  int base_count = 0;
  for (const auto& f : doc.frames)
    if (f.base) ++base_count;
  if (base_count == 0) {
    out.push_back({"scene", "base_frame_count", "no frame is marked as base"});
  } else if (base_count > 1) {
    int seen = 0;
    for (const auto& f : doc.frames) {
      if (!f.base) continue;
      if (++seen > 1)
        out.push_back({f.id, "base_frame_count",
                       "base frame is already defined; only one is allowed"});
    }
  }

  std::map<int, std::string> sequence_owner;
  for (const auto& tool : doc.tools) {
    std::optional<StepName> step;
    try {
      step = parse_step_name(tool.name);
    } catch (const ExtractionError& e) {
      out.push_back({tool.name, "malformed_step_name", e.what()});
      continue;
    }
    if (!step) continue;  // non-motion tool
    auto [it, inserted] = sequence_owner.emplace(step->sequence, tool.name);
    if (!inserted)
      out.push_back({tool.name, "duplicate_step_sequence",
                     "sequence " + std::to_string(step->sequence) +
                         " is already used by '" + it->second + "'"});
  }

  for (const auto& f : doc.frames) check_rotation_block(f.id, f.transform.rotation, out);
  for (const auto& t : doc.tools) check_rotation_block(t.name, t.transform.rotation, out);
  if (doc.params.home)
    check_rotation_block("params.home", doc.params.home->rotation, out);

  std::map<std::string, bool> tool_names;
  for (const auto& t : doc.tools) tool_names[t.name] = true;
  for (const auto& p : doc.paths) {
    if (p.orientation_tool && !tool_names.count(*p.orientation_tool))
      out.push_back({p.id, "unknown_orientation_tool",
                     "orientation_tool '" + *p.orientation_tool +
                         "' does not name a tool in this scene"});
  }

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    if (a.entity != b.entity) return a.entity < b.entity;
    if (a.code != b.code) return a.code < b.code;
    return a.message < b.message;
  });
  return out;
}

}  // namespace olp
