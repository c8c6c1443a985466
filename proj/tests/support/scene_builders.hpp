// Scene documents used by the integration and acceptance suites: a
// three-object pick-and-place cell and an obstacle-course cell whose paths
// mix lines, arcs and splines.
#pragma once

#include <string>

#include "olp/scene.hpp"
#include "olp/transform.hpp"

namespace testscene {

inline olp::RawTransform raw(const olp::Mat3& r, const olp::Vec3& t) {
  return {r, t};
}

inline olp::Mat3 tool_down() { return olp::rot_x(3.14159265358979323846); }

/// Three objects, each approached, grasped (suffix A), lifted and placed:
/// 12 step tools in total, ops on the grasp steps only.
inline olp::SceneDocument pick_place_scene() {
  olp::SceneDocument doc;
  olp::FrameDef base;
  base.id = "table";
  base.base = true;
  base.transform = raw(olp::rot_z(3.14159265358979323846 / 2.0), {400.0, 120.0, 0.0});
  doc.frames.push_back(base);

  const double pick_y = 80.0, place_y = 200.0;
  const double top_z = 150.0, grip_z = 105.0;
  int seq = 0;
  for (int object = 0; object < 3; ++object) {
    const double x = 450.0 + 60.0 * object;
    const auto add = [&](double px, double py, double pz, const char* suffix) {
      olp::ToolModel tool;
      tool.name = "step_" + std::to_string(++seq) + suffix;
      tool.transform = raw(tool_down(), {px, py, pz + 60.0});
      tool.workpoint = olp::Vec3{px, py, pz};
      doc.tools.push_back(tool);
    };
    add(x, pick_y, top_z, "");    // approach
    add(x, pick_y, grip_z, "A");  // grasp + gripper output
    add(x, pick_y, top_z, "");    // depart
    add(x, place_y, grip_z, "");  // place
  }

  doc.params.speed_percent = 23.0;
  doc.params.cycles = 1;
  doc.params.approach_distance = 0.0;
  doc.params.sample_width_dt = 0.1;
  doc.params.default_motion = olp::DefaultMotion::joint;
  return doc;
}

/// Line + arc + spline paths with orientation tools, the line flagged as a
/// risk segment (n = 11), plus a final grasp with approach distance and a
/// home pose; two working cycles.
inline olp::SceneDocument obstacle_scene() {
  olp::SceneDocument doc;
  olp::FrameDef base;
  base.id = "bench";
  base.base = true;
  base.transform = raw(olp::rot_z(-3.14159265358979323846 / 6.0), {250.0, 40.0, 10.0});
  doc.frames.push_back(base);

  const auto tool = [&](const std::string& name, const olp::Mat3& r, const olp::Vec3& at) {
    olp::ToolModel t;
    t.name = name;
    t.transform = raw(r, at);
    doc.tools.push_back(t);
  };
  tool("step_1", tool_down(), {300.0, 100.0, 60.0});
  tool("step_2", tool_down() * olp::rot_z(3.14159265358979323846 / 2.0),
       {390.0, 100.0, 60.0});
  tool("step_3", tool_down() * olp::rot_z(3.14159265358979323846 / 4.0),
       {390.0, 160.0, 60.0});
  tool("step_4A", tool_down(), {300.0, 150.0, 40.0});

  olp::PathEntity line;
  line.id = "crossing";
  line.kind = olp::PathKind::line;
  line.points = {{300.0, 100.0, 60.0}, {390.0, 100.0, 60.0}};
  line.orientation_tool = "step_1";
  line.risk = true;
  line.risk_samples = 11;
  doc.paths.push_back(line);

  olp::PathEntity arc;
  arc.id = "around_post";
  arc.kind = olp::PathKind::arc;
  arc.points = {{390.0, 100.0, 60.0}, {420.0, 130.0, 60.0}, {390.0, 160.0, 60.0}};
  arc.orientation_tool = "step_2";
  doc.paths.push_back(arc);

  olp::PathEntity spline;
  spline.id = "weave";
  spline.kind = olp::PathKind::spline;
  spline.points = {{390.0, 160.0, 60.0},
                   {350.0, 170.0, 70.0},
                   {320.0, 160.0, 65.0},
                   {300.0, 150.0, 60.0}};
  spline.orientation_tool = "step_3";
  doc.paths.push_back(spline);

  doc.params.speed_percent = 40.0;
  doc.params.cycles = 2;
  doc.params.home = raw(olp::Mat3::identity(), {0.0, 0.0, 300.0});
  doc.params.approach_distance = 25.0;
  doc.params.sample_width_dt = 0.05;
  doc.params.default_motion = olp::DefaultMotion::linear;
  return doc;
}

}  // namespace testscene
