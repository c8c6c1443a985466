#include "olp/scene_io.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "olp/error.hpp"
#include "text_format.hpp"

namespace olp {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    if (const size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line;
    line.number = number;
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

double parse_number(const Line& line, const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line.number, "expected a number, got '" + token + "'");
  if (!std::isfinite(value))
    throw ParseError(line.number, "non-finite number '" + token + "'");
  return value;
}

int parse_int(const Line& line, const std::string& token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line.number, "expected an integer, got '" + token + "'");
  return value;
}

bool parse_bool(const Line& line, const std::string& token) {
  if (token == "true") return true;
  if (token == "false") return false;
  throw ParseError(line.number, "expected true or false, got '" + token + "'");
}

std::vector<double> parse_numbers(const Line& line, size_t from) {
  std::vector<double> values;
  for (size_t i = from; i < line.tokens.size(); ++i)
    values.push_back(parse_number(line, line.tokens[i]));
  return values;
}

RawTransform transform_from(const Line& line, const std::vector<double>& v) {
  if (v.size() != 12)
    throw ParseError(line.number, "'" + line.tokens[0] + "' needs 12 numbers (9 rotation + 3 translation), got " +
                                      std::to_string(v.size()));
  RawTransform t;
  for (int i = 0; i < 9; ++i) t.rotation.m[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
  t.translation = {v[9], v[10], v[11]};
  return t;
}

Vec3 vec3_from(const Line& line, const std::vector<double>& v) {
  if (v.size() != 3)
    throw ParseError(line.number, "'" + line.tokens[0] + "' needs 3 numbers, got " +
                                      std::to_string(v.size()));
  return {v[0], v[1], v[2]};
}

/// Reads key lines of one block until 'end'; keys must be unique.
class BlockReader {
public:
  BlockReader(const std::vector<Line>& lines, size_t& index, std::string block)
      : block_(std::move(block)) {
    header_line_ = lines[index].number;
    ++index;
    while (index < lines.size()) {
      const Line& line = lines[index];
      if (line.tokens[0] == "end") {
        ++index;
        closed_ = true;
        return;
      }
      if (!keys_.emplace(line.tokens[0], line).second)
        throw ParseError(line.number,
                         "duplicate key '" + line.tokens[0] + "' in " + block_ + " block");
      ++index;
    }
  }

  void require_closed() const {
    if (!closed_)
      throw ParseError(header_line_, "unterminated " + block_ + " block (missing 'end')");
  }

  const Line* find(const std::string& key) {
    auto it = keys_.find(key);
    if (it == keys_.end()) return nullptr;
    consumed_.push_back(key);
    return &it->second;
  }

  const Line& require(const std::string& key) {
    const Line* line = find(key);
    if (!line)
      throw ParseError(header_line_, block_ + " block is missing '" + key + "'");
    return *line;
  }

  void reject_unknown() const {
    for (const auto& [key, line] : keys_) {
      bool used = false;
      for (const auto& c : consumed_)
        if (c == key) used = true;
      if (!used)
        throw ParseError(line.number, "unknown key '" + key + "' in " + block_ + " block");
    }
  }

  int header_line() const { return header_line_; }

private:
  std::string block_;
  int header_line_ = 0;
  bool closed_ = false;
  std::map<std::string, Line> keys_;
  std::vector<std::string> consumed_;
};

std::string value_token(const Line& line) {
  if (line.tokens.size() != 2)
    throw ParseError(line.number, "'" + line.tokens[0] + "' expects a single value");
  return line.tokens[1];
}

void scale_lengths(SceneDocument& doc, double factor) {
  if (factor == 1.0) return;
  for (auto& f : doc.frames) f.transform.translation = f.transform.translation * factor;
  for (auto& t : doc.tools) {
    t.transform.translation = t.transform.translation * factor;
    if (t.workpoint) t.workpoint = *t.workpoint * factor;
  }
  for (auto& p : doc.paths)
    for (auto& pt : p.points) pt = pt * factor;
  if (doc.params.home) doc.params.home->translation = doc.params.home->translation * factor;
  doc.params.approach_distance *= factor;
}

}  // namespace

SceneDocument parse_scene(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  SceneDocument doc;
  bool have_units = false;
  bool have_params = false;
  int last_line = lines.empty() ? 1 : lines.back().number;

  size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];

    if (head == "units") {
      if (have_units) throw ParseError(line.number, "duplicate 'units' declaration");
      const std::string u = value_token(line);
      if (u == "millimeter")
        doc.units = LengthUnit::millimeter;
      else if (u == "centimeter")
        doc.units = LengthUnit::centimeter;
      else if (u == "meter")
        doc.units = LengthUnit::meter;
      else
        throw ParseError(line.number, "unknown unit '" + u + "'");
      have_units = true;
      ++i;
      continue;
    }

    if (head == "frame") {
      if (line.tokens.size() != 1)
        throw ParseError(line.number, "'frame' takes no inline arguments");
      BlockReader block(lines, i, "frame");
      block.require_closed();
      FrameDef frame;
      frame.id = value_token(block.require("id"));
      if (const Line* b = block.find("base")) frame.base = parse_bool(*b, value_token(*b));
      const Line& tr = block.require("transform");
      frame.transform = transform_from(tr, parse_numbers(tr, 1));
      block.reject_unknown();
      doc.frames.push_back(std::move(frame));
      continue;
    }

    if (head == "tool") {
      if (line.tokens.size() != 1)
        throw ParseError(line.number, "'tool' takes no inline arguments");
      BlockReader block(lines, i, "tool");
      block.require_closed();
      ToolModel tool;
      const Line& name = block.require("name");
      tool.name = value_token(name);
      for (const auto& existing : doc.tools)
        if (existing.name == tool.name)
          throw ParseError(name.number, "duplicate tool name '" + tool.name + "'");
      const Line& tr = block.require("transform");
      tool.transform = transform_from(tr, parse_numbers(tr, 1));
      if (const Line* wp = block.find("workpoint"))
        tool.workpoint = vec3_from(*wp, parse_numbers(*wp, 1));
      block.reject_unknown();
      doc.tools.push_back(std::move(tool));
      continue;
    }

    if (head == "path") {
      if (line.tokens.size() != 1)
        throw ParseError(line.number, "'path' takes no inline arguments");
      BlockReader block(lines, i, "path");
      block.require_closed();
      PathEntity path;
      path.id = value_token(block.require("id"));
      const Line& kind = block.require("kind");
      const std::string k = value_token(kind);
      if (k == "line")
        path.kind = PathKind::line;
      else if (k == "arc")
        path.kind = PathKind::arc;
      else if (k == "spline")
        path.kind = PathKind::spline;
      else
        throw ParseError(kind.number, "unknown path kind '" + k + "'");
      const Line& pts = block.require("points");
      const std::vector<double> nums = parse_numbers(pts, 1);
      if (nums.size() % 3 != 0)
        throw ParseError(pts.number, "'points' needs whole xyz triples, got " +
                                         std::to_string(nums.size()) + " numbers");
      for (size_t n = 0; n + 2 < nums.size(); n += 3)
        path.points.push_back({nums[n], nums[n + 1], nums[n + 2]});
      const size_t count = path.points.size();
      if ((path.kind == PathKind::line && count != 2) ||
          (path.kind == PathKind::arc && count != 3) ||
          (path.kind == PathKind::spline && count < 3))
        throw ParseError(pts.number, "a " + std::string(to_string(path.kind)) +
                                         " path cannot have " + std::to_string(count) +
                                         " points");
      if (const Line* ot = block.find("orientation_tool"))
        path.orientation_tool = value_token(*ot);
      if (const Line* r = block.find("risk")) path.risk = parse_bool(*r, value_token(*r));
      if (const Line* rs = block.find("risk_samples")) {
        if (!path.risk)
          throw ParseError(rs->number, "'risk_samples' is only allowed when risk is true");
        path.risk_samples = parse_int(*rs, value_token(*rs));
        if (*path.risk_samples < 2)
          throw ParseError(rs->number, "'risk_samples' must be at least 2");
      }
      block.reject_unknown();
      doc.paths.push_back(std::move(path));
      continue;
    }

    if (head == "params") {
      if (line.tokens.size() != 1)
        throw ParseError(line.number, "'params' takes no inline arguments");
      if (have_params) throw ParseError(line.number, "duplicate 'params' block");
      BlockReader block(lines, i, "params");
      block.require_closed();
      ProcessParams& p = doc.params;
      const Line& speed = block.require("speed_percent");
      p.speed_percent = parse_number(speed, value_token(speed));
      if (p.speed_percent <= 0.0 || p.speed_percent > 100.0)
        throw ParseError(speed.number, "'speed_percent' must be in (0, 100]");
      const Line& cycles = block.require("cycles");
      p.cycles = parse_int(cycles, value_token(cycles));
      if (p.cycles < 1) throw ParseError(cycles.number, "'cycles' must be positive");
      if (const Line* home = block.find("home"))
        p.home = transform_from(*home, parse_numbers(*home, 1));
      const Line& app = block.require("approach_distance");
      p.approach_distance = parse_number(app, value_token(app));
      if (p.approach_distance < 0.0)
        throw ParseError(app.number, "'approach_distance' must be >= 0");
      const Line& dt = block.require("sample_width_dt");
      p.sample_width_dt = parse_number(dt, value_token(dt));
      if (p.sample_width_dt <= 0.0)
        throw ParseError(dt.number, "'sample_width_dt' must be positive");
      const Line& motion = block.require("default_motion");
      const std::string m = value_token(motion);
      if (m == "joint")
        p.default_motion = DefaultMotion::joint;
      else if (m == "linear")
        p.default_motion = DefaultMotion::linear;
      else
        throw ParseError(motion.number, "unknown default_motion '" + m + "'");
      if (const Line* ch = block.find("output_channel")) {
        p.output_channel = parse_int(*ch, value_token(*ch));
        if (p.output_channel < 1)
          throw ParseError(ch->number, "'output_channel' must be positive");
      }
      block.reject_unknown();
      have_params = true;
      continue;
    }

    throw ParseError(line.number, "unexpected '" + head + "' at top level");
  }

  if (!have_units) throw ParseError(last_line, "missing 'units' declaration");
  if (!have_params) throw ParseError(last_line, "missing 'params' block");

  const double factor = doc.units == LengthUnit::millimeter   ? 1.0
                        : doc.units == LengthUnit::centimeter ? 10.0
                                                              : 1000.0;
  scale_lengths(doc, factor);
  doc.units = LengthUnit::millimeter;
  return doc;
}

namespace {

void write_numbers(std::ostringstream& out, const RawTransform& t) {
  for (double v : t.rotation.m) out << ' ' << detail::fmt_g(v, 15);
  out << ' ' << detail::fmt_g(t.translation.x, 15) << ' '
      << detail::fmt_g(t.translation.y, 15) << ' ' << detail::fmt_g(t.translation.z, 15);
}

}  // namespace

std::string emit_scene(const SceneDocument& doc) {
  std::ostringstream out;
  out << "units " << to_string(doc.units) << "\n";
  for (const auto& f : doc.frames) {
    out << "\nframe\n";
    out << "  id " << f.id << "\n";
    out << "  base " << (f.base ? "true" : "false") << "\n";
    out << "  transform";
    write_numbers(out, f.transform);
    out << "\nend\n";
  }
  for (const auto& t : doc.tools) {
    out << "\ntool\n";
    out << "  name " << t.name << "\n";
    out << "  transform";
    write_numbers(out, t.transform);
    out << "\n";
    if (t.workpoint) {
      out << "  workpoint " << detail::fmt_g(t.workpoint->x, 15) << ' '
          << detail::fmt_g(t.workpoint->y, 15) << ' ' << detail::fmt_g(t.workpoint->z, 15)
          << "\n";
    }
    out << "end\n";
  }
  for (const auto& p : doc.paths) {
    out << "\npath\n";
    out << "  id " << p.id << "\n";
    out << "  kind " << to_string(p.kind) << "\n";
    out << "  points";
    for (const auto& pt : p.points)
      out << ' ' << detail::fmt_g(pt.x, 15) << ' ' << detail::fmt_g(pt.y, 15) << ' '
          << detail::fmt_g(pt.z, 15);
    out << "\n";
    if (p.orientation_tool) out << "  orientation_tool " << *p.orientation_tool << "\n";
    out << "  risk " << (p.risk ? "true" : "false") << "\n";
    if (p.risk_samples) out << "  risk_samples " << *p.risk_samples << "\n";
    out << "end\n";
  }
  const ProcessParams& pp = doc.params;
  out << "\nparams\n";
  out << "  speed_percent " << detail::fmt_g(pp.speed_percent, 15) << "\n";
  out << "  cycles " << pp.cycles << "\n";
  if (pp.home) {
    out << "  home";
    write_numbers(out, *pp.home);
    out << "\n";
  }
  out << "  approach_distance " << detail::fmt_g(pp.approach_distance, 15) << "\n";
  out << "  sample_width_dt " << detail::fmt_g(pp.sample_width_dt, 15) << "\n";
  out << "  default_motion " << to_string(pp.default_motion) << "\n";
  if (pp.output_channel != 1) out << "  output_channel " << pp.output_channel << "\n";
  out << "end\n";
  return out.str();
}

const char* to_string(LengthUnit u) {
  switch (u) {
    case LengthUnit::millimeter: return "millimeter";
    case LengthUnit::centimeter: return "centimeter";
    case LengthUnit::meter: return "meter";
  }
  return "millimeter";
}

const char* to_string(PathKind k) {
  switch (k) {
    case PathKind::line: return "line";
    case PathKind::arc: return "arc";
    case PathKind::spline: return "spline";
  }
  return "line";
}

const char* to_string(DefaultMotion m) {
  return m == DefaultMotion::joint ? "joint" : "linear";
}

}  // namespace olp
