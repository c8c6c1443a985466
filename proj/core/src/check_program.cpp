#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "olp/codegen.hpp"

namespace olp {
namespace {

struct TextLine {
  int number = 0;
  std::string text;  // trimmed
};

std::vector<TextLine> split_lines(std::string_view text) {
  std::vector<TextLine> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    size_t begin = 0, end = raw.size();
    while (begin < end && (raw[begin] == ' ' || raw[begin] == '\t')) ++begin;
    while (end > begin && (raw[end - 1] == ' ' || raw[end - 1] == '\t' || raw[end - 1] == '\r'))
      --end;
    if (end > begin) lines.push_back({number, std::string(raw.substr(begin, end - begin))});
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    const size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_number(const std::string& token) {
  if (token.empty()) return false;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  return ec == std::errc{} && ptr == token.data() + token.size() && std::isfinite(v);
}

bool is_integer(const std::string& token) {
  if (token.empty()) return false;
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool is_pose_name(const std::string& token) {
  return token.size() >= 2 && token[0] == 'P' && all_digits(token.substr(1));
}

bool is_counter_var(const std::string& token) {
  return token.size() >= 2 && (token[0] == 'I' || token[0] == 'D') &&
         all_digits(token.substr(1));
}

bool is_label_token(const std::string& token) {
  return token.size() > 6 && token[0] == '*' && token.compare(1, 5, "LABEL") == 0 &&
         all_digits(token.substr(6));
}

bool is_identifier(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// ---------------------------------------------------------------------------
// INFORM-style

class InformChecker {
public:
  std::vector<Diagnostic> check(const std::vector<TextLine>& lines) {
    if (lines.empty()) return {{1, "empty program"}};
    size_t i = 0;

    expect(lines, i, "/JOB");
    if (i < lines.size()) {
      const auto w = words(lines[i].text);
      if (w.size() == 2 && w[0] == "//NAME" && is_identifier(w[1]))
        ++i;
      else
        fail(lines[i], "expected '//NAME <job>'");
    }
    expect(lines, i, "//POS");

    while (i < lines.size() && lines[i].text != "//INST") {
      check_pose_record(lines[i]);
      ++i;
    }
    expect(lines, i, "//INST");
    while (i < lines.size() && lines[i].text.rfind("///", 0) == 0) ++i;  // metadata
    expect(lines, i, "NOP");

    // Labels may be jumped to forward, collect definitions first.
    for (size_t j = i; j < lines.size(); ++j)
      if (is_label_token(lines[j].text)) labels_.insert(lines[j].text.substr(1));

    bool saw_end = false;
    for (; i < lines.size(); ++i) {
      if (lines[i].text == "END") {
        saw_end = true;
        if (i + 1 < lines.size()) fail(lines[i + 1], "content after END");
        break;
      }
      check_instruction(lines[i]);
    }
    if (!saw_end && !lines.empty())
      fail(lines.back(), "missing END");
    return std::move(diags_);
  }

private:
  void fail(const TextLine& line, const std::string& msg) {
    diags_.push_back({line.number, msg});
  }

  void expect(const std::vector<TextLine>& lines, size_t& i, const std::string& token) {
    if (i < lines.size() && lines[i].text == token) {
      ++i;
      return;
    }
    const TextLine& at = i < lines.size() ? lines[i] : lines.back();
    fail(at, "expected '" + token + "'");
    if (i < lines.size()) ++i;
  }

  void check_pose_record(const TextLine& line) {
    const size_t eq = line.text.find('=');
    if (eq == std::string::npos) {
      fail(line, "expected a pose record 'P<nnnn>=...' before //INST");
      return;
    }
    const std::string name = line.text.substr(0, eq);
    if (!is_pose_name(name)) {
      fail(line, "bad pose name '" + name + "'");
      return;
    }
    if (!declared_.insert(name).second) fail(line, "duplicate pose '" + name + "'");
    const auto values = split(line.text.substr(eq + 1), ',');
    if (values.size() != 6) {
      fail(line, "pose record needs 6 values, got " + std::to_string(values.size()));
      return;
    }
    for (const auto& v : values)
      if (!is_number(v)) fail(line, "bad number '" + v + "' in pose record");
  }

  void require_pose(const TextLine& line, const std::string& token) {
    if (!is_pose_name(token)) {
      fail(line, "expected a pose name, got '" + token + "'");
      return;
    }
    if (!declared_.count(token)) fail(line, "pose '" + token + "' is not declared");
  }

  bool speed_token(const std::string& token, const char* prefix) {
    const size_t n = std::string(prefix).size();
    return token.rfind(prefix, 0) == 0 && is_number(token.substr(n));
  }

  void check_instruction(const TextLine& line) {
    const auto w = words(line.text);
    const std::string& op = w[0];

    if (op == "MOVJ" || op == "MOVL") {
      const char* prefix = op == "MOVJ" ? "VJ=" : "V=";
      if (w.size() != 3 || !speed_token(w[2], prefix)) {
        fail(line, "expected '" + op + " P<nnnn> " + prefix + "<speed>'");
        return;
      }
      require_pose(line, w[1]);
      return;
    }
    if (op == "MOVC") {
      if (w.size() != 4 || !speed_token(w[3], "V=")) {
        fail(line, "expected 'MOVC P<via> P<target> V=<speed>'");
        return;
      }
      require_pose(line, w[1]);
      require_pose(line, w[2]);
      return;
    }
    if (op == "MOVS") {
      if (w.size() < 4 || !speed_token(w.back(), "V=")) {
        fail(line, "expected 'MOVS P... P<target> V=<speed>'");
        return;
      }
      for (size_t i = 1; i + 1 < w.size(); ++i) require_pose(line, w[i]);
      return;
    }
    if (op == "DOUT") {
      const bool ok = w.size() == 3 && w[1].rfind("OT#(", 0) == 0 && w[1].back() == ')' &&
                      is_integer(w[1].substr(4, w[1].size() - 5)) &&
                      (w[2] == "ON" || w[2] == "OFF");
      if (!ok) fail(line, "expected 'DOUT OT#(<n>) ON|OFF'");
      return;
    }
    if (op == "TIMER") {
      const bool ok = w.size() == 2 && w[1].rfind("T=", 0) == 0 && is_number(w[1].substr(2));
      if (!ok) fail(line, "expected 'TIMER T=<seconds>'");
      return;
    }
    if (op == "SET") {
      if (w.size() != 3 || !is_counter_var(w[1]) || !is_integer(w[2]))
        fail(line, "expected 'SET <var> <int>'");
      return;
    }
    if (op == "DEC" || op == "INC") {
      if (w.size() != 2 || !is_counter_var(w[1]))
        fail(line, "expected '" + op + " <var>'");
      return;
    }
    if (is_label_token(op)) {
      if (w.size() != 1) fail(line, "label must stand alone");
      return;
    }
    if (op == "JUMP") {
      if (w.size() != 2 && w.size() != 4) {
        fail(line, "expected 'JUMP *LABEL<n> [IF <cond>]'");
        return;
      }
      if (!is_label_token(w[1])) {
        fail(line, "expected a '*LABEL<n>' jump target");
        return;
      }
      if (!labels_.count(w[1].substr(1)))
        fail(line, "label '" + w[1] + "' is not defined");
      if (w.size() == 4) {
        if (w[2] != "IF" || !condition(w[3]))
          fail(line, "bad jump condition");
      }
      return;
    }
    if (op == "IMOV") {  // accepted, never produced
      if (w.size() != 4 || !speed_token(w[2], "V=") || w[3] != "TF")
        fail(line, "expected 'IMOV P<nnnn> V=<speed> TF'");
      else
        require_pose(line, w[1]);
      return;
    }
    if (op == "ADD") {  // accepted, never produced
      if (w.size() != 3) {
        fail(line, "expected 'ADD P<a> P<b>'");
        return;
      }
      require_pose(line, w[1]);
      require_pose(line, w[2]);
      return;
    }
    if (op == "NOP") {
      fail(line, "NOP is only valid once, after //INST");
      return;
    }
    fail(line, "unknown instruction '" + op + "'");
  }

  bool condition(const std::string& token) {
    const size_t op = token.find_first_of("=>");
    if (op == std::string::npos) return false;
    return is_counter_var(token.substr(0, op)) && is_integer(token.substr(op + 1));
  }

  std::vector<Diagnostic> diags_;
  std::set<std::string> declared_;
  std::set<std::string> labels_;
};

// ---------------------------------------------------------------------------
// RAPID-style

class RapidChecker {
public:
  std::vector<Diagnostic> check(const std::vector<TextLine>& lines) {
    if (lines.empty()) return {{1, "empty program"}};
    size_t i = 0;

    {
      const auto w = words(lines[i].text);
      if (w.size() == 2 && w[0] == "MODULE" && is_identifier(w[1]))
        ++i;
      else
        fail(lines[i], "expected 'MODULE <name>'");
    }

    while (i < lines.size() && lines[i].text.rfind("CONST robtarget ", 0) == 0) {
      check_robtarget(lines[i]);
      ++i;
    }

    if (i < lines.size() && lines[i].text == "PROC main()")
      ++i;
    else
      fail(i < lines.size() ? lines[i] : lines.back(), "expected 'PROC main()'");

    int for_depth = 0;
    bool in_proc = true;
    for (; i < lines.size(); ++i) {
      const std::string& text = lines[i].text;
      if (text == "ENDPROC") {
        if (for_depth != 0) fail(lines[i], "FOR without ENDFOR");
        in_proc = false;
        ++i;
        break;
      }
      check_statement(lines[i], for_depth);
    }
    if (in_proc)
      fail(lines.back(), "missing ENDPROC");

    if (i < lines.size() && lines[i].text == "ENDMODULE") {
      if (i + 1 < lines.size()) fail(lines[i + 1], "content after ENDMODULE");
    } else {
      fail(lines.back(), "missing ENDMODULE");
    }
    return std::move(diags_);
  }

private:
  void fail(const TextLine& line, const std::string& msg) {
    diags_.push_back({line.number, msg});
  }

  /// [[x,y,z],[qw,qx,qy,qz],[c,c,c,c],[e,e,e,e,e,e]]
  void check_robtarget(const TextLine& line) {
    std::string rest = line.text.substr(std::string("CONST robtarget ").size());
    const size_t assign = rest.find(":=");
    if (assign == std::string::npos) {
      fail(line, "expected ':=' in robtarget declaration");
      return;
    }
    const std::string name = rest.substr(0, assign);
    if (!is_pose_name(name)) {
      fail(line, "bad robtarget name '" + name + "'");
      return;
    }
    if (!declared_.insert(name).second) fail(line, "duplicate robtarget '" + name + "'");
    std::string value = rest.substr(assign + 2);
    if (value.empty() || value.back() != ';') {
      fail(line, "robtarget declaration must end with ';'");
      return;
    }
    value.pop_back();
    const std::vector<size_t> expected_counts = {3, 4, 4, 6};
    if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
      fail(line, "robtarget value must be a bracketed list");
      return;
    }
    std::string inner = value.substr(1, value.size() - 2);
    size_t group = 0;
    size_t pos = 0;
    while (pos < inner.size() && group < 4) {
      if (inner[pos] != '[') {
        fail(line, "expected '[' in robtarget value");
        return;
      }
      const size_t close = inner.find(']', pos);
      if (close == std::string::npos) {
        fail(line, "unbalanced brackets in robtarget value");
        return;
      }
      const auto nums = split(inner.substr(pos + 1, close - pos - 1), ',');
      if (nums.size() != expected_counts[group]) {
        fail(line, "robtarget group " + std::to_string(group + 1) + " needs " +
                       std::to_string(expected_counts[group]) + " values");
        return;
      }
      for (const auto& n : nums)
        if (!is_number(n)) fail(line, "bad number '" + n + "' in robtarget");
      ++group;
      pos = close + 1;
      if (pos < inner.size() && inner[pos] == ',') ++pos;
    }
    if (group != 4) fail(line, "robtarget value needs 4 bracketed groups");
  }

  void require_pose(const TextLine& line, const std::string& token) {
    if (!is_pose_name(token)) {
      fail(line, "expected a pose name, got '" + token + "'");
      return;
    }
    if (!declared_.count(token)) fail(line, "pose '" + token + "' is not declared");
  }

  bool speed_term(const std::string& token) {
    return token.size() >= 2 && token[0] == 'v' && all_digits(token.substr(1));
  }

  void check_statement(const TextLine& line, int& for_depth) {
    const std::string& text = line.text;
    const size_t space = text.find(' ');
    const std::string op = text.substr(0, space == std::string::npos ? text.size() : space);

    if (op == "FOR") {
      const auto w = words(text);
      const bool ok = w.size() == 7 && is_identifier(w[1]) && w[2] == "FROM" &&
                      is_integer(w[3]) && w[4] == "TO" && is_integer(w[5]) && w[6] == "DO";
      if (!ok)
        fail(line, "expected 'FOR <var> FROM <a> TO <b> DO'");
      else
        ++for_depth;
      return;
    }
    if (op == "ENDFOR") {
      if (text != "ENDFOR")
        fail(line, "expected 'ENDFOR'");
      else if (for_depth == 0)
        fail(line, "ENDFOR without FOR");
      else
        --for_depth;
      return;
    }

    if (text.empty() || text.back() != ';') {
      fail(line, "statement must end with ';'");
      return;
    }
    const std::string body = text.substr(0, text.size() - 1);

    if (op == "MoveJ" || op == "MoveL") {
      const auto args = split(body.substr(op.size() + 1), ',');
      if (args.size() != 4 || !speed_term(args[1]) || args[2] != "fine" ||
          args[3] != "tool0") {
        fail(line, "expected '" + op + " P<nnnn>,v<speed>,fine,tool0;'");
        return;
      }
      require_pose(line, args[0]);
      return;
    }
    if (op == "MoveC") {
      const auto args = split(body.substr(op.size() + 1), ',');
      if (args.size() != 5 || !speed_term(args[2]) || args[3] != "fine" ||
          args[4] != "tool0") {
        fail(line, "expected 'MoveC P<via>,P<target>,v<speed>,fine,tool0;'");
        return;
      }
      require_pose(line, args[0]);
      require_pose(line, args[1]);
      return;
    }
    if (op == "MoveSpl") {
      const std::string rest = body.substr(op.size() + 1);
      if (rest.empty() || rest.front() != '[') {
        fail(line, "expected 'MoveSpl [P...],P<target>,v<speed>,fine,tool0;'");
        return;
      }
      const size_t close = rest.find(']');
      if (close == std::string::npos || close + 1 >= rest.size() ||
          rest[close + 1] != ',') {
        fail(line, "expected 'MoveSpl [P...],P<target>,v<speed>,fine,tool0;'");
        return;
      }
      for (const auto& via : split(rest.substr(1, close - 1), ','))
        require_pose(line, via);
      const auto args = split(rest.substr(close + 2), ',');
      if (args.size() != 4 || !speed_term(args[1]) || args[2] != "fine" ||
          args[3] != "tool0") {
        fail(line, "expected 'MoveSpl [P...],P<target>,v<speed>,fine,tool0;'");
        return;
      }
      require_pose(line, args[0]);
      return;
    }
    if (op == "SetDO") {
      const auto args = split(body.substr(op.size() + 1), ',');
      const bool ok = args.size() == 2 && args[0].rfind("do", 0) == 0 &&
                      all_digits(args[0].substr(2)) && (args[1] == "0" || args[1] == "1");
      if (!ok) fail(line, "expected 'SetDO do<n>,0|1;'");
      return;
    }
    if (op == "WaitTime") {
      if (!is_number(body.substr(op.size() + 1)))
        fail(line, "expected 'WaitTime <seconds>;'");
      return;
    }
    fail(line, "unknown statement '" + op + "'");
  }

  std::vector<Diagnostic> diags_;
  std::set<std::string> declared_;
};

}  // namespace

std::vector<Diagnostic> check_program(std::string_view text, Dialect dialect) {
  const std::vector<TextLine> lines = split_lines(text);
  if (dialect == Dialect::inform) return InformChecker{}.check(lines);
  return RapidChecker{}.check(lines);
}

}  // namespace olp
