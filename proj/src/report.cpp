#include "cremona/report.hpp"

#include <algorithm>
#include <cstdio>

#include "cremona/mapfile.hpp"

namespace cremona {

void RunConfig::validate() const {
  if (orbit_cap < 1) fail(ErrorCode::IoError, "orbit-cap must be at least 1");
  if (round_cap < 1) fail(ErrorCode::IoError, "round-cap must be at least 1");
  if (jet_cap < 1) fail(ErrorCode::IoError, "jet-cap must be at least 1");
  if (method != "orbits" && method != "graph")
    fail(ErrorCode::IoError, "method must be 'orbits' or 'graph'");
  if (functoriality_n < 1)
    fail(ErrorCode::IoError, "functoriality-n must be at least 1");
  if (root_width <= 0) fail(ErrorCode::IoError, "root-width must be positive");
}

namespace jsonfmt {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "]";
}

std::string object(std::vector<std::pair<std::string, std::string>> fields) {
  std::sort(fields.begin(), fields.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out = "{";
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += quote(fields[i].first) + ":" + fields[i].second;
  }
  return out + "}";
}

}  // namespace jsonfmt

std::string matrix_json(const IntMat& m) {
  std::vector<std::string> rows;
  for (const auto& row : m) {
    std::vector<std::string> cells;
    for (const Int& v : row) cells.push_back(jsonfmt::quote(to_string(v)));
    rows.push_back(jsonfmt::array(cells));
  }
  size_t cols = m.empty() ? 0 : m[0].size();
  return jsonfmt::object({{"rows", std::to_string(m.size())},
                          {"cols", std::to_string(cols)},
                          {"entries", jsonfmt::array(rows)}});
}

std::string matrix_text(const IntMat& m, const std::string& indent) {
  std::string out;
  for (const auto& row : m) {
    out += indent;
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += " ";
      out += to_string(row[j]);
    }
    out += "\n";
  }
  return out;
}

std::string interval_json(const RatInterval& iv) {
  return jsonfmt::object({{"lo", jsonfmt::quote(to_string(iv.lo))},
                          {"hi", jsonfmt::quote(to_string(iv.hi))}});
}

std::string interval_text(const RatInterval& iv) {
  return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

std::string triple_json(const DestabTriple& t) {
  std::vector<std::string> orbit;
  for (const SurfacePoint& p : t.orbit)
    orbit.push_back(jsonfmt::quote(print_point_record(p)));
  return jsonfmt::object(
      {{"curve", jsonfmt::quote(t.curve_c.to_string())},
       {"orbit", jsonfmt::array(orbit)},
       {"terminal", jsonfmt::quote(print_point_record(t.terminal_q))},
       {"inverse_curve", jsonfmt::quote(t.curve_d.to_string())},
       {"length", std::to_string(t.length)}});
}

std::string triple_text(const DestabTriple& t, const std::string& indent) {
  std::string out;
  out += indent + "curve: " + t.curve_c.to_string() + "\n";
  out += indent + "orbit:";
  for (const SurfacePoint& p : t.orbit) out += " " + print_point_record(p);
  out += "\n";
  out += indent + "terminal: " + print_point_record(t.terminal_q) + "\n";
  out += indent + "inverse curve: " + t.curve_d.to_string() + "\n";
  out += indent + "length: " + std::to_string(t.length) + "\n";
  return out;
}

std::string error_line(const Error& e) {
  std::string msg = e.what();
  for (char& ch : msg)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return std::string("error: ") + error_code_name(e.code()) + ": " + msg;
}

namespace {

const Stable* as_stable(const StabilityStatus& s) {
  return std::get_if<Stable>(&s);
}

}  // namespace

std::string dyn_degree_note(const StabilityReport& r) {
  if (const Stable* st = as_stable(r.status))
    return "conditional on the stability certificate at orbit cap " +
           std::to_string(st->orbit_cap);
  return "uncertified: stability not established at this cap";
}

std::string serialize_report(const StabilityReport& r, ReportFormat fmt) {
  std::string status = std::holds_alternative<Stable>(r.status)  ? "stable"
                       : std::holds_alternative<Unstable>(r.status)
                           ? "unstable"
                           : "unknown";
  if (fmt == ReportFormat::Json) {
    std::vector<std::string> log;
    for (const SurfacePoint& p : r.blowup_log)
      log.push_back(jsonfmt::quote(print_point_record(p)));
    std::vector<std::pair<std::string, std::string>> fields = {
        {"schema", "1"},
        {"status", jsonfmt::quote(status)},
        {"rounds_used", std::to_string(r.rounds_used)},
        {"comp_alpha", std::to_string(r.comp_alpha)},
        {"blowup_log", jsonfmt::array(log)},
        {"pullback", matrix_json(r.pullback.m)},
        {"char_poly", jsonfmt::quote(r.char_poly.to_string("x"))},
        {"dyn_degree", interval_json(r.dyn_degree)},
        {"dyn_degree_note", jsonfmt::quote(dyn_degree_note(r))},
    };
    if (const Stable* st = as_stable(r.status))
      fields.push_back({"orbit_cap", std::to_string(st->orbit_cap)});
    if (const Unstable* u = std::get_if<Unstable>(&r.status))
      fields.push_back({"witness", triple_json(u->witness)});
    if (const Unknown* un = std::get_if<Unknown>(&r.status))
      fields.push_back({"reason", jsonfmt::quote(un->reason)});
    return jsonfmt::object(fields);
  }

  std::string out = "status: " + status + "\n";
  if (const Stable* st = as_stable(r.status))
    out += "orbit cap: " + std::to_string(st->orbit_cap) + "\n";
  if (const Unstable* u = std::get_if<Unstable>(&r.status))
    out += "witness:\n" + triple_text(u->witness, "  ");
  if (const Unknown* un = std::get_if<Unknown>(&r.status))
    out += "reason: " + un->reason + "\n";
  out += "rounds used: " + std::to_string(r.rounds_used) + "\n";
  out += "comp alpha: " + std::to_string(r.comp_alpha) + "\n";
  out += "blowups:";
  for (const SurfacePoint& p : r.blowup_log)
    out += "\n  " + print_point_record(p);
  out += "\n";
  size_t n = r.pullback.m.size();
  size_t c = n ? r.pullback.m[0].size() : 0;
  out += "pullback (" + std::to_string(n) + "x" + std::to_string(c) + "):\n";
  out += matrix_text(r.pullback.m, "  ");
  out += "char poly: " + r.char_poly.to_string("x") + "\n";
  out += "dynamical degree: " + interval_text(r.dyn_degree) + "  (" +
         dyn_degree_note(r) + ")\n";
  return out;
}

}  // namespace cremona
