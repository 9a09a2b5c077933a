#include "cremona/mapfile.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "cremona/errors.hpp"
#include "cremona/parse.hpp"

namespace cremona {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

[[noreturn]] void bad_file(const std::string& origin, int line,
                           const std::string& what) {
  fail(ErrorCode::IoError,
       origin + ":" + std::to_string(line) + ": " + what);
}

bool integer_token(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int(const std::string& s, const std::string& where) {
  if (!integer_token(s))
    fail(ErrorCode::IoError, where + ": not an integer: '" + s + "'");
  return Int(s);
}

ProjPoint parse_triple(const std::string& s, const std::string& where) {
  std::vector<std::string> parts = split_list(s, ':');
  if (parts.size() != 3)
    fail(ErrorCode::IoError, where + ": point needs three ':' fields: '" +
                                 s + "'");
  return make_point(parse_int(parts[0], where), parse_int(parts[1], where),
                    parse_int(parts[2], where));
}

// One parsed "key = value" with its source line for error reporting.
struct Entry {
  std::string value;
  int line = 0;
};

using Section = std::vector<std::pair<std::string, Entry>>;

std::map<std::string, Section> read_sections(const std::string& text,
                                             const std::string& origin) {
  std::map<std::string, Section> out;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        bad_file(origin, lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "map" && section != "hints")
        bad_file(origin, lineno, "unknown section [" + section + "]");
      out[section];
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      bad_file(origin, lineno, "expected 'key = value'");
    if (section.empty())
      bad_file(origin, lineno, "key outside any section");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) bad_file(origin, lineno, "empty key");
    out[section].push_back({key, Entry{value, lineno}});
  }
  return out;
}

std::array<std::string, 3> component_list(const Entry& e,
                                          const std::string& origin,
                                          const std::string& key) {
  std::vector<std::string> parts = split_list(e.value, ',');
  if (parts.size() != 3)
    bad_file(origin, e.line, key + " needs exactly three expressions");
  return {parts[0], parts[1], parts[2]};
}

}  // namespace

MapFile parse_map_file(const std::string& text, const std::string& origin) {
  std::map<std::string, Section> sections = read_sections(text, origin);
  if (!sections.count("map"))
    fail(ErrorCode::IoError, origin + ": missing [map] section");

  std::string name;
  std::optional<std::array<std::string, 3>> comps, inverse;
  for (const auto& [key, entry] : sections["map"]) {
    if (key == "name") {
      if (!name.empty()) bad_file(origin, entry.line, "duplicate name");
      name = entry.value;
      if (name.empty()) bad_file(origin, entry.line, "empty name");
    } else if (key == "components") {
      if (comps) bad_file(origin, entry.line, "duplicate components");
      comps = component_list(entry, origin, key);
    } else if (key == "inverse") {
      if (inverse) bad_file(origin, entry.line, "duplicate inverse");
      inverse = component_list(entry, origin, key);
    } else {
      bad_file(origin, entry.line, "unknown key '" + key + "' in [map]");
    }
  }
  if (name.empty()) fail(ErrorCode::IoError, origin + ": missing name");
  if (!comps) fail(ErrorCode::IoError, origin + ": missing components");

  std::vector<ProjPoint> ipoints;
  std::vector<PlaneCurve> ecurves;
  if (sections.count("hints")) {
    for (const auto& [key, entry] : sections["hints"]) {
      std::string where = origin + ":" + std::to_string(entry.line);
      if (key == "indeterminacy") {
        for (const std::string& tok : split_list(entry.value, ','))
          ipoints.push_back(parse_triple(tok, where));
      } else if (key == "exceptional") {
        for (const std::string& tok : split_list(entry.value, ','))
          ecurves.push_back(PlaneCurve(parse_form(tok)));
      } else {
        bad_file(origin, entry.line, "unknown key '" + key + "' in [hints]");
      }
    }
  }

  auto forms = [](const std::array<std::string, 3>& src) {
    return std::array<HomogPoly3, 3>{parse_form(src[0]), parse_form(src[1]),
                                     parse_form(src[2])};
  };
  PlaneMap map = inverse ? PlaneMap(forms(*comps), forms(*inverse))
                         : PlaneMap(forms(*comps));

  // Hints must verify exactly for the file to load at all.
  indeterminacy_points(map, ipoints);
  exceptional_curves(map, ecurves);

  return MapFile{name, *comps, inverse, ipoints, ecurves, map};
}

MapFile load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot read map file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map_file(buf.str(), path);
}

std::string print_point_record(const SurfacePoint& p) {
  std::string out = to_string(p.base.c[0]) + ":" + to_string(p.base.c[1]) +
                    ":" + to_string(p.base.c[2]);
  for (const Direction& d : p.chain)
    out += " c" + std::to_string(d.chart) + ":" + to_string(d.a) + "," +
           to_string(d.b);
  return out;
}

SurfacePoint parse_point_record(const std::string& src) {
  std::istringstream in(trim(src));
  std::string tok;
  if (!(in >> tok))
    fail(ErrorCode::IoError, "empty point record");
  SurfacePoint p = plane_point(parse_triple(tok, "point record"));
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 'c')
      fail(ErrorCode::IoError, "bad direction term '" + tok + "'");
    size_t colon = tok.find(':');
    if (colon == std::string::npos)
      fail(ErrorCode::IoError, "bad direction term '" + tok + "'");
    std::string chart = tok.substr(1, colon - 1);
    if (chart != "1" && chart != "2")
      fail(ErrorCode::IoError, "bad chart tag in '" + tok + "'");
    std::vector<std::string> ab = split_list(tok.substr(colon + 1), ',');
    if (ab.size() != 2)
      fail(ErrorCode::IoError, "bad direction term '" + tok + "'");
    Direction d = make_direction(parse_int(ab[0], "direction"),
                                 parse_int(ab[1], "direction"));
    if (d.chart != chart[0] - '0')
      fail(ErrorCode::IoError, "direction '" + tok +
                                   "' does not lie in chart " + chart);
    p.chain.push_back(d);
  }
  return p;
}

std::string print_tower(const BlowupSurface& X) {
  std::string out;
  for (const SurfacePoint& p : X.centers())
    out += print_point_record(p) + "\n";
  return out;
}

BlowupSurface parse_tower(const std::string& text) {
  BlowupSurface X;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    X = blowup(X, parse_point_record(raw));
  }
  return X;
}

}  // namespace cremona
