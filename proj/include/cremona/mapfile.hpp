#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/plane_map.hpp"
#include "cremona/tower.hpp"

namespace cremona {

/// In-memory form of a .map file: a named plane map, the raw expression
/// strings it came from, an optional declared inverse, and optional hints.
/// Hints are verified exactly during parsing, so a constructed MapFile is
/// always internally consistent.
struct MapFile {
  std::string name;
  std::array<std::string, 3> components;
  std::optional<std::array<std::string, 3>> inverse;
  std::vector<ProjPoint> indeterminacy_hints;
  std::vector<PlaneCurve> exceptional_hints;
  PlaneMap map;
};

/// Parses the sectioned key-value map format:
///
///   [map]
///   name = cremona
///   components = y*z, x*z, x*y
///   inverse = y*z, x*z, x*y
///
///   [hints]
///   indeterminacy = 1:0:0, 0:1:0, 0:0:1
///   exceptional = x, y, z
///
/// Blank lines and '#' comments are skipped; whitespace around tokens is
/// insignificant; [hints] and the inverse are optional. `origin` names the
/// input in error messages. IoError on malformed structure or unknown
/// keys; SyntaxError / NotHomogeneous from expression parsing; the hint
/// verification errors of indeterminacy_points and exceptional_curves when
/// a hint fails.
MapFile parse_map_file(const std::string& text, const std::string& origin);

/// Reads and parses one file; IoError when it cannot be read.
MapFile load_map_file(const std::string& path);

/// One tower center as "a:b:c" followed by one " cK:a,b" term per chain
/// entry, K being the chart tag.
std::string print_point_record(const SurfacePoint& p);
SurfacePoint parse_point_record(const std::string& src);

/// Ordered center list, one point record per line, '#' comments allowed.
/// Parsing replays the records through blowup(), so any list that does not
/// describe a valid tower is rejected (InvalidCenter).
std::string print_tower(const BlowupSurface& X);
BlowupSurface parse_tower(const std::string& text);

}  // namespace cremona
