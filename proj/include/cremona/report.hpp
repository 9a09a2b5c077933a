#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/stability.hpp"

namespace cremona {

enum class ReportFormat { Text, Json };

/// Knobs shared by every CLI command. Defaults mirror the library caps.
struct RunConfig {
  int orbit_cap = kOrbitCapDefault;
  int round_cap = kRoundCapDefault;
  int jet_cap = kJetCapDefault;
  std::string method = "orbits";  // or "graph"
  int functoriality_n = 4;
  Rat root_width = kRootWidthDefault;
  ReportFormat output = ReportFormat::Text;
  std::string cache_dir;  // empty: no tower cache

  /// IoError unless caps >= 1, root_width > 0, and method is known.
  void validate() const;
};

/// Minimal canonical JSON emission. Values passed in are already rendered
/// JSON; object() sorts its fields by key, so output bytes never depend on
/// construction order.
namespace jsonfmt {

std::string quote(const std::string& s);
std::string array(const std::vector<std::string>& items);
std::string object(std::vector<std::pair<std::string, std::string>> fields);

}  // namespace jsonfmt

/// Rendering blocks shared by serialize_report and the CLI front end.
/// Matrix entries are emitted row-major as decimal strings; intervals keep
/// their exact rational endpoints.
std::string matrix_json(const IntMat& m);
std::string matrix_text(const IntMat& m, const std::string& indent);
std::string interval_json(const RatInterval& iv);
std::string interval_text(const RatInterval& iv);
std::string triple_json(const DestabTriple& t);
std::string triple_text(const DestabTriple& t, const std::string& indent);

/// Single-line machine-parsable failure reason: "error: <code>: <detail>".
std::string error_line(const Error& e);

/// Caveat attached to every dynamical-degree figure: the interval encloses
/// the spectral radius of the final pullback, which is the dynamical degree
/// only when the stability certificate stands.
std::string dyn_degree_note(const StabilityReport& r);

/// Canonical serialization: identical bytes for identical report and
/// format. JSON carries a schema field (currently 1) and sorted keys; text
/// is a fixed line layout. The dynamical degree line always states whether
/// the stability certificate backs it.
std::string serialize_report(const StabilityReport& r, ReportFormat fmt);

}  // namespace cremona
