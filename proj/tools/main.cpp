// Command-line front end: each subcommand loads one map file, runs the
// corresponding library entry point, and prints a deterministic report.
// Exit codes: 0 stable or complete, 2 unstable (witness printed), 3
// undecided at the configured caps, 1 bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cremona/mapfile.hpp"
#include "cremona/report.hpp"

namespace {

using namespace cremona;

struct Options {
  std::string path;
  std::string root_width_src;
  RunConfig cfg;
};

LiftedMap plane_lift(const PlaneMap& f) {
  return LiftedMap{f, BlowupSurface{}, BlowupSurface{}};
}

// Cap overruns mean "undecided at this budget", not malformed input.
int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::RoundCapExceeded:
    case ErrorCode::OrbitCapExceeded:
    case ErrorCode::JetCapExceeded:
      return 3;
    default:
      return 1;
  }
}

int status_exit(const StabilityStatus& s) {
  if (std::holds_alternative<Stable>(s)) return 0;
  if (std::holds_alternative<Unstable>(s)) return 2;
  return 3;
}

std::string join3(const std::array<std::string, 3>& a) {
  return a[0] + ", " + a[1] + ", " + a[2];
}

void add_common_flags(CLI::App* c, Options& o) {
  c->add_option("map", o.path, "map file to load")->required();
  c->add_option("--orbit-cap", o.cfg.orbit_cap,
                "orbit search budget per contracted curve");
  c->add_option("--round-cap", o.cfg.round_cap,
                "maximum rounds of blowups or lifts");
  c->add_option("--jet-cap", o.cfg.jet_cap,
                "degree budget for local germ computations");
  c->add_option("--method", o.cfg.method,
                "stabilization style: orbits or graph");
  c->add_option("--functoriality-n", o.cfg.functoriality_n,
                "compare (f^*)^m with (f^m)^* for m up to this");
  c->add_option("--root-width", o.root_width_src,
                "enclosure width for the dynamical degree, as a rational");
  c->add_option("--output", o.cfg.output, "report format")
      ->transform(CLI::CheckedTransformer(
          std::vector<std::pair<std::string, ReportFormat>>{
              {"text", ReportFormat::Text}, {"json", ReportFormat::Json}},
          CLI::ignore_case));
  c->add_option("--cache-dir", o.cfg.cache_dir,
                "directory for cached resolved towers")
      ->envname("CREMONA_CACHE_DIR");
}

void finish_config(Options& o) {
  if (!o.root_width_src.empty()) {
    std::optional<Rat> w = parse_rat(o.root_width_src);
    if (!w) fail(ErrorCode::IoError, "root-width must be a rational number");
    o.cfg.root_width = *w;
  }
  o.cfg.validate();
}

std::string status_name(const StabilityStatus& s) {
  if (std::holds_alternative<Stable>(s)) return "stable";
  if (std::holds_alternative<Unstable>(s)) return "unstable";
  return "unknown";
}

// The search alone decides the status here: triples are an instability
// witness, an empty certified search is stability, anything capped stays
// undecided.
StabilityStatus search_status(const DestabSearch& search, int orbit_cap) {
  if (!search.triples.empty()) return Unstable{search.triples.front()};
  if (search.certified()) return Stable{orbit_cap};
  return Unknown{"orbit search still undecided at the cap for " +
                 search.capped.front().to_string()};
}

int cmd_analyze(const Options& o) {
  MapFile mf = load_map_file(o.path);
  IndeterminacyResult ind =
      indeterminacy_points(mf.map, mf.indeterminacy_hints);
  std::vector<ContractedCurve> exc =
      exceptional_curves(mf.map, mf.exceptional_hints);
  DestabSearch search =
      find_destabilising(plane_lift(mf.map), o.cfg.orbit_cap, o.cfg.jet_cap);
  StabilityStatus status = search_status(search, o.cfg.orbit_cap);

  if (o.cfg.output == ReportFormat::Json) {
    std::vector<std::string> pts, curves, triples, capped, notes;
    for (const ProjPoint& p : ind.points)
      pts.push_back(jsonfmt::quote(p.to_string()));
    for (const ContractedCurve& c : exc)
      curves.push_back(
          jsonfmt::object({{"curve", jsonfmt::quote(c.curve.to_string())},
                           {"image", jsonfmt::quote(c.image.to_string())}}));
    for (const DestabTriple& t : search.triples)
      triples.push_back(triple_json(t));
    for (const SurfaceCurve& c : search.capped)
      capped.push_back(jsonfmt::quote(c.to_string()));
    for (const std::string& n : ind.residual.notes)
      notes.push_back(jsonfmt::quote(n));
    std::cout << jsonfmt::object(
                     {{"schema", "1"},
                      {"name", jsonfmt::quote(mf.name)},
                      {"components", jsonfmt::quote(join3(mf.components))},
                      {"indeterminacy", jsonfmt::array(pts)},
                      {"exceptional", jsonfmt::array(curves)},
                      {"destabilising", jsonfmt::array(triples)},
                      {"undecided", jsonfmt::array(capped)},
                      {"notes", jsonfmt::array(notes)},
                      {"status", jsonfmt::quote(status_name(status))}})
              << "\n";
  } else {
    std::cout << "map: " << mf.name << "\n";
    std::cout << "components: " << join3(mf.components) << "\n";
    std::cout << "indeterminacy points (" << ind.points.size() << "):\n";
    for (const ProjPoint& p : ind.points)
      std::cout << "  " << p.to_string() << "\n";
    std::cout << "exceptional curves (" << exc.size() << "):\n";
    for (const ContractedCurve& c : exc)
      std::cout << "  " << c.curve.to_string() << " -> " << c.image.to_string()
                << "\n";
    for (const std::string& n : ind.residual.notes)
      std::cout << "note: " << n << "\n";
    std::cout << "destabilising orbits (" << search.triples.size() << "):\n";
    for (const DestabTriple& t : search.triples)
      std::cout << triple_text(t, "  ");
    std::cout << "undecided at orbit cap (" << search.capped.size() << "):\n";
    for (const SurfaceCurve& c : search.capped)
      std::cout << "  " << c.to_string() << "\n";
    std::cout << "status: " << status_name(status) << "\n";
  }
  return status_exit(status);
}

int cmd_resolve(const Options& o) {
  MapFile mf = load_map_file(o.path);
  SmoothGraph G = resolve(plane_lift(mf.map), o.cfg.round_cap);

  // The cache never shortcuts the computation; it only stores the result,
  // and a cached file is reported as verified only after matching a fresh
  // resolution byte for byte.
  std::string cache_note = "off";
  if (!o.cfg.cache_dir.empty()) {
    std::filesystem::create_directories(o.cfg.cache_dir);
    std::string tower_path = o.cfg.cache_dir + "/" + mf.name + ".tower";
    std::string fresh = print_tower(G.sigma);
    bool verified = false;
    std::ifstream in(tower_path, std::ios::binary);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      verified = ss.str() == fresh;
    }
    if (verified) {
      cache_note = "verified";
    } else {
      std::ofstream out(tower_path, std::ios::binary);
      if (!out) fail(ErrorCode::IoError, "cannot write " + tower_path);
      out << fresh;
      cache_note = "written";
    }
  }

  if (o.cfg.output == ReportFormat::Json) {
    std::vector<std::string> records;
    for (const SurfacePoint& p : G.sigma.centers())
      records.push_back(jsonfmt::quote(print_point_record(p)));
    std::cout << jsonfmt::object(
                     {{"schema", "1"},
                      {"name", jsonfmt::quote(mf.name)},
                      {"comp_alpha", std::to_string(G.comp_alpha)},
                      {"comp_beta", std::to_string(G.comp_beta)},
                      {"tower", jsonfmt::array(records)},
                      {"cache", jsonfmt::quote(cache_note)}})
              << "\n";
  } else {
    std::cout << "map: " << mf.name << "\n";
    std::cout << "comp alpha: " << G.comp_alpha << "\n";
    std::cout << "comp beta: " << G.comp_beta << "\n";
    std::cout << "tower (" << G.sigma.centers().size() << "):\n";
    for (const SurfacePoint& p : G.sigma.centers())
      std::cout << "  " << print_point_record(p) << "\n";
    if (cache_note != "off") std::cout << "cache: " << cache_note << "\n";
  }
  return 0;
}

StabilityReport run_stabilize(const Options& o, const PlaneMap& f) {
  if (o.cfg.method == "graph")
    return stabilize_graph(plane_lift(f), o.cfg.orbit_cap, o.cfg.round_cap,
                           o.cfg.root_width, o.cfg.jet_cap);
  return stabilize_judicious(plane_lift(f), o.cfg.orbit_cap, o.cfg.round_cap,
                             o.cfg.root_width, o.cfg.jet_cap);
}

int cmd_stabilize(const Options& o) {
  MapFile mf = load_map_file(o.path);
  StabilityReport rep = run_stabilize(o, mf.map);
  if (o.cfg.output == ReportFormat::Json) {
    std::cout << serialize_report(rep, ReportFormat::Json) << "\n";
  } else {
    std::cout << "map: " << mf.name << "\n"
              << serialize_report(rep, ReportFormat::Text);
  }
  return status_exit(rep.status);
}

int cmd_pullback(const Options& o) {
  MapFile mf = load_map_file(o.path);
  PullbackMatrix P = map_pullback(plane_lift(mf.map));
  UniPoly cp = char_poly(P.m);
  Int det = mat_det(P.m);
  if (o.cfg.output == ReportFormat::Json) {
    std::cout << jsonfmt::object(
                     {{"schema", "1"},
                      {"name", jsonfmt::quote(mf.name)},
                      {"pullback", matrix_json(P.m)},
                      {"det", jsonfmt::quote(to_string(det))},
                      {"char_poly", jsonfmt::quote(cp.to_string("x"))}})
              << "\n";
  } else {
    std::cout << "map: " << mf.name << "\n";
    std::cout << "pullback (" << P.m.size() << "x"
              << (P.m.empty() ? 0 : P.m[0].size()) << "):\n";
    std::cout << matrix_text(P.m, "  ");
    std::cout << "det: " << to_string(det) << "\n";
    std::cout << "char poly: " << cp.to_string("x") << "\n";
  }
  return 0;
}

int cmd_check(const Options& o) {
  MapFile mf = load_map_file(o.path);
  std::vector<FunctorialityCheck> checks =
      check_functoriality(plane_lift(mf.map), o.cfg.functoriality_n);
  DestabSearch search =
      find_destabilising(plane_lift(mf.map), o.cfg.orbit_cap, o.cfg.jet_cap);
  bool all_equal = true;
  for (const FunctorialityCheck& c : checks) all_equal = all_equal && c.equal;
  StabilityStatus status = search_status(search, o.cfg.orbit_cap);
  // A failed power identity is itself an instability witness, whatever the
  // orbit search managed to certify.
  int code = status_exit(status);
  if (!all_equal) code = 2;

  if (o.cfg.output == ReportFormat::Json) {
    std::vector<std::string> rows, triples;
    for (const FunctorialityCheck& c : checks)
      rows.push_back(
          jsonfmt::object({{"m", std::to_string(c.m)},
                           {"equal", c.equal ? "true" : "false"}}));
    for (const DestabTriple& t : search.triples)
      triples.push_back(triple_json(t));
    std::cout << jsonfmt::object(
                     {{"schema", "1"},
                      {"name", jsonfmt::quote(mf.name)},
                      {"functoriality", jsonfmt::array(rows)},
                      {"destabilising", jsonfmt::array(triples)},
                      {"status", jsonfmt::quote(status_name(status))}})
              << "\n";
  } else {
    std::cout << "map: " << mf.name << "\n";
    std::cout << "functoriality:\n";
    for (const FunctorialityCheck& c : checks)
      std::cout << "  m=" << c.m << ": " << (c.equal ? "equal" : "unequal")
                << "\n";
    std::cout << "destabilising orbits (" << search.triples.size() << "):\n";
    for (const DestabTriple& t : search.triples)
      std::cout << triple_text(t, "  ");
    std::cout << "status: " << status_name(status) << "\n";
  }
  return code;
}

int cmd_dyndeg(const Options& o) {
  MapFile mf = load_map_file(o.path);
  StabilityReport rep = run_stabilize(o, mf.map);
  if (o.cfg.output == ReportFormat::Json) {
    std::cout << jsonfmt::object(
                     {{"schema", "1"},
                      {"name", jsonfmt::quote(mf.name)},
                      {"dyn_degree", interval_json(rep.dyn_degree)},
                      {"dyn_degree_note", jsonfmt::quote(dyn_degree_note(rep))},
                      {"status", jsonfmt::quote(status_name(rep.status))}})
              << "\n";
  } else {
    std::cout << "map: " << mf.name << "\n";
    std::cout << "dynamical degree: " << interval_text(rep.dyn_degree) << "  ("
              << dyn_degree_note(rep) << ")\n";
  }
  return status_exit(rep.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birational plane map analyzer"};
  app.require_subcommand(1);
  Options o;

  CLI::App* c_analyze = app.add_subcommand(
      "analyze", "indeterminacy, contracted curves, destabilising orbits");
  CLI::App* c_resolve =
      app.add_subcommand("resolve", "resolve indeterminacy through blowups");
  CLI::App* c_stabilize =
      app.add_subcommand("stabilize", "stabilize and report the full model");
  CLI::App* c_pullback =
      app.add_subcommand("pullback", "pullback matrix on the plane");
  CLI::App* c_check =
      app.add_subcommand("check", "compare (f^*)^m with (f^m)^*");
  CLI::App* c_dyndeg =
      app.add_subcommand("dyndeg", "dynamical degree after stabilizing");
  for (CLI::App* c : {c_analyze, c_resolve, c_stabilize, c_pullback, c_check,
                      c_dyndeg})
    add_common_flags(c, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::string msg = e.what();
    for (char& ch : msg)
      if (ch == '\n' || ch == '\r') ch = ' ';
    std::cerr << "error: IoError: " << msg << "\n";
    return 1;
  }

  try {
    finish_config(o);
    if (app.got_subcommand(c_analyze)) return cmd_analyze(o);
    if (app.got_subcommand(c_resolve)) return cmd_resolve(o);
    if (app.got_subcommand(c_stabilize)) return cmd_stabilize(o);
    if (app.got_subcommand(c_pullback)) return cmd_pullback(o);
    if (app.got_subcommand(c_check)) return cmd_check(o);
    if (app.got_subcommand(c_dyndeg)) return cmd_dyndeg(o);
    std::cerr << "error: IoError: no command selected\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << error_line(e) << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& ch : msg)
      if (ch == '\n' || ch == '\r') ch = ' ';
    std::cerr << "error: InternalError: " << msg << "\n";
    return 1;
  }
}
