// Command-line front end: analyze an involution, trace its foliation, browse
// the gallery of worked examples.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invol/errors.hpp"
#include "invol/gallery.hpp"
#include "invol/plot.hpp"
#include "invol/report.hpp"

namespace {

constexpr int kExitPhaseError = 2;

struct SharedFlags {
  std::string map;
  std::string gallery;
  std::string window = "-5,5,-5,5";
  int grid = 41;
  double eps = invol::kDefaultEpsilon;
  double tol = 1e-9;
  int scan = invol::kDefaultScanN;
  int leaves = 0;
  double step = 1e-2;
};

void add_shared(CLI::App* cmd, SharedFlags& f) {
  auto* map = cmd->add_option("--map", f.map, "map as \"(f1, f2)\" in x, y, or gallery:NAME[:n]");
  auto* gal = cmd->add_option("--gallery", f.gallery, "gallery entry NAME[:n]");
  map->excludes(gal);
  cmd->add_option("--window", f.window, "XMIN,XMAX,YMIN,YMAX (use --window=... for negative bounds)")
      ->capture_default_str();
  cmd->add_option("--grid", f.grid, "samples per axis")->capture_default_str()->check(CLI::Range(2, 100000));
  cmd->add_option("--eps", f.eps, "epsilon of condition A(b)")->capture_default_str();
  cmd->add_option("--tol", f.tol, "involution residual tolerance")->capture_default_str();
  cmd->add_option("--scan", f.scan, "injectivity scan samples per axis")->capture_default_str()->check(CLI::Range(2, 100000));
  cmd->add_option("--leaves", f.leaves, "number of leaves to trace");
  cmd->add_option("--step", f.step, "continuation step in the linearized plane")->capture_default_str();
}

invol::Region parse_window(const std::string& text, int grid) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw invol::PhaseError("config", "malformed --window value '" + text + "'");
    }
  }
  if (v.size() != 4) throw invol::PhaseError("config", "--window needs XMIN,XMAX,YMIN,YMAX");
  invol::Region r{v[0], v[1], v[2], v[3], grid};
  try {
    r.validate();
  } catch (const std::exception& e) {
    throw invol::PhaseError("config", e.what());
  }
  return r;
}

invol::AnalyzeOptions to_options(const SharedFlags& f) {
  invol::AnalyzeOptions o;
  if (!f.gallery.empty()) o.map_spec = "gallery:" + f.gallery;
  else if (!f.map.empty()) o.map_spec = f.map;
  else throw invol::PhaseError("config", "one of --map or --gallery is required");
  o.window = parse_window(f.window, f.grid);
  o.epsilon = f.eps;
  o.tol = f.tol;
  o.scan_n = f.scan;
  o.leaves = f.leaves;
  o.step = f.step;
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invol::PhaseError("output", "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw invol::PhaseError("output", "failed writing '" + path + "'");
}

int cmd_analyze(const SharedFlags& flags, const std::string& out_path, const std::string& rerun) {
  invol::AnalyzeOptions options;
  if (!rerun.empty()) {
    std::ifstream in(rerun);
    if (!in) throw invol::PhaseError("config", "cannot read report '" + rerun + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
      options = invol::options_from_json(doc.at("header"));
    } catch (const std::exception& e) {
      throw invol::PhaseError("config", std::string("cannot rerun from report: ") + e.what());
    }
  } else {
    options = to_options(flags);
  }

  const invol::AnalysisReport report = invol::run_analysis(options);
  const std::string text = invol::report_to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
    if (report.verdict) std::cout << "verdict: " << report.verdict->text << "\n";
    if (report.injectivity) std::cout << "injectivity: " << invol::to_string(report.injectivity->status) << "\n";
    std::cout << "report: " << out_path << "\n";
  }
  if (report.failed_phase) {
    std::cerr << "error [" << *report.failed_phase << "]: " << *report.error << "\n";
    return kExitPhaseError;
  }
  return EXIT_SUCCESS;
}

int cmd_foliate(const SharedFlags& flags, const std::string& svg_path, const std::string& csv_path, bool force) {
  const invol::AnalyzeOptions options = to_options(flags);
  const invol::FoliationRun run = invol::run_foliation(options, force);

  std::ostringstream csv;
  invol::write_leaf_csv(csv, run.leaves);
  std::ostringstream svg;
  invol::write_svg(svg, run.window, run.leaves, run.fixed_points);
  if (!csv_path.empty()) write_text(csv_path, csv.str());
  if (!svg_path.empty()) write_text(svg_path, svg.str());
  if (csv_path.empty() && svg_path.empty()) std::cout << csv.str();

  std::size_t truncated = 0;
  double worst_residual = 0.0;
  double worst_invariance = 0.0;
  for (std::size_t k = 0; k < run.leaves.size(); ++k) {
    if (run.leaves[k].truncated) ++truncated;
    worst_residual = std::max(worst_residual, run.leaves[k].residual);
    worst_invariance = std::max(worst_invariance, run.invariance[k]);
  }
  std::ostream& log = (csv_path.empty() && svg_path.empty()) ? std::cerr : std::cout;
  log << "foliation: " << invol::to_string(run.foliation.kind) << (run.certified ? "" : " (uncertified)") << "\n"
      << "verdict: " << run.verdict_text << "\n"
      << "leaves: " << run.leaves.size() << " traced, " << truncated << " truncated\n"
      << "max leaf residual: " << worst_residual << "\n"
      << "max invariance residual: " << worst_invariance << "\n";
  return EXIT_SUCCESS;
}

void print_entry(const invol::gallery::Entry& e) {
  std::cout << "name: " << e.name;
  if (e.n) std::cout << " (n = " << *e.n << ")";
  std::cout << "\n";
  if (!e.example_tag.empty()) std::cout << "example: " << e.example_tag << "\n";
  std::cout << "formula: " << e.formula << "\n"
            << "map: " << e.map.describe() << "\n"
            << "orientation: " << invol::to_string(e.expected.orientation) << "\n"
            << "expected verdict: " << e.expected.known_verdict << "\n";
  if (e.expected.known_h) std::cout << "standard map h: " << *e.expected.known_h << "\n";
  if (e.expected.known_foliation) std::cout << "foliation: " << *e.expected.known_foliation << "\n";
  const auto& w = e.default_window;
  std::cout << "default window: " << w.x_min << "," << w.x_max << "," << w.y_min << "," << w.y_max << "\n";
  if (!e.notes.empty()) std::cout << "notes: " << e.notes << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global linearization of planar involutions"};
  app.require_subcommand(1);

  SharedFlags analyze_flags;
  std::string out_path;
  std::string rerun;
  auto* analyze = app.add_subcommand("analyze", "verify, classify and certify a planar involution");
  add_shared(analyze, analyze_flags);
  analyze->add_option("--out", out_path, "write the JSON report here (default: stdout)");
  analyze->add_option("--rerun", rerun, "re-run the analysis recorded in a report's header");

  SharedFlags foliate_flags;
  std::string svg_path;
  std::string csv_path;
  bool force = false;
  auto* foliate = app.add_subcommand("foliate", "trace leaves of the invariant foliation");
  add_shared(foliate, foliate_flags);
  foliate->add_option("--svg", svg_path, "SVG portrait output");
  foliate->add_option("--csv", csv_path, "leaf CSV output");
  foliate->add_flag("--force", force, "trace even when no hypothesis is verified");

  auto* gallery = app.add_subcommand("gallery", "list or show built-in examples");
  gallery->require_subcommand(1);
  gallery->add_subcommand("list", "list entry names");
  std::string show_name;
  auto* show = gallery->add_subcommand("show", "print one entry");
  show->add_option("name", show_name, "NAME[:n]")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_flags, out_path, rerun);
    if (foliate->parsed()) return cmd_foliate(foliate_flags, svg_path, csv_path, force);
    if (gallery->got_subcommand("list")) {
      for (const auto& name : invol::gallery::list_entries()) std::cout << name << "\n";
      return EXIT_SUCCESS;
    }
    print_entry(invol::gallery::get_spec(show_name));
    return EXIT_SUCCESS;
  } catch (const invol::PhaseError& e) {
    std::cerr << "error [" << e.phase() << "]: " << e.what() << "\n";
    return kExitPhaseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
}
