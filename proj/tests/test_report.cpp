#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "invol/gallery.hpp"
#include "invol/plot.hpp"
#include "invol/report.hpp"

using namespace invol;
namespace fs = std::filesystem;

namespace {

AnalyzeOptions options_for(const std::string& spec) {
  AnalyzeOptions o;
  o.map_spec = spec;
  return o;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "invol_cli_test";
  fs::create_directories(dir);
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + INVOL_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                          err.string() + "\"";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("resolve_map") {
  CHECK(resolve_map("gallery:A1:2").map({1.0, 1.0}) == Point{0.0, -1.0});
  CHECK(resolve_map("(x, y)").map({2.0, 3.0}) == Point{2.0, 3.0});
  try {
    resolve_map("(x - , y)");
    FAIL("expected a parse error");
  } catch (const PhaseError& e) {
    CHECK(e.phase() == "parse");
  }
  CHECK_THROWS_AS(resolve_map("gallery:D"), PhaseError);
}

TEST_CASE("analysis pipeline") {
  const AnalysisReport a2 = run_analysis(options_for("gallery:A2:1"));
  CHECK_FALSE(a2.failed_phase);
  REQUIRE(a2.verdict);
  CHECK(starts_with(a2.verdict->text, "Theorem A(c)"));
  REQUIRE(a2.injectivity);
  CHECK(a2.injectivity->status == InjectivityStatus::NoCollisionFound);
  CHECK(a2.spectrum_shift_deviation);

  const AnalysisReport c = run_analysis(options_for("gallery:C"));
  CHECK_FALSE(c.failed_phase);
  CHECK(starts_with(c.verdict->text, "no hypothesis verified"));
  CHECK(c.injectivity->status == InjectivityStatus::Collision);

  const AnalysisReport id = run_analysis(options_for("(x, y)"));
  CHECK(starts_with(id.verdict->text, "Theorem A(a): φ = I"));

  const AnalysisReport shift = run_analysis(options_for("(x + 1, y)"));
  REQUIRE(shift.failed_phase);
  CHECK(*shift.failed_phase == "verify");
  CHECK_FALSE(shift.verdict);

  const AnalysisReport bad = run_analysis(options_for("(x - , y)"));
  REQUIRE(bad.failed_phase);
  CHECK(*bad.failed_phase == "parse");
}

TEST_CASE("report json") {
  AnalyzeOptions o = options_for("gallery:A1:1");
  o.leaves = 5;
  const nlohmann::json j = report_to_json(run_analysis(o));
  CHECK(j.at("schema") == "invol-analysis-report/1");
  CHECK(j.at("header").at("command") == "analyze");
  CHECK(j.at("leaves").size() == 5);
  CHECK(options_from_json(j.at("header")) == o);
  CHECK(options_from_json(options_to_json(o)) == o);
  for (const auto& key : nondeterministic_fields()) CHECK_FALSE(key.empty());
}

TEST_CASE("foliation run") {
  AnalyzeOptions o = options_for("gallery:A2:1");
  const FoliationRun run = run_foliation(o, false);
  CHECK(run.certified);
  CHECK(run.foliation.kind == FoliationKind::Radial);
  CHECK(run.leaves.size() == kDefaultRadialLeaves);
  CHECK_THROWS_AS(run_foliation(options_for("gallery:C"), false), PhaseError);
  const FoliationRun forced = run_foliation(options_for("gallery:C"), true);
  CHECK_FALSE(forced.certified);
}

TEST_CASE("csv and svg writers") {
  Leaf ok;
  ok.parameter = 0.5;
  ok.points = {{0.0, 1.0}, {1.0, 2.0}};
  ok.point_residuals = {0.0, 1e-15};
  Leaf cut;
  cut.parameter = 1.5;
  cut.points = {{2.0, 2.0}};
  cut.point_residuals = {0.0};
  cut.truncated = true;
  cut.failure_point = {2.5, 3.0};
  cut.failure_residual = 0.25;

  std::ostringstream csv;
  write_leaf_csv(csv, {ok, cut});
  std::istringstream lines(csv.str());
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "leaf_id,leaf_parameter,point_index,x,y,residual");
  CHECK(starts_with(rows[1], "0,0.5,0,0,1,"));
  CHECK(starts_with(rows[4], "1,1.5,-1,2.5,3,0.25"));

  std::ostringstream svg;
  write_svg(svg, Region{}, {ok, cut}, {FixedPoint{{0.0, 0.0}, FixClass::FixMinus, {}}});
  const std::string s = svg.str();
  CHECK(s.find("viewBox=\"-5 -5 10 10\"") != std::string::npos);
  CHECK(s.find("<circle") != std::string::npos);
  // y is flipped: (1, 2) is drawn at (1, -2).
  CHECK(s.find("1,-2") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}

TEST_CASE("cli") {
  const CliResult list = run_cli("gallery list");
  CHECK(list.status == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 9);

  const CliResult show = run_cli("gallery show A3");
  CHECK(show.status == 0);
  CHECK(show.out.find("Theorem B") != std::string::npos);
  CHECK(show.out.find("formula:") != std::string::npos);

  const CliResult missing = run_cli("gallery show D");
  CHECK(missing.status != 0);
  CHECK(missing.err.find("not provided") != std::string::npos);

  const CliResult a2 = run_cli("analyze --gallery A2:1");
  CHECK(a2.status == 0);
  const auto report = nlohmann::json::parse(a2.out);
  CHECK(starts_with(report.at("theorem_verdict").at("text").get<std::string>(), "Theorem A(c)"));

  const CliResult id = run_cli("analyze --map \"(x, y)\" --window=-2,2,-1,1 --grid 11");
  CHECK(id.status == 0);
  CHECK(nlohmann::json::parse(id.out).at("theorem_verdict").at("text").get<std::string>().find("Theorem A(a)") == 0);

  const CliResult fail = run_cli("analyze --map \"(x + 1, y)\"");
  CHECK(fail.status != 0);
  CHECK(starts_with(fail.err, "error [verify]:"));

  const CliResult bad_window = run_cli("analyze --gallery A1 --window=1,0,0,1");
  CHECK(bad_window.status != 0);
  CHECK(starts_with(bad_window.err, "error [config]:"));

  const fs::path dir = fs::temp_directory_path() / "invol_cli_test";
  const CliResult fol = run_cli("foliate --gallery minus-identity --leaves 8 --csv \"" + (dir / "l.csv").string() +
                                "\" --svg \"" + (dir / "l.svg").string() + "\"");
  CHECK(fol.status == 0);
  CHECK(fs::file_size(dir / "l.csv") > 100);
  CHECK(slurp(dir / "l.svg").find("<polyline") != std::string::npos);

  const CliResult refused = run_cli("foliate --gallery C");
  CHECK(refused.status != 0);
  CHECK(starts_with(refused.err, "error [foliate]:"));

  const fs::path report_path = dir / "a1.json";
  CHECK(run_cli("analyze --gallery A1:2 --grid 21 --out \"" + report_path.string() + "\"").status == 0);
  const CliResult rerun = run_cli("analyze --rerun \"" + report_path.string() + "\"");
  CHECK(rerun.status == 0);
  CHECK(nlohmann::json::parse(rerun.out).at("header").at("window").at("grid_n") == 21);
}
