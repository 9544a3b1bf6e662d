#include "invol/report.hpp"

#include <chrono>
#include <cmath>

#include "invol/errors.hpp"
#include "invol/expr.hpp"
#include "invol/gallery.hpp"

namespace invol {

using nlohmann::json;

PhaseError::PhaseError(std::string phase, const std::string& message)
    : Error(message), phase_(std::move(phase)) {}

namespace {

constexpr const char* kSchema = "invol-analysis-report/1";
constexpr const char* kGalleryPrefix = "gallery:";

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(const Mat2& m) { return json::array({json::array({m.a11, m.a12}), json::array({m.a21, m.a22})}); }

json to_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const Spectrum& s) { return json::array({to_json(s.lambda1), to_json(s.lambda2)}); }

json to_json(const Region& r) {
  return json{{"x_min", r.x_min}, {"x_max", r.x_max}, {"y_min", r.y_min}, {"y_max", r.y_max}, {"grid_n", r.grid_n}};
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const ConditionVerdict& v) {
  json j{{"condition", to_string(v.condition)}, {"holds_on_window", v.holds_on_window}, {"margin", finite_or_null(v.margin)}};
  if (v.witness) {
    j["witness"] = json{{"point", to_json(v.witness->point)},
                        {"spectrum", to_json(v.witness->spectrum)},
                        {"trace_product", v.witness->trace_product}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

class Stopwatch {
 public:
  explicit Stopwatch(std::map<std::string, double>& sink) : sink_(sink) {}

  template <class F>
  auto time(const std::string& phase, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    struct Record {
      Stopwatch& w;
      std::string phase;
      std::chrono::steady_clock::time_point t0;
      ~Record() {
        w.sink_[phase] += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      }
    } record{*this, phase, t0};
    try {
      return f();
    } catch (const PhaseError&) {
      throw;
    } catch (const std::exception& e) {
      throw PhaseError(phase, e.what());
    }
  }

 private:
  std::map<std::string, double>& sink_;
};

}  // namespace

const std::vector<std::string>& nondeterministic_fields() {
  static const std::vector<std::string> fields = {"timings_ms", "injectivity.witness", "injectivity.cells_checked"};
  return fields;
}

ResolvedMap resolve_map(const std::string& map_spec) {
  try {
    if (map_spec.rfind(kGalleryPrefix, 0) == 0) {
      const gallery::Entry e = gallery::get_spec(map_spec.substr(std::char_traits<char>::length(kGalleryPrefix)));
      return {e.map, map_spec};
    }
    return {parse(map_spec), map_spec};
  } catch (const std::exception& e) {
    throw PhaseError("parse", e.what());
  }
}

json options_to_json(const AnalyzeOptions& o) {
  return json{{"map", o.map_spec},
              {"window", to_json(o.window)},
              {"eps", o.epsilon},
              {"tol", o.tol},
              {"im_tol", o.im_tol},
              {"scan", o.scan_n},
              {"collision_tol", o.collision_tol},
              {"separation_min", o.separation_min ? json(*o.separation_min) : json(nullptr)},
              {"leaves", o.leaves},
              {"step", o.step}};
}

AnalyzeOptions options_from_json(const json& h) {
  try {
    AnalyzeOptions o;
    o.map_spec = h.at("map").get<std::string>();
    const json& w = h.at("window");
    o.window = {w.at("x_min").get<double>(), w.at("x_max").get<double>(), w.at("y_min").get<double>(),
                w.at("y_max").get<double>(), w.at("grid_n").get<int>()};
    o.epsilon = h.at("eps").get<double>();
    o.tol = h.at("tol").get<double>();
    o.im_tol = h.at("im_tol").get<double>();
    o.scan_n = h.at("scan").get<int>();
    o.collision_tol = h.at("collision_tol").get<double>();
    if (!h.at("separation_min").is_null()) o.separation_min = h.at("separation_min").get<double>();
    o.leaves = h.at("leaves").get<int>();
    o.step = h.at("step").get<double>();
    return o;
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("malformed report header: ") + e.what());
  }
}

AnalysisReport run_analysis(const AnalyzeOptions& options) {
  AnalysisReport rep;
  rep.options = options;
  Stopwatch clock(rep.timings_ms);
  const Region& win = options.window;

  try {
    clock.time("config", [&] {
      win.validate();
      if (!(options.epsilon > 0.0) || !(options.tol > 0.0)) throw ConfigurationError("eps and tol must be positive");
      return 0;
    });
    const ResolvedMap resolved = clock.time("parse", [&] { return resolve_map(options.map_spec); });
    const PlanarMap& phi = resolved.map;
    rep.map_source = phi.describe();

    rep.involution = clock.time("verify", [&] { return verify_involution(phi, win, options.tol); });
    if (!rep.involution->pass) {
      throw PhaseError("verify", "map is not an involution on the window (max residual " +
                                     std::to_string(rep.involution->max_residual) + ")");
    }
    rep.orientation = clock.time("orientation", [&] { return orientation(phi, win); });
    rep.fixed_points = clock.time("fixed-points", [&] { return find_fixed_points(phi, win); });
    rep.base_point = clock.time("spectrum", [&] { return select_base_point(phi, rep.fixed_points->points); });
    const auto samples = clock.time("spectrum", [&] { return sample_spectrum(phi, win, *rep.base_point); });
    rep.spectrum_samples = samples.size();
    rep.verdict = clock.time("conditions", [&] {
      return theorem_verdict(rep.orientation->kind, samples, win, options.epsilon, options.im_tol);
    });

    const StandardMap h = clock.time("injectivity", [&] { return StandardMap(phi); });
    rep.injectivity = clock.time("injectivity", [&] {
      return injectivity_scan(h, win, options.scan_n, options.collision_tol, options.separation_min);
    });

    const Mat2 l = h.linear_part();
    if (rep.orientation->kind == Orientation::Preserving && max_abs(l + Mat2::identity()) <= 1e-9) {
      rep.spectrum_shift_deviation = clock.time("spectrum-shift", [&] { return spectrum_shift_check(phi, win); });
    }
    if (rep.orientation->kind == Orientation::Reversing) {
      rep.jacobian_bounds = clock.time("jacobian-bounds", [&] { return theorem_B_jacobian_check(h, win); });
    }

    clock.time("foliation", [&] {
      if (max_abs(l - Mat2::identity()) <= 1e-9) return 0;
      const CanonicalFoliation fol = diagonalize_involution(l);
      rep.foliation_kind = fol.kind;
      if (options.leaves <= 0) return 0;
      TraceOptions topt;
      topt.step = options.step;
      for (double c : default_leaf_parameters(h, fol, win, options.leaves)) {
        const Leaf leaf = trace_leaf(h, fol, c, win, topt);
        rep.leaves.push_back(
            {c, leaf.points.size(), leaf.residual, leaf_invariance_check(phi, h, fol, leaf), leaf.truncated});
      }
      return 0;
    });
  } catch (const PhaseError& e) {
    rep.failed_phase = e.phase();
    rep.error = e.what();
  }
  return rep;
}

json report_to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = kSchema;
  j["header"] = options_to_json(r.options);
  j["header"]["command"] = "analyze";
  j["map_source"] = r.map_source;
  j["window"] = to_json(r.options.window);
  j["status"] = r.failed_phase ? "error" : "ok";
  j["failed_phase"] = r.failed_phase ? json(*r.failed_phase) : json(nullptr);
  j["error"] = r.error ? json(*r.error) : json(nullptr);

  if (r.involution) {
    j["involution"] = json{{"max_residual", r.involution->max_residual},
                           {"pass", r.involution->pass},
                           {"worst_point", to_json(r.involution->worst_point)},
                           {"tol", r.options.tol}};
  } else {
    j["involution"] = nullptr;
  }
  j["orientation"] = r.orientation ? json{{"kind", to_string(r.orientation->kind)},
                                          {"min_abs_det", r.orientation->min_abs_det}}
                                   : json(nullptr);
  if (r.fixed_points) {
    json pts = json::array();
    for (const auto& fp : r.fixed_points->points) {
      pts.push_back(json{{"location", to_json(fp.location)},
                         {"classification", to_string(fp.classification)},
                         {"jacobian", to_json(fp.jacobian)}});
    }
    j["fixed_points"] = json{{"curve", r.fixed_points->curve},
                             {"seeds", r.fixed_points->seeds},
                             {"converged", r.fixed_points->converged},
                             {"skipped_singular", r.fixed_points->skipped_singular},
                             {"diverged", r.fixed_points->diverged},
                             {"points", pts}};
  } else {
    j["fixed_points"] = nullptr;
  }
  j["base_point"] = r.base_point ? json{{"location", to_json(r.base_point->location)},
                                        {"linear_part", to_json(r.base_point->linear_part)}}
                                 : json(nullptr);
  j["spectrum_samples"] = r.spectrum_samples;
  if (r.verdict) {
    json conds = json::array();
    for (const auto& c : r.verdict->conditions) conds.push_back(to_json(c));
    j["conditions"] = conds;
    j["theorem_verdict"] = json{{"text", r.verdict->text},
                                {"theorem", r.verdict->theorem.empty() ? json(nullptr) : json(r.verdict->theorem)},
                                {"condition", r.verdict->deciding ? json(to_string(*r.verdict->deciding)) : json(nullptr)},
                                {"linearizable_on_window", r.verdict->linearizable_on_window}};
  } else {
    j["conditions"] = json::array();
    j["theorem_verdict"] = nullptr;
  }
  if (r.injectivity) {
    const double sep = r.options.separation_min.value_or(1e-3 * r.options.window.diameter());
    json w = nullptr;
    if (r.injectivity->witness) w = json::array({to_json(r.injectivity->witness->first), to_json(r.injectivity->witness->second)});
    j["injectivity"] = json{{"status", to_string(r.injectivity->status)},
                            {"witness", w},
                            {"cells_checked", r.injectivity->cells_checked},
                            {"scan_n", r.options.scan_n},
                            {"collision_tol", r.options.collision_tol},
                            {"separation_min", sep}};
  } else {
    j["injectivity"] = nullptr;
  }
  j["spectrum_shift_deviation"] = r.spectrum_shift_deviation ? json(*r.spectrum_shift_deviation) : json(nullptr);
  j["jacobian_bounds"] = r.jacobian_bounds ? json{{"min_trace", r.jacobian_bounds->min_trace},
                                                  {"min_det", r.jacobian_bounds->min_det}}
                                           : json(nullptr);
  j["foliation_kind"] = r.foliation_kind ? json(to_string(*r.foliation_kind)) : json(nullptr);
  j["foliation_certified"] = r.verdict && r.verdict->linearizable_on_window && r.foliation_kind.has_value();
  j["leaf_count"] = r.leaves.size();
  json leaves = json::array();
  for (const auto& l : r.leaves) {
    leaves.push_back(json{{"parameter", l.parameter},
                          {"points", l.points},
                          {"residual", l.residual},
                          {"invariance_residual", l.invariance_residual},
                          {"truncated", l.truncated}});
  }
  j["leaves"] = leaves;
  j["nondeterministic_fields"] = nondeterministic_fields();
  j["timings_ms"] = r.timings_ms;
  return j;
}

FoliationRun run_foliation(const AnalyzeOptions& options, bool force) {
  FoliationRun run;
  run.window = options.window;
  const Region& win = options.window;
  auto phase = [](const std::string& name, auto&& f) {
    try {
      return f();
    } catch (const PhaseError&) {
      throw;
    } catch (const std::exception& e) {
      throw PhaseError(name, e.what());
    }
  };
  phase("config", [&] {
    win.validate();
    return 0;
  });
  const ResolvedMap resolved = resolve_map(options.map_spec);
  const PlanarMap& phi = resolved.map;
  const InvolutionVerdict inv = phase("verify", [&] { return verify_involution(phi, win, options.tol); });
  if (!inv.pass && !force)
    throw PhaseError("verify", "map is not an involution on the window; pass --force to trace anyway");
  const OrientationClass o = phase("orientation", [&] { return orientation(phi, win); });
  run.fixed_points = phase("fixed-points", [&] { return find_fixed_points(phi, win).points; });
  const TheoremVerdict v = phase("conditions", [&] {
    const BasePoint base = select_base_point(phi, run.fixed_points);
    return theorem_verdict(o.kind, sample_spectrum(phi, win, base), win, options.epsilon, options.im_tol);
  });
  run.certified = inv.pass && v.linearizable_on_window;
  run.verdict_text = v.text;
  if (!run.certified && !force)
    throw PhaseError("foliate", "hypotheses not verified (" + v.text + "); pass --force to trace an uncertified foliation");

  phase("foliate", [&] {
    const StandardMap h(phi);
    run.foliation = diagonalize_involution(h.linear_part());
    int count = options.leaves;
    if (count <= 0) count = run.foliation.kind == FoliationKind::Radial ? kDefaultRadialLeaves : kDefaultVerticalLeaves;
    TraceOptions topt;
    topt.step = options.step;
    for (double c : default_leaf_parameters(h, run.foliation, win, count)) {
      Leaf leaf = trace_leaf(h, run.foliation, c, win, topt);
      run.invariance.push_back(leaf_invariance_check(phi, h, run.foliation, leaf));
      run.leaves.push_back(std::move(leaf));
    }
    return 0;
  });
  return run;
}

}  // namespace invol
