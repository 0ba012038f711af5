// Command-line front end: parameter sweeps, reproduction presets, CSV output.

#include <algorithm>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcfield/csv.hpp"
#include "hcfield/delay.hpp"
#include "hcfield/fit.hpp"
#include "hcfield/mc.hpp"
#include "hcfield/moments.hpp"
#include "hcfield/outage.hpp"
#include "hcfield/process.hpp"
#include "hcfield/repro.hpp"
#include "hcfield/specfun.hpp"

#ifndef HCFIELD_VERSION
#define HCFIELD_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;

struct Params {
  double lambda = 0.1;
  double hardcore = 0.0;
  double r0 = 100.0;
  double eta = 3.0;
  double pr = 1.0;
  double theta_min = -10.0, theta_max = 20.0;
  int steps = 31;
  uint64_t trials = 100000;
  uint64_t seed = 1;
  int threads = 1;
  double window = 0.0;  // 0 = default
  std::string source = "analytic";  // analytic | quadrature | empirical
  std::string output;
};

void add_common(CLI::App* cmd, Params& p, bool with_grid = false) {
  cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  cmd->add_option("--lambda", p.lambda, "interferer intensity (1/m)")->capture_default_str();
  cmd->add_option("--hardcore", p.hardcore, "minimum headway c (m)")->capture_default_str();
  cmd->add_option("--r0", p.r0, "guard zone half-length (m)")->capture_default_str();
  cmd->add_option("--eta", p.eta, "pathloss exponent")->capture_default_str();
  cmd->add_option("--pr", p.pr, "useful signal mean power")->capture_default_str();
  cmd->add_option("--trials", p.trials, "Monte Carlo trials")->capture_default_str();
  cmd->add_option("--seed", p.seed, "master RNG seed")->capture_default_str();
  cmd->add_option("--threads", p.threads, "worker count (0 = auto, never changes results)")
      ->capture_default_str();
  cmd->add_option("--window", p.window, "simulation window half-length override (0 = auto)")
      ->capture_default_str();
  cmd->add_option("-o,--output", p.output, "output CSV path (default stdout)");
  if (with_grid) {
    cmd->add_option("--theta-min", p.theta_min, "SIR threshold grid start (dB)")
        ->capture_default_str();
    cmd->add_option("--theta-max", p.theta_max, "SIR threshold grid end (dB)")
        ->capture_default_str();
    cmd->add_option("--steps", p.steps, "grid points")->capture_default_str();
  }
}

hcfield::CsvWriter make_writer(const Params& p) {
  hcfield::CsvWriter w;
  w.add_param("version", std::string(HCFIELD_VERSION));
  w.add_param("lambda", p.lambda);
  w.add_param("hardcore_c", p.hardcore);
  w.add_param("r0", p.r0);
  w.add_param("eta", p.eta);
  w.add_param("pr", p.pr);
  w.add_param("seed", p.seed);
  return w;
}

void emit(const hcfield::CsvWriter& w, const std::string& path) {
  if (path.empty())
    std::cout << w.str();
  else
    w.write(path);
}

hcfield::MomentSummary resolve_moments(const Params& p, const hcfield::TrafficModel& tm,
                                       const hcfield::LinkConfig& link) {
  if (p.source == "analytic") return hcfield::analytic_moments(tm, link);
  if (p.source == "quadrature") return hcfield::quadrature_moments(tm, link);
  if (p.source == "empirical")
    return hcfield::simulate_interference(tm, link, p.trials, p.seed, 1, p.threads, p.window)
        .moments();
  throw CLI::ValidationError("--source must be analytic, quadrature or empirical");
}

// Flat-key JSON config: keys mirror long flags; command-line flags win.
std::vector<std::string> expand_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ValidationError("--config needs a file path");
      config_path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
  }
  if (config_path.empty()) return args;
  std::ifstream in(config_path);
  if (!in) throw CLI::ValidationError("cannot open config file " + config_path);
  json cfg = json::parse(in);
  if (!cfg.is_object()) throw CLI::ValidationError("config file must be a flat JSON object");
  std::vector<std::string> merged;
  size_t insert_at = 0;
  if (!args.empty() && !args.empty() && args[0][0] != '-') {
    merged.push_back(args[0]);  // subcommand name
    insert_at = 1;
    if (args.size() > 1 && args[0] == "reproduce" && args[1][0] != '-') {
      merged.push_back(args[1]);
      insert_at = 2;
    }
  }
  for (auto& [key, value] : cfg.items()) {
    merged.push_back("--" + key);
    if (value.is_string())
      merged.push_back(value.get<std::string>());
    else
      merged.push_back(value.dump());
  }
  merged.insert(merged.end(), args.begin() + insert_at, args.end());
  return merged;
}

int run(int argc, char** argv) {
  CLI::App app{"interference, outage, delay and MRC analysis for a 1D hardcore field"};
  app.set_version_flag("--version", std::string(HCFIELD_VERSION));
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Params p;

  auto* cm = app.add_subcommand("moments", "interference moments (mean, variance, skewness)");
  add_common(cm, p);
  cm->add_option("--source", p.source, "analytic | quadrature | empirical")
      ->capture_default_str();
  int nakagami_t = 1;
  cm->add_option("--fading-shape", nakagami_t, "Nakagami shape t (gamma(t,1) power fading)")
      ->capture_default_str();

  auto* cf = app.add_subcommand("fit", "gamma and shifted-gamma fits of the moments");
  add_common(cf, p);
  cf->add_option("--source", p.source, "analytic | quadrature | empirical")
      ->capture_default_str();

  auto* cd = app.add_subcommand("distance", "nearest-interferer distance law");
  add_common(cd, p);
  double xmax = 0.0;
  int xsteps = 200;
  cd->add_option("--xmax", xmax, "grid end (default r0 + 3/lambda)");
  cd->add_option("--xsteps", xsteps, "grid points")->capture_default_str();

  auto* co = app.add_subcommand("outage", "single-antenna outage probability vs threshold");
  add_common(co, p, true);
  bool with_mc = false;
  co->add_flag("--mc", with_mc, "add an empirical Monte Carlo column");

  auto* cdel = app.add_subcommand("delay", "mean local delay vs threshold");
  add_common(cdel, p, true);
  hcfield::SeriesSpec sspec;
  std::string lt_source = "gamma-fit";
  bool with_series = false;
  cdel->add_option("--t0", sspec.truncation, "series truncation order")->capture_default_str();
  cdel->add_option("--digits", sspec.precision_digits, "series working precision (0 = auto)")
      ->capture_default_str();
  cdel->add_option("--lt-source", lt_source, "gamma-fit | ppp-exact")->capture_default_str();
  cdel->add_flag("--series", with_series, "add the static-interferer series column");

  auto* cmrc = app.add_subcommand("mrc", "dual-branch MRC outage vs threshold");
  add_common(cmrc, p, true);
  std::string rho_form = "exact";
  bool mrc_mc = false;
  cmrc->add_option("--rho-form", rho_form, "exact | linear")->capture_default_str();
  cmrc->add_flag("--mc", mrc_mc, "add an empirical Monte Carlo column");

  auto* cs = app.add_subcommand("simulate", "seeded interference ensemble (one value per row)");
  add_common(cs, p);
  int fading_shape = 1;
  std::string json_path;
  cs->add_option("--fading-shape", fading_shape, "gamma(t,1) power fading shape")
      ->capture_default_str();
  cs->add_option("--json", json_path, "also write a summary JSON (moments, seed, parameters)");

  auto* cr = app.add_subcommand("reproduce", "figure/table reproduction presets");
  std::string preset;
  cr->add_option("preset", preset, "table1 | fig2 | fig3 | fig4 | fig5 | fig6 | fig7")
      ->required();
  uint64_t r_trials = 0, r_seed = 1;
  int r_threads = 1;
  std::string r_output, r_json;
  cr->add_option("--trials", r_trials, "trials/runs override (0 = preset default)")
      ->capture_default_str();
  cr->add_option("--seed", r_seed, "master RNG seed")->capture_default_str();
  cr->add_option("--threads", r_threads, "worker count")->capture_default_str();
  cr->add_option("-o,--output", r_output, "table CSV path (default <preset>.csv)");
  cr->add_option("--json", r_json, "pass/fail summary path (default <preset>_summary.json)");

  std::vector<std::string> args = expand_args(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cm->parsed()) {
    hcfield::TrafficModel tm(p.lambda, p.hardcore);
    hcfield::LinkConfig link(p.r0, p.eta, p.pr);
    hcfield::MomentSummary m = resolve_moments(p, tm, link);
    hcfield::CsvWriter w = make_writer(p);
    w.add_param("source", p.source);
    if (nakagami_t != 1) {
      hcfield::MomentSummary nm = hcfield::nakagami_moments(tm, link, nakagami_t);
      m.mean = nm.mean;
      m.variance = nm.variance;
      m.skewness = std::numeric_limits<double>::quiet_NaN();
      w.add_param("fading_shape", static_cast<uint64_t>(nakagami_t));
    }
    w.set_columns({"mean", "variance", "skewness"});
    w.add_row({m.mean, m.variance, m.skewness});
    emit(w, p.output);
    return 0;
  }

  if (cf->parsed()) {
    hcfield::TrafficModel tm(p.lambda, p.hardcore);
    hcfield::LinkConfig link(p.r0, p.eta, p.pr);
    hcfield::MomentSummary m = resolve_moments(p, tm, link);
    hcfield::GammaFit g = hcfield::fit_gamma(m);
    hcfield::ShiftedGammaFit s = hcfield::fit_shifted_gamma(m);
    hcfield::CsvWriter w = make_writer(p);
    w.add_param("source", p.source);
    w.set_columns({"family", "k", "beta", "epsilon", "implied_skewness"});
    w.add_row({0, g.k, g.beta, 0.0, g.implied_skewness()});
    w.add_row({1, s.k, s.beta, s.epsilon, m.skewness});
    if (s.negative_shift_warning)
      std::cerr << "warning: shifted-gamma fit has negative shift epsilon\n";
    emit(w, p.output);
    return 0;
  }

  if (cd->parsed()) {
    hcfield::TrafficModel tm(p.lambda, p.hardcore);
    hcfield::LinkConfig link(p.r0, p.eta, p.pr);
    if (xmax <= p.r0) xmax = p.r0 + 3.0 / p.lambda;
    hcfield::CsvWriter w = make_writer(p);
    w.set_columns({"x", "cdf", "pdf"});
    for (int i = 0; i <= xsteps; ++i) {
      double x = p.r0 + (xmax - p.r0) * i / xsteps;
      w.add_row({x, hcfield::nearest_distance_cdf(tm, link, x),
                 hcfield::nearest_distance_pdf(tm, link, x)});
    }
    emit(w, p.output);
    return 0;
  }

  if (co->parsed()) {
    hcfield::TrafficModel tm(p.lambda, p.hardcore);
    hcfield::LinkConfig link(p.r0, p.eta, p.pr);
    hcfield::MomentSummary m = hcfield::analytic_moments(tm, link);
    hcfield::GammaFit g = hcfield::fit_gamma(m);
    hcfield::ShiftedGammaFit sg = hcfield::fit_shifted_gamma(m);
    std::vector<double> grid = hcfield::theta_grid_db(p.theta_min, p.theta_max, p.steps);
    hcfield::CsvWriter w = make_writer(p);
    std::vector<std::string> cols = {"theta_db", "theta_lin", "ppp", "jensen",
                                     "gamma", "shifted_gamma"};
    std::optional<hcfield::OutageCurve> mc;
    if (with_mc) {
      hcfield::SampleEnsemble ens =
          hcfield::simulate_interference(tm, link, p.trials, p.seed, 1, p.threads, p.window);
      mc = hcfield::empirical_outage(ens, link, grid);
      cols.push_back("mc");
      w.add_param("trials", p.trials);
    }
    w.set_columns(cols);
    for (size_t i = 0; i < grid.size(); ++i) {
      double th = hcfield::db_to_linear(grid[i]);
      std::vector<double> row = {grid[i], th, hcfield::outage_ppp(tm, link, th),
                                 hcfield::outage_jensen(tm, link, th),
                                 hcfield::outage_gamma(g, th, p.pr),
                                 hcfield::outage_shifted_gamma(sg, th, p.pr)};
      if (mc) row.push_back(mc->columns[0].values[i]);
      w.add_row(row);
    }
    emit(w, p.output);
    return 0;
  }

  if (cdel->parsed()) {
    hcfield::TrafficModel tm(p.lambda, p.hardcore);
    hcfield::TrafficModel ppp(p.lambda, 0.0);
    hcfield::LinkConfig link(p.r0, p.eta, p.pr);
    std::vector<double> grid = hcfield::theta_grid_db(p.theta_min, p.theta_max, p.steps);
    hcfield::CsvWriter w = make_writer(p);
    std::vector<std::string> cols = {"theta_db", "theta_lin", "iid_ppp", "iid_gamma",
                                     "static_ppp"};
    if (with_series) {
      cols.push_back("static_series");
      w.add_param("t0", static_cast<uint64_t>(sspec.truncation));
      w.add_param("lt_source", lt_source);
    }
    w.set_columns(cols);
    hcfield::LtSource src = lt_source == "ppp-exact" ? hcfield::LtSource::PppExact
                                                     : hcfield::LtSource::GammaFit;
    if (lt_source != "ppp-exact" && lt_source != "gamma-fit")
      throw CLI::ValidationError("--lt-source must be gamma-fit or ppp-exact");
    for (double db : grid) {
      double th = hcfield::db_to_linear(db);
      std::vector<double> row = {
          db, th, hcfield::mean_delay_iid(ppp, link, th, hcfield::DelayModel::Ppp),
          hcfield::mean_delay_iid(tm, link, th, hcfield::DelayModel::GammaFit),
          hcfield::mean_delay_static_ppp(tm, link, th)};
      if (with_series)
        row.push_back(hcfield::mean_delay_static_series(tm, link, th, sspec, src).value);
      w.add_row(row);
    }
    emit(w, p.output);
    return 0;
  }

  if (cmrc->parsed()) {
    hcfield::TrafficModel tm(p.lambda, p.hardcore);
    hcfield::LinkConfig link(p.r0, p.eta, p.pr);
    if (rho_form != "exact" && rho_form != "linear")
      throw CLI::ValidationError("--rho-form must be exact or linear");
    double rho = hcfield::spatial_correlation(
        tm, rho_form == "exact" ? hcfield::CorrelationForm::ExactRatio
                                : hcfield::CorrelationForm::Linearized);
    hcfield::MomentSummary m = hcfield::analytic_moments(tm, link);
    hcfield::BivariateGammaFit bg = hcfield::fit_bivariate(m, rho);
    hcfield::ShiftedGammaFit sg = hcfield::fit_shifted_gamma(m);
    std::vector<double> grid = hcfield::theta_grid_db(p.theta_min, p.theta_max, p.steps);
    hcfield::CsvWriter w = make_writer(p);
    w.add_param("rho", rho);
    std::vector<std::string> cols = {"theta_db", "theta_lin", "bivariate_gamma",
                                     "bivariate_shifted_gamma"};
    std::optional<hcfield::MrcResult> mc;
    if (mrc_mc) {
      mc = hcfield::empirical_mrc(tm, link, grid, p.trials, p.seed, p.threads, p.window);
      w.add_param("trials", p.trials);
      w.add_param("empirical_corr", mc->interference_corr);
      cols.push_back("mc");
    }
    w.set_columns(cols);
    for (size_t i = 0; i < grid.size(); ++i) {
      double th = hcfield::db_to_linear(grid[i]);
      std::vector<double> row = {grid[i], th, 1.0 - hcfield::mrc_success(bg, th, p.pr),
                                 1.0 - hcfield::mrc_success_shifted(sg, rho, th, p.pr)};
      if (mc) row.push_back(mc->curve.columns[0].values[i]);
      w.add_row(row);
    }
    emit(w, p.output);
    return 0;
  }

  if (cs->parsed()) {
    hcfield::TrafficModel tm(p.lambda, p.hardcore);
    hcfield::LinkConfig link(p.r0, p.eta, p.pr);
    hcfield::SampleEnsemble ens = hcfield::simulate_interference(
        tm, link, p.trials, p.seed, fading_shape, p.threads, p.window);
    hcfield::CsvWriter w = make_writer(p);
    w.add_param("trials", p.trials);
    w.add_param("window_half_length", ens.window_half_length);
    w.add_param("fading_shape", static_cast<uint64_t>(fading_shape));
    w.set_columns({"interference"});
    for (double v : ens.values) w.add_row({v});
    emit(w, p.output);
    if (!json_path.empty()) {
      hcfield::MomentSummary m = ens.moments();
      json j = {{"version", HCFIELD_VERSION},
                {"lambda", p.lambda},
                {"hardcore_c", p.hardcore},
                {"r0", p.r0},
                {"eta", p.eta},
                {"pr", p.pr},
                {"trials", p.trials},
                {"seed", p.seed},
                {"window_half_length", ens.window_half_length},
                {"fading_shape", fading_shape},
                {"mean", m.mean},
                {"variance", m.variance},
                {"skewness", m.skewness}};
      std::ofstream out(json_path);
      out << j.dump(2) << "\n";
    }
    return 0;
  }

  if (cr->parsed()) {
    hcfield::ReproResult res = hcfield::run_preset(preset, r_trials, r_seed, r_threads);
    hcfield::CsvWriter w;
    w.add_param("version", std::string(HCFIELD_VERSION));
    w.add_param("preset", res.preset);
    for (const auto& [k, v] : res.params) w.add_param(k, v);
    w.set_columns(res.table.columns);
    for (const auto& row : res.table.rows) w.add_row(row);
    emit(w, r_output.empty() ? preset + ".csv" : r_output);

    json summary;
    summary["version"] = HCFIELD_VERSION;
    summary["preset"] = res.preset;
    summary["all_pass"] = res.all_pass();
    summary["checks"] = json::array();
    for (const auto& c : res.checks) {
      summary["checks"].push_back({{"name", c.name},
                                   {"value", c.value},
                                   {"target", c.target},
                                   {"tol", c.tol},
                                   {"pass", c.pass}});
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (value " << c.value
                << ", target " << c.target << (c.tol > 0 ? " +/- " : " bound ")
                << (c.tol > 0 ? c.tol : c.target) << ")\n";
    }
    std::ofstream out(r_json.empty() ? preset + "_summary.json" : r_json);
    out << summary.dump(2) << "\n";
    std::cout << (res.all_pass() ? "ALL PASS" : "SOME FAILED") << "\n";
    return res.all_pass() ? 0 : 3;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hcfield::InvalidTraffic& e) {
    std::cerr << "invalid traffic parameters: " << e.what() << "\n";
    return 1;
  } catch (const hcfield::InvalidLink& e) {
    std::cerr << "invalid link parameters: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const hcfield::NotConverged& e) {
    std::cerr << "series did not converge: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}
