#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hcfield {

struct Check {
  std::string name;
  double value = 0.0;
  double target = 0.0;  // target value or bound
  double tol = 0.0;     // 0 for one-sided bound checks
  bool pass = false;
};

Check check_near(const std::string& name, double value, double target, double tol);
Check check_below(const std::string& name, double value, double bound);
Check check_above(const std::string& name, double value, double bound);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ReproResult {
  std::string preset;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  Table table;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Dimensionless skewness / std-dev columns of the moments table
/// (analytic, gamma-fit, shifted-gamma, PPP, simulation) at lc = 0.4.
ReproResult repro_table1(uint64_t trials, uint64_t seed, int threads);

/// Nearest-interferer distance law vs simulation; k-th nearest orderings.
ReproResult repro_fig2(uint64_t trials, uint64_t seed);

/// Skewness vs lc for the microcell and macrocell scenarios.
ReproResult repro_fig3(uint64_t mc_trials, uint64_t seed, int threads);

/// Interference distribution: hardcore vs PPP concentration orderings.
ReproResult repro_fig4(uint64_t trials, uint64_t seed, int threads);

/// Single-antenna outage: gamma family vs MC, PPP gap, Jensen bound.
ReproResult repro_fig5(uint64_t trials, uint64_t seed, int threads);

/// Mean local delay: series oracle and static/i.i.d. orderings vs MC.
ReproResult repro_fig6(uint64_t runs, uint64_t seed);

/// Dual-branch MRC: correlation and bivariate gamma-family fits vs MC.
ReproResult repro_fig7(uint64_t trials, uint64_t seed, int threads);

ReproResult run_preset(const std::string& name, uint64_t trials, uint64_t seed, int threads);

}  // namespace hcfield
