#pragma once

#include <string>
#include <vector>

#include "hcfield/fit.hpp"
#include "hcfield/model.hpp"
#include "hcfield/specfun.hpp"

namespace hcfield {

struct OutageCurve {
  std::vector<double> theta_db;
  std::vector<double> theta_lin;
  struct Column {
    std::string label;  // ppp | jensen | gamma | shifted-gamma | mrc-bivariate | empirical...
    std::vector<double> values;
  };
  std::vector<Column> columns;

  Column& add_column(const std::string& label) {
    columns.push_back({label, std::vector<double>(theta_lin.size(), 0.0)});
    return columns.back();
  }
};

std::vector<double> theta_grid_db(double db_min, double db_max, int steps);

/// int_{r0}^inf s x^-eta / (1 + s x^-eta) dx
double ppp_outage_exponent(const LinkConfig& link, double s, const QuadratureSpec& spec = {});
/// Same integral in closed form via 2F1; requires s * r0^-eta < 1.
double ppp_outage_exponent_closed_form(const LinkConfig& link, double s);
/// int_{r0}^inf log(1 + s x^-eta) dx
double ppp_jensen_exponent(const LinkConfig& link, double s, const QuadratureSpec& spec = {});
/// int_{r0}^inf (1 - (1 + s x^-eta)^-t) dx  (joint exponent over t slots,
/// static interferers)
double ppp_multi_slot_exponent(const LinkConfig& link, double s, int t,
                               const QuadratureSpec& spec = {});

double outage_ppp(const TrafficModel& traffic, const LinkConfig& link, double theta,
                  const QuadratureSpec& spec = {});
double outage_jensen(const TrafficModel& traffic, const LinkConfig& link, double theta,
                     const QuadratureSpec& spec = {});

double outage_gamma(const GammaFit& fit, double theta, double pr);
double outage_shifted_gamma(const ShiftedGammaFit& fit, double theta, double pr);

/// Success probability of dual-branch MRC with bivariate-gamma interference.
double mrc_success(const BivariateGammaFit& fit, double theta, double pr,
                   const QuadratureSpec& spec = {});

/// Same construction with a shared shift epsilon on both marginals.
double mrc_success_shifted(const ShiftedGammaFit& fit, double rho, double theta, double pr,
                           const QuadratureSpec& spec = {});

}  // namespace hcfield
