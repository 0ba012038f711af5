#include "hcfield/outage.hpp"

#include <cmath>

namespace hcfield {

std::vector<double> theta_grid_db(double db_min, double db_max, int steps) {
  std::vector<double> g;
  if (steps <= 1) {
    g.push_back(db_min);
    return g;
  }
  double step = (db_max - db_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) g.push_back(db_min + i * step);
  return g;
}

double ppp_outage_exponent(const LinkConfig& link, double s, const QuadratureSpec& spec) {
  if (s == 0.0) return 0.0;
  const double eta = link.eta();
  return integrate_semi_infinite(
      [&](double x) {
        double v = s * std::pow(x, -eta);
        return v / (1.0 + v);
      },
      link.r0(), spec);
}

double ppp_outage_exponent_closed_form(const LinkConfig& link, double s) {
  const double eta = link.eta();
  const double r0 = link.r0();
  double q = s * std::pow(r0, -eta);
  // s r0^{1-eta}/(eta-1) * 2F1(1, 1-1/eta; 2-1/eta; -q)
  return s * std::pow(r0, 1.0 - eta) / (eta - 1.0) *
         hyp2f1(1.0, 1.0 - 1.0 / eta, 2.0 - 1.0 / eta, -q);
}

double ppp_jensen_exponent(const LinkConfig& link, double s, const QuadratureSpec& spec) {
  if (s == 0.0) return 0.0;
  const double eta = link.eta();
  return integrate_semi_infinite(
      [&](double x) { return std::log1p(s * std::pow(x, -eta)); }, link.r0(), spec);
}

double ppp_multi_slot_exponent(const LinkConfig& link, double s, int t,
                               const QuadratureSpec& spec) {
  if (s == 0.0 || t == 0) return 0.0;
  const double eta = link.eta();
  return integrate_semi_infinite(
      [&](double x) { return -std::expm1(-t * std::log1p(s * std::pow(x, -eta))); },
      link.r0(), spec);
}

double outage_ppp(const TrafficModel& traffic, const LinkConfig& link, double theta,
                  const QuadratureSpec& spec) {
  double s = theta / link.pr();
  return -std::expm1(-2.0 * traffic.lambda() * ppp_outage_exponent(link, s, spec));
}

double outage_jensen(const TrafficModel& traffic, const LinkConfig& link, double theta,
                     const QuadratureSpec& spec) {
  double s = theta / link.pr();
  return -std::expm1(-2.0 * traffic.lambda() * ppp_jensen_exponent(link, s, spec));
}

double outage_gamma(const GammaFit& fit, double theta, double pr) {
  return 1.0 - fit.laplace(theta / pr);
}

double outage_shifted_gamma(const ShiftedGammaFit& fit, double theta, double pr) {
  return 1.0 - fit.laplace(theta / pr);
}

double mrc_success(const BivariateGammaFit& fit, double theta, double pr,
                   const QuadratureSpec& spec) {
  if (theta <= 0.0) return 1.0;
  const double k = fit.k, b = fit.beta, rho = fit.rho;
  // first term: Pr^k (Pr + theta b)^-k
  double first = std::exp(k * (std::log(pr) - std::log(pr + theta * b)));
  // integrand in log space; Pr^{2k} underflows on its own
  double log_pref = 2.0 * k * std::log(pr) + std::log(k * b);
  auto integrand = [&](double w) {
    double num = pr + b * (theta - w) * (1.0 - rho);
    double den = pr * pr + theta * b * pr + (theta - w) * w * b * b * (1.0 - rho);
    return std::exp(log_pref + std::log(num) - (k + 1.0) * std::log(den));
  };
  return first + integrate_1d(integrand, 0.0, theta, spec);
}

double mrc_success_shifted(const ShiftedGammaFit& fit, double rho, double theta, double pr,
                           const QuadratureSpec& spec) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::domain_error("mrc_success_shifted: rho must be in [0, 1)");
  if (theta <= 0.0) return 1.0;
  const double k = fit.k, b = fit.beta, eps = fit.epsilon;
  // joint LT e^{-(s1+s2) eps} D^-k with D = 1 + s1 b + s2 b + s1 s2 b^2 (1-rho);
  // -dL/ds2 = e^{-(s1+s2) eps} D^{-k-1} (eps D + k b (1 + b s1 (1-rho)))
  auto inner = [&](double w) {
    double s1 = (theta - w) / pr;
    double s2 = w / pr;
    double d = 1.0 + s1 * b + s2 * b + s1 * s2 * b * b * (1.0 - rho);
    double num = eps * d + k * b * (1.0 + b * s1 * (1.0 - rho));
    return std::exp(-(s1 + s2) * eps - (k + 1.0) * std::log(d) + std::log(num));
  };
  double part1 = integrate_1d(inner, 0.0, theta, spec) / pr;
  // w > theta: marginal only, E{I e^{-s2 I}} for the shifted marginal
  auto outer = [&](double w) {
    double s2 = w / pr;
    double om = 1.0 + s2 * b;
    return std::exp(-s2 * eps - (k + 1.0) * std::log(om) + std::log(eps * om + k * b));
  };
  double part2 = integrate_semi_infinite(outer, theta, spec) / pr;
  return part1 + part2;
}

}  // namespace hcfield
