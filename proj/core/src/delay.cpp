#include "hcfield/delay.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <vector>

#include "hcfield/outage.hpp"

namespace hcfield {

namespace mp = boost::multiprecision;
using BigFloat = mp::mpfr_float;

double mean_delay_iid(const TrafficModel& traffic, const LinkConfig& link, double theta,
                      DelayModel model) {
  double s = theta / link.pr();
  if (model == DelayModel::Ppp) {
    double expo = 2.0 * traffic.lambda() * ppp_outage_exponent(link, s);
    if (expo > 700.0) throw DivergentDelay("mean_delay_iid: success probability underflows");
    return std::exp(expo);
  }
  GammaFit fit = fit_gamma(analytic_moments(traffic, link));
  double loginv = fit.k * std::log1p(s * fit.beta);
  if (loginv > 700.0) throw DivergentDelay("mean_delay_iid: success probability underflows");
  return std::exp(loginv);
}

double mean_delay_static_ppp(const TrafficModel& traffic, const LinkConfig& link,
                             double theta) {
  double s = theta / link.pr();
  return std::exp(s * mean_interference(traffic, link));
}

namespace {

int required_digits(int t0) {
  return static_cast<int>(std::ceil((t0 + 1) * std::log10(2.0))) + 50;
}

// S(T) = sum_{t=0}^{T} (-1)^t C(T+1, t+1) L_t, binomials by multiplicative
// recurrence in high precision.
BigFloat weighted_sum(const std::vector<double>& lt, int t_max) {
  BigFloat binom = t_max + 1;  // C(T+1, 1)
  BigFloat sum = binom * lt[0];
  int sign = -1;
  for (int t = 1; t <= t_max; ++t) {
    binom *= BigFloat(t_max + 1 - t) / BigFloat(t + 1);
    sum += sign * binom * BigFloat(lt[t]);
    sign = -sign;
  }
  return sum;
}

}  // namespace

SeriesResult mean_delay_static_series(const TrafficModel& traffic, const LinkConfig& link,
                                      double theta, const SeriesSpec& spec,
                                      LtSource source) {
  const int t0 = spec.truncation;
  if (t0 < 1) throw std::domain_error("mean_delay_static_series: truncation must be >= 1");
  int digits = spec.precision_digits > 0 ? spec.precision_digits : required_digits(t0);
  if (digits < required_digits(t0))
    throw PrecisionInsufficient("precision " + std::to_string(digits) +
                                " digits insufficient for T0 = " + std::to_string(t0));
  BigFloat::default_precision(digits);

  const double s = theta / link.pr();
  auto laplace = [&](int t) {
    if (source == LtSource::GammaFit) {
      MomentSummary m = nakagami_moments(traffic, link, t);
      double k = m.mean * m.mean / m.variance;
      double beta = m.variance / m.mean;
      return std::exp(-k * std::log1p(s * beta));
    }
    return std::exp(-2.0 * traffic.lambda() * ppp_multi_slot_exponent(link, s, t));
  };

  // The binomial weights amplify the double-precision rounding of L_t by
  // ~2^T, so T0 is an upper bound: grow T until a window of successive
  // partial sums agrees, well before the noise floor takes over.
  const int window = std::max(2, spec.convergence_window);
  std::vector<double> lt = {1.0};  // empty product: LT of zero slots
  double prev = 0.0;
  int stable = 0;
  for (int t_max = 1; t_max <= t0; ++t_max) {
    lt.push_back(laplace(t_max));
    double value = static_cast<double>(weighted_sum(lt, t_max));
    if (t_max > 1 && std::fabs(value - prev) <= spec.convergence_tol * std::fabs(value))
      ++stable;
    else
      stable = 0;
    if (stable >= window) {
      SeriesResult res;
      res.value = value;
      res.truncation_used = t_max;
      res.converged = true;
      return res;
    }
    double older = prev;
    prev = value;
    if (t_max == t0)
      throw NotConverged("mean_delay_static_series: partial sums still moving at T0",
                         value, older);
  }
  throw std::domain_error("mean_delay_static_series: unreachable");
}

}  // namespace hcfield
