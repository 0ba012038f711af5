#include "hcfield/process.hpp"

#include <algorithm>
#include <cmath>

namespace hcfield {

double pcf(const TrafficModel& traffic, double d) {
  const double lambda = traffic.lambda();
  const double c = traffic.hardcore_c();
  const double mu = traffic.mu();
  if (d < 0.0) return 0.0;
  if (c == 0.0) return lambda * lambda;
  if (d < c) return 0.0;
  const double log_mu = std::log(mu);
  double sum = 0.0;
  // terms with d - j*c > 0; exp(j log mu + (j-1) log(d-jc) - mu(d-jc) - lgamma(j))
  for (int j = 1; j * c < d; ++j) {
    double r = d - j * c;
    double lt = j * log_mu - mu * r - std::lgamma(j);
    if (j > 1) lt += (j - 1) * std::log(r);
    sum += std::exp(lt);
  }
  return lambda * sum;
}

double third_order_intensity(const TrafficModel& traffic, double d1, double d2) {
  return pcf(traffic, d1) * pcf(traffic, d2) / traffic.lambda();
}

double nearest_distance_cdf(const TrafficModel& traffic, const LinkConfig& link, double x) {
  const double r0 = link.r0();
  if (x < r0) throw std::domain_error("nearest_distance_cdf: x < r0");
  const double lambda = traffic.lambda();
  const double c = traffic.hardcore_c();
  const double mu = traffic.mu();
  if (x < r0 + c) {
    double t = 1.0 - lambda * (x - r0);
    return 1.0 - t * t;
  }
  double t = 1.0 - lambda * c;
  return 1.0 - t * t * std::exp(-2.0 * mu * (x - r0 - c));
}

double nearest_distance_pdf(const TrafficModel& traffic, const LinkConfig& link, double x) {
  const double r0 = link.r0();
  if (x < r0) throw std::domain_error("nearest_distance_pdf: x < r0");
  const double lambda = traffic.lambda();
  const double c = traffic.hardcore_c();
  const double mu = traffic.mu();
  if (x < r0 + c) return 2.0 * lambda * (1.0 - lambda * (x - r0));
  return 2.0 * lambda * (1.0 - lambda * c) * std::exp(-2.0 * mu * (x - r0 - c));
}

double nearest_distance_cdf_noguard(const TrafficModel& traffic, double x) {
  if (x < 0.0) return 0.0;
  const double lambda = traffic.lambda();
  const double c = traffic.hardcore_c();
  const double mu = traffic.mu();
  if (x < 0.5 * c) return 2.0 * lambda * x;
  return 1.0 - (1.0 - lambda * c) * std::exp(-mu * (2.0 * x - c));
}

double one_sided_nearest_cdf(const TrafficModel& traffic, const LinkConfig& link, double x) {
  const double r0 = link.r0();
  if (x < r0) throw std::domain_error("one_sided_nearest_cdf: x < r0");
  const double lambda = traffic.lambda();
  const double c = traffic.hardcore_c();
  const double mu = traffic.mu();
  if (x < r0 + c) return lambda * (x - r0);
  return 1.0 - (1.0 - lambda * c) * std::exp(-mu * (x - r0 - c));
}

double forward_recurrence_inv(const TrafficModel& traffic, double u) {
  const double lambda = traffic.lambda();
  const double c = traffic.hardcore_c();
  const double mu = traffic.mu();
  const double lc = lambda * c;
  if (u < lc) return u / lambda;
  return c + std::log((1.0 - lc) / (1.0 - u)) / mu;
}

PointConfiguration sample_configuration(const TrafficModel& traffic, double a, double b,
                                        Rng& rng, double guard_r0) {
  PointConfiguration cfg;
  cfg.window_a = a;
  cfg.window_b = b;
  if (guard_r0 <= 0.0) {
    stream_halfline(traffic, a, b, rng, [&](double x) { cfg.positions.push_back(x); });
    return cfg;
  }
  // negative half first so the merged list stays sorted
  std::vector<double> neg;
  stream_halfline(traffic, guard_r0, -a, rng, [&](double x) { neg.push_back(-x); });
  std::reverse(neg.begin(), neg.end());
  cfg.positions = std::move(neg);
  stream_halfline(traffic, guard_r0, b, rng, [&](double x) { cfg.positions.push_back(x); });
  return cfg;
}

}  // namespace hcfield
