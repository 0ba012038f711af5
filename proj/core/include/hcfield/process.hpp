#pragma once

#include <vector>

#include "hcfield/model.hpp"
#include "hcfield/rng.hpp"

namespace hcfield {

struct PointConfiguration {
  std::vector<double> positions;  // strictly increasing, gaps >= hardcore_c
  double window_a = 0.0;
  double window_b = 0.0;
};

/// Pair correlation function rho^(2)(d); 0 for d < c, lambda^2 for a PPP.
/// Series terms are evaluated in log-space.
double pcf(const TrafficModel& traffic, double d);

/// rho^(3) for an ordered triple with gaps d1, d2: rho2(d1)*rho2(d2)/lambda.
double third_order_intensity(const TrafficModel& traffic, double d1, double d2);

/// CDF of the distance to the nearest interferer with guard zone r0
/// (minimum of two i.i.d. one-sided distances).
double nearest_distance_cdf(const TrafficModel& traffic, const LinkConfig& link, double x);

/// Density of the same law; integrates to 1 on [r0, inf).
double nearest_distance_pdf(const TrafficModel& traffic, const LinkConfig& link, double x);

/// CDF of the nearest-point distance with no guard zone (origin on the road).
double nearest_distance_cdf_noguard(const TrafficModel& traffic, double x);

/// CDF of the nearest interferer on the positive half-axis beyond r0.
/// This is also the forward-recurrence law used by the sampler.
double one_sided_nearest_cdf(const TrafficModel& traffic, const LinkConfig& link, double x);

/// Closed-form inverse of the forward-recurrence CDF (distance beyond the
/// reference point), two branches: linear then log.
double forward_recurrence_inv(const TrafficModel& traffic, double u);

/// Streams the points of a stationary draw on [start, end): first point at a
/// forward-recurrence distance from start, then gaps c + Exponential(mu).
/// Visitor receives each coordinate in increasing order.
template <class Visitor>
void stream_halfline(const TrafficModel& traffic, double start, double end, Rng& rng,
                     Visitor&& visit) {
  double x = start + forward_recurrence_inv(traffic, rng.uniform());
  const double c = traffic.hardcore_c();
  const double inv_mu = 1.0 / traffic.mu();
  while (x < end) {
    visit(x);
    x += c + rng.exponential(inv_mu);
  }
}

/// Stationary draw on [a, b]. guard_r0 > 0 carves out (-r0, r0): the two
/// half-axes are sampled independently, each started at its guard edge.
PointConfiguration sample_configuration(const TrafficModel& traffic, double a, double b,
                                        Rng& rng, double guard_r0 = 0.0);

}  // namespace hcfield
