#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hcfield/model.hpp"
#include "hcfield/moments.hpp"
#include "hcfield/outage.hpp"
#include "hcfield/rng.hpp"

namespace hcfield {

struct ExcessCensoring : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default simulation window half-length: max(1e3 c, 1e2 r0, 50/lambda).
/// Keeps the power-law tail bias on E{I} below 0.1%.
double default_window(const TrafficModel& traffic, const LinkConfig& link);

struct SampleEnsemble {
  uint64_t trials = 0;
  uint64_t master_seed = 0;
  double window_half_length = 0.0;
  int fading_shape = 1;
  std::vector<double> values;  // per-trial interference, trial order

  MomentSummary moments() const;  // empirical mean/variance/skewness
  double mean() const;
  double std_error_of_mean() const;
};

/// Seeded interference ensemble; fading is gamma(t, 1) per interferer
/// (t = 1: Rayleigh power). threads = 0 picks hardware concurrency; the
/// result is identical for any worker count.
SampleEnsemble simulate_interference(const TrafficModel& traffic, const LinkConfig& link,
                                     uint64_t trials, uint64_t seed, int fading_shape = 1,
                                     int threads = 1, double window_override = 0.0);

/// Outage curve from an ensemble: per trial draw link fading Exp(1) and count
/// SIR <= theta per grid point.
OutageCurve empirical_outage(const SampleEnsemble& ensemble, const LinkConfig& link,
                             const std::vector<double>& theta_db);

struct MrcResult {
  OutageCurve curve;           // column "empirical-mrc"
  double interference_corr = 0.0;  // Pearson corr of (I1, I2)
};

/// Dual-branch MRC: shared positions, independent fading vectors per branch.
MrcResult empirical_mrc(const TrafficModel& traffic, const LinkConfig& link,
                        const std::vector<double>& theta_db, uint64_t trials, uint64_t seed,
                        int threads = 1, double window_override = 0.0);

struct DelayEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double censored_fraction = 0.0;
  uint64_t runs = 0;
};

/// Static interferers: one configuration per run, fresh fading per slot,
/// slots counted to first success (capped; censored runs flagged).
DelayEstimate empirical_mean_delay_static(const TrafficModel& traffic, const LinkConfig& link,
                                          double theta, uint64_t runs, uint64_t slot_cap,
                                          uint64_t seed, double window_override = 0.0);

/// Success probability with i.i.d. locations per slot (one slot per trial);
/// 1/p estimates the i.i.d. mean delay.
DelayEstimate empirical_mean_delay_iid(const TrafficModel& traffic, const LinkConfig& link,
                                       double theta, uint64_t trials, uint64_t seed,
                                       double window_override = 0.0);

struct KthNearestStats {
  int k = 0;
  std::vector<double> distances;  // sorted ascending
  double cov = 0.0;
  double skewness = 0.0;
  double cov_se = 0.0;   // batch-means standard errors
  double skew_se = 0.0;

  double empirical_cdf(double x) const;
};

/// Sorted |x_j| statistics for k = 1..k_max with guard zone r0.
std::vector<KthNearestStats> empirical_kth_nearest(const TrafficModel& traffic,
                                                   const LinkConfig& link, int k_max,
                                                   uint64_t trials, uint64_t seed);

/// Nearest-point distance samples with the origin on the road (no guard zone).
std::vector<double> empirical_nearest_noguard(const TrafficModel& traffic, uint64_t trials,
                                              uint64_t seed);

/// Kolmogorov-Smirnov distance between sorted samples and a CDF.
double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf);

}  // namespace hcfield
