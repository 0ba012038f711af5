#pragma once

#include "hcfield/fit.hpp"
#include "hcfield/model.hpp"
#include "hcfield/moments.hpp"

namespace hcfield {

struct DivergentDelay : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotConverged : std::runtime_error {
  double last = 0.0, previous = 0.0;
  NotConverged(const std::string& msg, double last_, double prev_)
      : std::runtime_error(msg), last(last_), previous(prev_) {}
};
struct PrecisionInsufficient : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SeriesSpec {
  int truncation = 2000;        // T0
  int precision_digits = 0;     // 0 = auto: ceil((T0+1) log10 2) + 50
  int convergence_window = 3;   // successive T0 values compared
  double convergence_tol = 1e-6;  // relative
};

enum class DelayModel { Ppp, GammaFit };
enum class LtSource { GammaFit, PppExact };

/// Mean local delay with i.i.d. interferer locations per slot:
/// inverse of the success probability.
double mean_delay_iid(const TrafficModel& traffic, const LinkConfig& link, double theta,
                      DelayModel model);

/// Static PPP interferers, continuous transmissions: exp(s E{I}).
double mean_delay_static_ppp(const TrafficModel& traffic, const LinkConfig& link,
                             double theta);

struct SeriesResult {
  double value = 0.0;
  int truncation_used = 0;
  bool converged = false;
};

/// Static-interferer mean delay via the binomial-weighted alternating series
/// over per-slot-count Laplace transforms. The weighted sum runs in
/// arbitrary-precision arithmetic; the L_t values are double precision.
SeriesResult mean_delay_static_series(const TrafficModel& traffic, const LinkConfig& link,
                                      double theta, const SeriesSpec& spec,
                                      LtSource source);

}  // namespace hcfield
