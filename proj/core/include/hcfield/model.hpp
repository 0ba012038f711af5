#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcfield {

struct InvalidTraffic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidLink : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Cowan M2 traffic: headway = hardcore_c + Exponential(mu), intensity lambda.
/// hardcore_c == 0 collapses to a PPP of intensity lambda.
class TrafficModel {
 public:
  TrafficModel(double lambda, double hardcore_c) : lambda_(lambda), c_(hardcore_c) {
    if (!(lambda > 0.0)) throw InvalidTraffic("lambda must be > 0");
    if (!(hardcore_c >= 0.0)) throw InvalidTraffic("hardcore_c must be >= 0");
    if (!(lambda * hardcore_c < 1.0))
      throw InvalidTraffic("lambda*c must be < 1 (got " + std::to_string(lambda * hardcore_c) + ")");
    mu_ = lambda_ / (1.0 - lambda_ * c_);
  }

  double lambda() const { return lambda_; }
  double hardcore_c() const { return c_; }
  double mu() const { return mu_; }
  bool is_ppp() const { return c_ == 0.0; }

 private:
  double lambda_;
  double c_;
  double mu_;
};

/// Guard zone half-length r0, pathloss exponent eta, useful signal power pr.
class LinkConfig {
 public:
  LinkConfig(double r0, double eta, double pr = 1.0) : r0_(r0), eta_(eta), pr_(pr) {
    if (!(r0 > 0.0)) throw InvalidLink("r0 must be > 0");
    if (!(eta > 1.0)) throw InvalidLink("eta must be > 1");
    if (!(pr > 0.0)) throw InvalidLink("pr must be > 0");
  }

  double r0() const { return r0_; }
  double eta() const { return eta_; }
  double pr() const { return pr_; }

  /// g(r) = |r|^-eta outside the guard zone, 0 inside.
  double pathloss(double r) const {
    double a = std::fabs(r);
    if (a <= r0_) return 0.0;
    return std::pow(a, -eta_);
  }

 private:
  double r0_;
  double eta_;
  double pr_;
};

struct SirThreshold {
  double theta;  // linear scale
  double s;      // theta / pr

  SirThreshold(double theta_lin, const LinkConfig& link) : theta(theta_lin), s(theta_lin / link.pr()) {
    if (theta < 0.0) throw std::domain_error("theta must be >= 0");
  }
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

struct ValidationReport {
  bool valid = true;
  bool decorrelation_marginal = false;  // mu >= 2 r0 / c^2
  std::vector<std::string> warnings;
};

/// Throws InvalidTraffic / InvalidLink on hard errors; warnings never abort.
ValidationReport validate(const TrafficModel& traffic, const LinkConfig& link);

}  // namespace hcfield
