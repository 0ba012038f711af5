#pragma once

#include "hcfield/moments.hpp"

namespace hcfield {

struct DegenerateMoments : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Gamma(k, beta) matching mean and variance: k = E^2/V, beta = E/k.
struct GammaFit {
  double k;
  double beta;

  double implied_skewness() const { return 2.0 / std::sqrt(k); }
  /// (1 + s beta)^-k
  double laplace(double s) const { return std::exp(-k * std::log1p(s * beta)); }
};

/// Gamma translated by epsilon, matching mean, variance and skewness.
struct ShiftedGammaFit {
  double k;
  double beta;
  double epsilon;
  bool negative_shift_warning = false;

  /// e^{-s eps} (1 + s beta)^-k
  double laplace(double s) const {
    return std::exp(-s * epsilon - k * std::log1p(s * beta));
  }
};

/// Kibble-type bivariate gamma: identical gamma marginals, correlation rho,
/// joint LT (1 + s1 b + s2 b + s1 s2 b^2 (1-rho))^-k.
struct BivariateGammaFit {
  double k;
  double beta;
  double rho;

  double joint_laplace(double s1, double s2) const {
    return std::pow(1.0 + s1 * beta + s2 * beta + s1 * s2 * beta * beta * (1.0 - rho), -k);
  }
};

GammaFit fit_gamma(const MomentSummary& moments);
ShiftedGammaFit fit_shifted_gamma(const MomentSummary& moments);
BivariateGammaFit fit_bivariate(const MomentSummary& moments, double rho);

}  // namespace hcfield
