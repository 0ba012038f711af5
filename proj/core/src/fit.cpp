#include "hcfield/fit.hpp"

#include <cmath>

namespace hcfield {

GammaFit fit_gamma(const MomentSummary& m) {
  if (!(m.mean > 0.0) || !(m.variance > 0.0))
    throw DegenerateMoments("fit_gamma: mean and variance must be positive");
  double k = m.mean * m.mean / m.variance;
  return {k, m.mean / k};
}

ShiftedGammaFit fit_shifted_gamma(const MomentSummary& m) {
  if (!(m.mean > 0.0) || !(m.variance > 0.0))
    throw DegenerateMoments("fit_shifted_gamma: mean and variance must be positive");
  if (!(m.skewness > 0.0))
    throw DegenerateMoments("fit_shifted_gamma: skewness must be positive");
  ShiftedGammaFit f;
  f.k = 4.0 / (m.skewness * m.skewness);
  f.beta = std::sqrt(m.variance / f.k);
  f.epsilon = m.mean - f.k * f.beta;
  f.negative_shift_warning = f.epsilon < 0.0;
  return f;
}

BivariateGammaFit fit_bivariate(const MomentSummary& m, double rho) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::domain_error("fit_bivariate: rho must be in [0, 1)");
  GammaFit g = fit_gamma(m);
  return {g.k, g.beta, rho};
}

}  // namespace hcfield
