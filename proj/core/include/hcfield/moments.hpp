#pragma once

#include "hcfield/model.hpp"
#include "hcfield/specfun.hpp"

namespace hcfield {

enum class MomentProvenance { AnalyticApprox, Quadrature, Empirical };

struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;  // NaN when unset
  MomentProvenance provenance = MomentProvenance::AnalyticApprox;
  int nakagami_t = 1;  // fading shape; 1 = Rayleigh
};

/// Campbell mean: 2*lambda*r0^(1-eta)/(eta-1). Independent of c.
double mean_interference(const TrafficModel& traffic, const LinkConfig& link);

/// PPP variance scaled by (1 - lc + lc^2/2).
double variance_approx(const TrafficModel& traffic, const LinkConfig& link);

/// PPP skewness scaled by (1 - lc/2); valid for lc -> 0, c/r0 -> 0.
double skewness_approx(const TrafficModel& traffic, const LinkConfig& link);

/// Closed-form approximation of E{I^3}.
double third_moment_approx(const TrafficModel& traffic, const LinkConfig& link);

MomentSummary analytic_moments(const TrafficModel& traffic, const LinkConfig& link);

/// Mean/variance of interference under gamma(t, 1) fading; skewness unset.
MomentSummary nakagami_moments(const TrafficModel& traffic, const LinkConfig& link, int t);

enum class CorrelationForm { ExactRatio, Linearized };

/// Spatial (and temporal) correlation coefficient of interference between two
/// branches sharing the interferer positions.
double spatial_correlation(const TrafficModel& traffic,
                           CorrelationForm form = CorrelationForm::ExactRatio);

/// Correlation coefficient as the exact covariance/variance ratio, with the
/// pair integral evaluated by quadrature instead of its closed-form
/// approximation. Needed outside the lc -> 0, c/r0 -> 0 validity region.
double spatial_correlation_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                                      const struct MomentQuadratureSpec& spec);
double spatial_correlation_quadrature(const TrafficModel& traffic, const LinkConfig& link);

/// Closed-form appendix pieces, exposed individually for testing.
struct SprimeTerms {
  double sprime_gt2c;   // pairs separated by more than the PCF cutoff
  double sprime_lt2c;   // pairs inside the cutoff
  double six_sprime;    // 6 S'
  double sprime2;       // S''
};
SprimeTerms sprime_terms(const TrafficModel& traffic, const LinkConfig& link);

/// Quadrature oracles. The PCF is taken exact (series) up to
/// cutoff_mult*c and lambda^2 beyond.
struct MomentQuadratureSpec {
  QuadratureSpec quad;
  double cutoff_mult = 3.0;
};

/// Sum over ordered pairs of g^2(x) g(y) rho2(x,y); equals S'.
double pair_integral_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                                const MomentQuadratureSpec& spec = {});

/// Sum over ordered triples of g(x) g(y) g(z) rho3; equals S''.
double triple_integral_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                                  const MomentQuadratureSpec& spec = {});

double variance_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                           const MomentQuadratureSpec& spec = {});

double third_moment_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                               const MomentQuadratureSpec& spec = {});

/// Skewness from the quadrature moments via the central-moment identity
/// E{I^3} - 3 E V - E^3 over V^(3/2).
double skewness_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                           const MomentQuadratureSpec& spec = {});

MomentSummary quadrature_moments(const TrafficModel& traffic, const LinkConfig& link,
                                 const MomentQuadratureSpec& spec = {});

}  // namespace hcfield
