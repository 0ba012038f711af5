#include "hcfield/model.hpp"

namespace hcfield {

ValidationReport validate(const TrafficModel& traffic, const LinkConfig& link) {
  // Constructors already reject lambda*c >= 1, eta <= 1, r0 <= 0.
  ValidationReport rep;
  double c = traffic.hardcore_c();
  if (c > 0.0 && traffic.mu() >= 2.0 * link.r0() / (c * c)) {
    rep.decorrelation_marginal = true;
    rep.warnings.push_back(
        "decorrelation condition mu < 2*r0/c^2 fails; nearest-distance "
        "approximation may be inaccurate");
  }
  return rep;
}

}  // namespace hcfield
