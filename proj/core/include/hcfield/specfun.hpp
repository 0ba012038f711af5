#pragma once

#include <functional>
#include <stdexcept>

namespace hcfield {

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ToleranceNotMet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gauss hypergeometric 2F1(a,b;c;z) for z in (-1, 0].
/// Negative arguments go through the Pfaff transform to z/(z-1) in [0, 1/2)
/// followed by the power series.
double hyp2f1(double a, double b, double c, double z);

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

/// Adaptive Gauss-Kronrod (G7/K15) on [a, b].
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec = {});

/// Integral over [a, inf) via the substitution x = a + u/(1-u).
/// Requires |f(x)| <= C x^{-p}, p > 1 (or faster decay).
double integrate_semi_infinite(const std::function<double(double)>& f, double a,
                               const QuadratureSpec& spec = {});

}  // namespace hcfield
