#include "hcfield/moments.hpp"

#include <cmath>
#include <limits>

#include "hcfield/process.hpp"

namespace hcfield {

double mean_interference(const TrafficModel& traffic, const LinkConfig& link) {
  const double eta = link.eta();
  return 2.0 * traffic.lambda() * std::pow(link.r0(), 1.0 - eta) / (eta - 1.0);
}

double variance_approx(const TrafficModel& traffic, const LinkConfig& link) {
  const double eta = link.eta();
  const double lc = traffic.lambda() * traffic.hardcore_c();
  double ppp = 4.0 * traffic.lambda() * std::pow(link.r0(), 1.0 - 2.0 * eta) / (2.0 * eta - 1.0);
  return ppp * (1.0 - lc + 0.5 * lc * lc);
}

double skewness_approx(const TrafficModel& traffic, const LinkConfig& link) {
  const double eta = link.eta();
  const double lambda = traffic.lambda();
  const double r0 = link.r0();
  const double lc = lambda * traffic.hardcore_c();
  double m3_ppp = 12.0 * lambda * std::pow(r0, 1.0 - 3.0 * eta) / (3.0 * eta - 1.0);
  double v_ppp = 4.0 * lambda * std::pow(r0, 1.0 - 2.0 * eta) / (2.0 * eta - 1.0);
  return m3_ppp * std::pow(v_ppp, -1.5) * (1.0 - 0.5 * lc);
}

double third_moment_approx(const TrafficModel& traffic, const LinkConfig& link) {
  const double eta = link.eta();
  const double lambda = traffic.lambda();
  const double c = traffic.hardcore_c();
  const double r0 = link.r0();
  const double lc = lambda * c;
  double t1 = 12.0 * lambda * std::pow(r0, 1.0 - 3.0 * eta) / (3.0 * eta - 1.0) *
              (1.0 - 2.0 * lc + 9.0 * lc * lc);
  double t2 = 24.0 * lambda * lambda * std::pow(r0, 2.0 - 3.0 * eta) /
              ((2.0 * eta - 1.0) * (eta - 1.0)) * (1.0 - lc);
  double t3 = 8.0 * std::pow(lambda, 3.0) * std::pow(r0, 3.0 - 3.0 * eta) /
              std::pow(eta - 1.0, 3.0);
  return t1 + t2 + t3;
}

MomentSummary analytic_moments(const TrafficModel& traffic, const LinkConfig& link) {
  return {mean_interference(traffic, link), variance_approx(traffic, link),
          skewness_approx(traffic, link), MomentProvenance::AnalyticApprox, 1};
}

MomentSummary nakagami_moments(const TrafficModel& traffic, const LinkConfig& link, int t) {
  if (t < 1) throw std::domain_error("nakagami_moments: t must be >= 1");
  const double eta = link.eta();
  const double lambda = traffic.lambda();
  const double r0 = link.r0();
  const double q = 1.0 - lambda * traffic.hardcore_c();
  MomentSummary m;
  m.mean = 2.0 * lambda * t * std::pow(r0, 1.0 - eta) / (eta - 1.0);
  m.variance =
      2.0 * lambda * t * (1.0 + t * q * q) * std::pow(r0, 1.0 - 2.0 * eta) / (2.0 * eta - 1.0);
  m.skewness = std::numeric_limits<double>::quiet_NaN();
  m.nakagami_t = t;
  return m;
}

double spatial_correlation(const TrafficModel& traffic, CorrelationForm form) {
  const double lc = traffic.lambda() * traffic.hardcore_c();
  if (form == CorrelationForm::Linearized) return 0.5 * (1.0 - lc);
  double q = 1.0 - lc;
  return q * q / (2.0 - 2.0 * lc + lc * lc);
}

SprimeTerms sprime_terms(const TrafficModel& traffic, const LinkConfig& link) {
  const double eta = link.eta();
  const double lambda = traffic.lambda();
  const double c = traffic.hardcore_c();
  const double r0 = link.r0();
  const double l2 = lambda * lambda;
  const double l3 = l2 * lambda;
  const double p2 = std::pow(r0, 2.0 - 3.0 * eta);
  const double p1 = std::pow(r0, 1.0 - 3.0 * eta);
  const double p3 = std::pow(r0, 3.0 - 3.0 * eta);
  SprimeTerms t;
  t.sprime_gt2c = 4.0 * l2 * p2 / ((2.0 * eta - 1.0) * (eta - 1.0)) -
                  8.0 * l2 * c * p1 / (3.0 * eta - 1.0);
  t.sprime_lt2c =
      4.0 * l2 * c * p1 / (3.0 * eta - 1.0) + 2.0 * l3 * c * c * p1 / (3.0 * eta - 1.0);
  t.six_sprime = 6.0 * (t.sprime_gt2c + t.sprime_lt2c);
  t.sprime2 = 8.0 * l3 * p3 / std::pow(eta - 1.0, 3.0) -
              24.0 * l3 * c * p2 / ((2.0 * eta - 1.0) * (eta - 1.0)) +
              96.0 * l3 * c * c * p1 / (3.0 * eta - 1.0);
  return t;
}

namespace {

// rho2(d) - lambda^2, truncated to zero beyond the decorrelation cutoff.
struct CorrKernel {
  const TrafficModel& traffic;
  double cutoff;  // cutoff_mult * c
  double l2;

  double operator()(double d) const { return pcf(traffic, d) - l2; }

  // Integrates f(u)*K(u) over (0, cutoff], splitting at the PCF kinks j*c.
  // Each cell gets an absolute floor scaled to its sampled magnitude so that
  // negligible far cells cannot stall the relative test at round-off.
  template <class F>
  double integrate(const F& f, const QuadratureSpec& quad) const {
    const double c = traffic.hardcore_c();
    if (c == 0.0 || cutoff <= 0.0) return 0.0;
    double total = 0.0;
    for (double a = 0.0; a < cutoff; a += c) {
      double b = std::min(a + c, cutoff);
      double fmax = 0.0;
      for (int i = 1; i <= 4; ++i) {
        double u = a + (b - a) * i / 5.0;
        fmax = std::max(fmax, std::fabs(f(u)));
      }
      if (fmax == 0.0) continue;
      // K carries ~1e-16*l2 of cancellation noise from pcf - l2
      QuadratureSpec cell = quad;
      cell.abs_tol = std::max(cell.abs_tol, 1e-13 * l2 * fmax * (b - a));
      total += integrate_1d([&](double u) { return f(u) * (*this)(u); }, a, b, cell);
    }
    return total;
  }
};

double pow_int_aware(double x, double e) { return std::pow(x, e); }

// The correction integrals are tiny in absolute terms (~variance scale), so
// the absolute-tolerance shortcut must not fire: convergence is relative.
QuadratureSpec relative_only(QuadratureSpec q, double rel_floor) {
  q.abs_tol = 0.0;
  q.rel_tol = std::max(q.rel_tol, rel_floor);
  return q;
}

}  // namespace

double pair_integral_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                                const MomentQuadratureSpec& spec) {
  const double eta = link.eta();
  const double lambda = traffic.lambda();
  const double r0 = link.r0();
  const double l2 = lambda * lambda;
  const double Dc = spec.cutoff_mult * traffic.hardcore_c();
  CorrKernel K{traffic, Dc, l2};

  // 2 * int_{r0}^inf x^-2e dx and 2 * int_{r0}^inf x^-e dx over both sides
  double int_g2 = 2.0 * std::pow(r0, 1.0 - 2.0 * eta) / (2.0 * eta - 1.0);
  double int_g = 2.0 * std::pow(r0, 1.0 - eta) / (eta - 1.0);
  double base = l2 * int_g2 * int_g;

  QuadratureSpec outer_q = relative_only(spec.quad, 1e-8);
  QuadratureSpec inner = relative_only(spec.quad, 1e-10);

  // Same-side ordered pairs (p, p+u), u in (0, Dc]; the g^2 weight lands on
  // either member. Two sides double the contribution.
  auto outer = [&](double p) {
    double g2p = pow_int_aware(p, -2.0 * eta);
    double gp = pow_int_aware(p, -eta);
    return K.integrate(
        [&](double u) {
          double g2q = pow_int_aware(p + u, -2.0 * eta);
          double gq = pow_int_aware(p + u, -eta);
          return g2p * gq + g2q * gp;
        },
        inner);
  };
  double corr = 2.0 * integrate_semi_infinite(outer, r0, outer_q);

  // Opposite-side pairs matter only when the cutoff spans the guard zone.
  if (Dc > 2.0 * r0) {
    auto cross = [&](double x) {
      double g2x = pow_int_aware(x, -2.0 * eta);
      double gx = pow_int_aware(x, -eta);
      double ymax = Dc - x;
      if (ymax <= r0) return 0.0;
      return integrate_1d(
          [&](double y) {
            double g2y = pow_int_aware(y, -2.0 * eta);
            double gy = pow_int_aware(y, -eta);
            return (g2x * gy + g2y * gx) * K(x + y);
          },
          r0, ymax, inner);
    };
    corr += integrate_1d(cross, r0, Dc - r0, outer_q);
  }
  return base + corr;
}

double triple_integral_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                                  const MomentQuadratureSpec& spec) {
  const double eta = link.eta();
  const double lambda = traffic.lambda();
  const double r0 = link.r0();
  const double l2 = lambda * lambda;
  const double Dc = spec.cutoff_mult * traffic.hardcore_c();
  if (Dc > 2.0 * r0)
    throw std::domain_error(
        "triple_integral_quadrature: decorrelation cutoff exceeds guard-zone width");
  CorrKernel K{traffic, Dc, l2};

  double int_g = 2.0 * std::pow(r0, 1.0 - eta) / (eta - 1.0);
  double base = l2 * lambda * int_g * int_g * int_g;

  // three nesting levels: each must tolerate the adaptive noise of the next
  QuadratureSpec outer_q = relative_only(spec.quad, 1e-7);
  QuadratureSpec inner = relative_only(spec.quad, 1e-9);
  QuadratureSpec innermost = relative_only(spec.quad, 1e-11);

  // A = 6 lambda * sum over ordered triples with the near pair leading.
  // Tail(y): integral of g over domain points beyond y.
  auto tail_right = [&](double y) { return std::pow(y, 1.0 - eta) / (eta - 1.0); };
  auto tail_from_left = [&](double q) {
    // near pair at (-q-u, -q): remaining mass right of -q
    return (2.0 * std::pow(r0, 1.0 - eta) - std::pow(q, 1.0 - eta)) / (eta - 1.0);
  };
  auto a_outer = [&](double p) {
    double gp = pow_int_aware(p, -eta);
    return K.integrate(
        [&](double u) {
          double gq = pow_int_aware(p + u, -eta);
          return gp * gq * (tail_right(p + u) + tail_from_left(p));
        },
        inner);
  };
  double A = 6.0 * lambda * integrate_semi_infinite(a_outer, r0, outer_q);

  // C: both gaps inside the cutoff; same-side chains only (cutoff <= 2 r0).
  auto c_outer = [&](double p) {
    double gp = pow_int_aware(p, -eta);
    return K.integrate(
        [&](double u) {
          double gq = pow_int_aware(p + u, -eta);
          double inner_v = K.integrate(
              [&](double v) { return pow_int_aware(p + u + v, -eta); }, innermost);
          return gp * gq * inner_v;
        },
        inner);
  };
  double C = (6.0 / lambda) * 2.0 * integrate_semi_infinite(c_outer, r0, outer_q);

  // the mirrored near-pair sector equals A by reflection
  return base + 2.0 * A + C;
}

double variance_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                           const MomentQuadratureSpec& spec) {
  const double eta = link.eta();
  const double lambda = traffic.lambda();
  const double r0 = link.r0();
  const double l2 = lambda * lambda;
  const double Dc = spec.cutoff_mult * traffic.hardcore_c();
  CorrKernel K{traffic, Dc, l2};

  double single = 2.0 * lambda *
                  integrate_semi_infinite(
                      [&](double x) { return std::pow(x, -2.0 * eta); }, r0,
                      relative_only(spec.quad, 1e-10)) *
                  2.0;  // E{h^2} = 2, both sides
  double int_g = 2.0 * std::pow(r0, 1.0 - eta) / (eta - 1.0);
  double mean = lambda * int_g;

  QuadratureSpec outer_q = relative_only(spec.quad, 1e-8);
  QuadratureSpec inner = relative_only(spec.quad, 1e-10);
  auto outer = [&](double p) {
    double gp = pow_int_aware(p, -eta);
    return K.integrate(
        [&](double u) { return 2.0 * gp * pow_int_aware(p + u, -eta); }, inner);
  };
  double pair = l2 * int_g * int_g + 2.0 * integrate_semi_infinite(outer, r0, outer_q);
  if (Dc > 2.0 * r0) {
    auto cross = [&](double x) {
      double gx = pow_int_aware(x, -eta);
      double ymax = Dc - x;
      if (ymax <= r0) return 0.0;
      return integrate_1d(
          [&](double y) { return 2.0 * gx * pow_int_aware(y, -eta) * K(x + y); }, r0, ymax,
          inner);
    };
    pair += integrate_1d(cross, r0, Dc - r0, outer_q);
  }
  return single + pair - mean * mean;
}

double spatial_correlation_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                                      const MomentQuadratureSpec& spec) {
  // Var(I) = E{sum g^2} + Var(sum g); the covariance between branches with
  // shared positions and independent unit-mean fading is Var(sum g).
  const double eta = link.eta();
  double sum_g2 =
      2.0 * traffic.lambda() *
      integrate_semi_infinite([&](double x) { return std::pow(x, -2.0 * eta); }, link.r0(),
                              relative_only(spec.quad, 1e-10));
  double var = variance_quadrature(traffic, link, spec);
  return (var - sum_g2) / var;
}

double spatial_correlation_quadrature(const TrafficModel& traffic, const LinkConfig& link) {
  return spatial_correlation_quadrature(traffic, link, MomentQuadratureSpec{});
}

double third_moment_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                               const MomentQuadratureSpec& spec) {
  const double eta = link.eta();
  const double lambda = traffic.lambda();
  const double r0 = link.r0();
  double int_g3 = 2.0 * integrate_semi_infinite(
                            [&](double x) { return std::pow(x, -3.0 * eta); }, r0,
                            relative_only(spec.quad, 1e-10));
  double single = 6.0 * lambda * int_g3;
  double pairs = 6.0 * pair_integral_quadrature(traffic, link, spec);
  double triples = triple_integral_quadrature(traffic, link, spec);
  return single + pairs + triples;
}

double skewness_quadrature(const TrafficModel& traffic, const LinkConfig& link,
                           const MomentQuadratureSpec& spec) {
  const double eta = link.eta();
  double mean = 2.0 * traffic.lambda() *
                integrate_semi_infinite([&](double x) { return std::pow(x, -eta); },
                                        link.r0(), relative_only(spec.quad, 1e-10));
  double var = variance_quadrature(traffic, link, spec);
  double m3 = third_moment_quadrature(traffic, link, spec);
  double central3 = m3 - 3.0 * mean * var - mean * mean * mean;
  return central3 * std::pow(var, -1.5);
}

MomentSummary quadrature_moments(const TrafficModel& traffic, const LinkConfig& link,
                                 const MomentQuadratureSpec& spec) {
  MomentSummary m;
  m.mean = 2.0 * traffic.lambda() *
           integrate_semi_infinite([&](double x) { return std::pow(x, -link.eta()); },
                                   link.r0(), relative_only(spec.quad, 1e-10));
  m.variance = variance_quadrature(traffic, link, spec);
  double m3 = third_moment_quadrature(traffic, link, spec);
  m.skewness = (m3 - 3.0 * m.mean * m.variance - std::pow(m.mean, 3.0)) *
               std::pow(m.variance, -1.5);
  m.provenance = MomentProvenance::Quadrature;
  return m;
}

}  // namespace hcfield
