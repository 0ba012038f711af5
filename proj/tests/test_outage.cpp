#include <doctest.h>

#include <cmath>

#include "hcfield/outage.hpp"

using namespace hcfield;

namespace {
const TrafficModel kTraffic(0.05, 10.0);  // lambda*c = 0.5
const LinkConfig kLink(50.0, 4.0, 8e-7);

MomentSummary moments() { return analytic_moments(kTraffic, kLink); }
}  // namespace

TEST_CASE("theta grid is dB-spaced and inclusive") {
  std::vector<double> g = theta_grid_db(-10.0, 20.0, 31);
  REQUIRE(g.size() == 31);
  CHECK(g.front() == doctest::Approx(-10.0));
  CHECK(g.back() == doctest::Approx(20.0));
  CHECK(g[1] - g[0] == doctest::Approx(1.0));
}

TEST_CASE("all outage models vanish at theta = 0") {
  CHECK(outage_ppp(kTraffic, kLink, 0.0) == 0.0);
  CHECK(outage_jensen(kTraffic, kLink, 0.0) == 0.0);
  CHECK(outage_gamma(fit_gamma(moments()), 0.0, kLink.pr()) == 0.0);
  CHECK(outage_shifted_gamma(fit_shifted_gamma(moments()), 0.0, kLink.pr()) == 0.0);
}

TEST_CASE("outage saturates to one at extreme thresholds") {
  CHECK(outage_ppp(kTraffic, kLink, 1e9) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(outage_gamma(fit_gamma(moments()), 1e9, kLink.pr()) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("outage curves are nondecreasing and bounded") {
  GammaFit g = fit_gamma(moments());
  ShiftedGammaFit sg = fit_shifted_gamma(moments());
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
  for (double db = -10.0; db <= 20.0; db += 1.0) {
    double th = db_to_linear(db);
    double a = outage_ppp(kTraffic, kLink, th);
    double b = outage_jensen(kTraffic, kLink, th);
    double c = outage_gamma(g, th, kLink.pr());
    double d = outage_shifted_gamma(sg, th, kLink.pr());
    for (double v : {a, b, c, d}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(a >= p1);
    CHECK(b >= p2);
    CHECK(c >= p3);
    CHECK(d >= p4);
    p1 = a; p2 = b; p3 = c; p4 = d;
  }
}

TEST_CASE("Jensen bound dominates the PPP curve") {
  for (double db = -10.0; db <= 20.0; db += 2.0) {
    double th = db_to_linear(db);
    CHECK(outage_jensen(kTraffic, kLink, th) >= outage_ppp(kTraffic, kLink, th));
  }
}

TEST_CASE("gamma fit of PPP moments tracks the exact PPP outage") {
  TrafficModel ppp(0.05, 0.0);
  GammaFit g = fit_gamma(analytic_moments(ppp, kLink));
  for (double db = -10.0; db <= 20.0; db += 1.0) {
    double th = db_to_linear(db);
    CHECK(std::fabs(outage_gamma(g, th, kLink.pr()) - outage_ppp(ppp, kLink, th)) <=
          0.02);
  }
}

TEST_CASE("zero shift makes the shifted-gamma outage collapse to plain gamma") {
  GammaFit g = fit_gamma(moments());
  ShiftedGammaFit sg{g.k, g.beta, 0.0};
  for (double db : {-5.0, 0.0, 5.0, 10.0}) {
    double th = db_to_linear(db);
    CHECK(outage_shifted_gamma(sg, th, kLink.pr()) ==
          doctest::Approx(outage_gamma(g, th, kLink.pr())).epsilon(1e-12));
  }
}

TEST_CASE("MRC success at theta = 0 is certain") {
  BivariateGammaFit b = fit_bivariate(moments(), 0.3);
  CHECK(mrc_success(b, 0.0, kLink.pr()) == doctest::Approx(1.0).epsilon(1e-12));
  ShiftedGammaFit sg = fit_shifted_gamma(moments());
  CHECK(mrc_success_shifted(sg, 0.3, 0.0, kLink.pr()) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("MRC with zero shift equals the plain bivariate formula") {
  GammaFit g = fit_gamma(moments());
  ShiftedGammaFit sg{g.k, g.beta, 0.0};
  BivariateGammaFit b = fit_bivariate(moments(), 0.3);
  for (double db : {-5.0, 0.0, 5.0, 10.0}) {
    double th = db_to_linear(db);
    CHECK(mrc_success_shifted(sg, 0.3, th, kLink.pr()) ==
          doctest::Approx(mrc_success(b, th, kLink.pr())).epsilon(1e-9));
  }
}

TEST_CASE("fully correlated branches behave as one interference with summed fading") {
  // with rho -> 1 both branches see the same interference draw, so success is
  // P(h1 + h2 >= s I) = L(s) - s L'(s) for gamma I
  MomentSummary m = moments();
  GammaFit g = fit_gamma(m);
  BivariateGammaFit b = fit_bivariate(m, 1.0 - 1e-10);
  for (double db : {-5.0, 0.0, 5.0, 10.0}) {
    double th = db_to_linear(db);
    double s = th / kLink.pr();
    double oracle = std::pow(1.0 + s * g.beta, -g.k) +
                    s * g.k * g.beta * std::pow(1.0 + s * g.beta, -g.k - 1.0);
    CHECK(mrc_success(b, th, kLink.pr()) == doctest::Approx(oracle).epsilon(1e-6));
  }
}

TEST_CASE("dual-branch combining never does worse than a single branch") {
  MomentSummary m = moments();
  GammaFit g = fit_gamma(m);
  BivariateGammaFit b = fit_bivariate(m, spatial_correlation(kTraffic));
  for (double db = -10.0; db <= 20.0; db += 1.0) {
    double th = db_to_linear(db);
    double single = 1.0 - outage_gamma(g, th, kLink.pr());
    CHECK(mrc_success(b, th, kLink.pr()) >= single - 1e-12);
  }
}

TEST_CASE("MRC success is nonincreasing in theta") {
  BivariateGammaFit b = fit_bivariate(moments(), 0.3);
  double prev = 1.0;
  for (double db = -10.0; db <= 20.0; db += 1.0) {
    double v = mrc_success(b, db_to_linear(db), kLink.pr());
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
}
