#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hcfield/mc.hpp"
#include "hcfield/process.hpp"

using namespace hcfield;

namespace {
const TrafficModel kTraffic(0.1, 4.0);
const LinkConfig kLink(100.0, 3.0);
}  // namespace

TEST_CASE("identical seeds give identical ensembles, regardless of workers") {
  SampleEnsemble a = simulate_interference(kTraffic, kLink, 5000, 123, 1, 1);
  SampleEnsemble b = simulate_interference(kTraffic, kLink, 5000, 123, 1, 1);
  SampleEnsemble c = simulate_interference(kTraffic, kLink, 5000, 123, 1, 4);
  REQUIRE(a.values.size() == 5000);
  CHECK(a.values == b.values);
  CHECK(a.values == c.values);
}

TEST_CASE("different seeds decorrelate the ensemble") {
  SampleEnsemble a = simulate_interference(kTraffic, kLink, 1000, 1, 1, 1);
  SampleEnsemble b = simulate_interference(kTraffic, kLink, 1000, 2, 1, 1);
  CHECK(a.values != b.values);
}

TEST_CASE("empirical mean honors Campbell's formula") {
  SampleEnsemble ens = simulate_interference(kTraffic, kLink, 50000, 77, 1, 1);
  double exact = 2.0 * 0.1 * std::pow(100.0, -2.0) / 2.0;
  CHECK(std::fabs(ens.moments().mean - exact) < 3.0 * ens.std_error_of_mean());
}

TEST_CASE("doubling the window does not move the mean materially") {
  double w = default_window(kTraffic, kLink);
  SampleEnsemble a = simulate_interference(kTraffic, kLink, 40000, 5, 1, 1);
  SampleEnsemble b = simulate_interference(kTraffic, kLink, 40000, 5, 1, 1, 2.0 * w);
  double se = std::hypot(a.std_error_of_mean(), b.std_error_of_mean());
  CHECK(std::fabs(a.moments().mean - b.moments().mean) < 3.0 * se);
}

TEST_CASE("standard error shrinks as one over root trials") {
  SampleEnsemble a = simulate_interference(kTraffic, kLink, 4000, 9, 1, 1);
  SampleEnsemble b = simulate_interference(kTraffic, kLink, 64000, 9, 1, 1);
  double ratio = a.std_error_of_mean() / b.std_error_of_mean();
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("empirical moments approach the quadrature oracle") {
  SampleEnsemble ens = simulate_interference(kTraffic, kLink, 100000, 31, 1, 1);
  MomentSummary emp = ens.moments();
  CHECK(emp.variance ==
        doctest::Approx(variance_quadrature(kTraffic, kLink)).epsilon(0.05));
  CHECK(emp.skewness == doctest::Approx(0.609).epsilon(0.08));
}

TEST_CASE("heavier per-interferer fading shifts the mean linearly") {
  SampleEnsemble t2 = simulate_interference(kTraffic, kLink, 50000, 13, 2, 1);
  double exact = 2.0 * 2.0 * 0.1 * std::pow(100.0, -2.0) / 2.0;
  CHECK(std::fabs(t2.moments().mean - exact) < 3.0 * t2.std_error_of_mean());
}

TEST_CASE("empirical outage starts at zero and grows monotonically") {
  SampleEnsemble ens =
      simulate_interference(TrafficModel(0.05, 10.0), LinkConfig(50.0, 4.0, 8e-7),
                            20000, 3, 1, 1);
  std::vector<double> grid = theta_grid_db(-10.0, 20.0, 16);
  OutageCurve curve = empirical_outage(ens, LinkConfig(50.0, 4.0, 8e-7), grid);
  const std::vector<double>& v = curve.columns[0].values;
  double prev = -1.0;
  for (double p : v) {
    CHECK(p >= prev);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    prev = p;
  }
}

TEST_CASE("static-delay runs at theta = 0 take exactly one slot") {
  DelayEstimate d = empirical_mean_delay_static(kTraffic, kLink, 0.0, 200, 1000, 17);
  CHECK(d.mean == 1.0);
  CHECK(d.std_error == 0.0);
  CHECK(d.censored_fraction == 0.0);
}

TEST_CASE("a hopeless slot cap reports excess censoring") {
  LinkConfig weak(100.0, 3.0, 1e-9);
  CHECK_THROWS_AS(
      empirical_mean_delay_static(kTraffic, weak, 1e3, 100, 2, 19),
      ExcessCensoring);
}

TEST_CASE("dual-branch sampler reports the branch correlation") {
  TrafficModel tm(0.025, 20.0);
  LinkConfig link(50.0, 4.0, 8e-7);
  MrcResult res = empirical_mrc(tm, link, theta_grid_db(-10.0, 10.0, 5), 20000, 23);
  CHECK(res.interference_corr ==
        doctest::Approx(spatial_correlation_quadrature(tm, link)).epsilon(0.1));
  CHECK(res.curve.columns[0].values.front() <= res.curve.columns[0].values.back());
}

TEST_CASE("k-th nearest distances: PPP closed-form moments at k = 1") {
  TrafficModel ppp(0.1, 0.0);
  auto stats = empirical_kth_nearest(ppp, kLink, 1, 100000, 29);
  REQUIRE(stats.size() == 1);
  CHECK(std::fabs(stats[0].cov - 1.0 / 21.0) < 3.0 * stats[0].cov_se);
  CHECK(std::fabs(stats[0].skewness - 2.0) < 3.0 * stats[0].skew_se);
}

TEST_CASE("nearest-distance samples follow the two-branch law") {
  auto stats = empirical_kth_nearest(kTraffic, kLink, 1, 100000, 41);
  double ks = ks_distance(stats[0].distances, [&](double x) {
    return nearest_distance_cdf(kTraffic, kLink, x);
  });
  CHECK(ks < 0.01);
}

TEST_CASE("no-guard nearest samples follow the uniform-then-exponential law") {
  std::vector<double> xs = empirical_nearest_noguard(kTraffic, 100000, 43);
  std::sort(xs.begin(), xs.end());
  double ks = ks_distance(
      xs, [&](double x) { return nearest_distance_cdf_noguard(kTraffic, x); });
  CHECK(ks < 0.01);
}

TEST_CASE("KS distance is near zero for the generating law itself") {
  std::vector<double> u(10000);
  Rng rng(55);
  for (double& x : u) x = rng.uniform();
  std::sort(u.begin(), u.end());
  CHECK(ks_distance(u, [](double x) { return x; }) < 0.02);
}
