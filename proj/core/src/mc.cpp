#include "hcfield/mc.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hcfield/delay.hpp"
#include "hcfield/process.hpp"

namespace hcfield {

namespace {

// seed salts for independent sub-streams of one master seed
constexpr uint64_t kSaltLinkFading = 0x51a7f00d00000001ULL;
constexpr uint64_t kSaltBranchTwo = 0x51a7f00d00000002ULL;

struct Pathloss {
  double eta;
  int ieta;  // eta when integral, else 0

  explicit Pathloss(double e) : eta(e) {
    ieta = (e == std::floor(e) && e <= 8.0) ? static_cast<int>(e) : 0;
  }

  double operator()(double x) const {
    if (ieta) {
      double inv = 1.0 / x;
      double r = inv;
      for (int i = 1; i < ieta; ++i) r *= inv;
      return r;
    }
    return std::pow(x, -eta);
  }
};

template <class PerTrial>
void run_trials(uint64_t trials, int threads, const PerTrial& body) {
  unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  if (n <= 1 || trials < 2 * n) {
    for (uint64_t i = 0; i < trials; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  uint64_t chunk = (trials + n - 1) / n;
  for (unsigned w = 0; w < n; ++w) {
    uint64_t lo = w * chunk, hi = std::min(trials, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      for (uint64_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

double interference_draw(const TrafficModel& traffic, const LinkConfig& link, double window,
                         int fading_shape, const Pathloss& g, Rng& rng) {
  double total = 0.0;
  auto add = [&](double x) {
    double h = fading_shape == 1 ? rng.exponential(1.0) : rng.gamma_int(fading_shape);
    total += h * g(x);
  };
  stream_halfline(traffic, link.r0(), window, rng, add);
  stream_halfline(traffic, link.r0(), window, rng, add);
  return total;
}

}  // namespace

double default_window(const TrafficModel& traffic, const LinkConfig& link) {
  return std::max({1e3 * traffic.hardcore_c(), 1e2 * link.r0(), 50.0 / traffic.lambda()});
}

MomentSummary SampleEnsemble::moments() const {
  MomentSummary m;
  m.provenance = MomentProvenance::Empirical;
  m.nakagami_t = fading_shape;
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / n;
  double s2 = 0.0, s3 = 0.0;
  for (double v : values) {
    double d = v - m.mean;
    s2 += d * d;
    s3 += d * d * d;
  }
  m.variance = s2 / n;
  m.skewness = (s3 / n) * std::pow(m.variance, -1.5);
  return m;
}

double SampleEnsemble::mean() const { return moments().mean; }

double SampleEnsemble::std_error_of_mean() const {
  MomentSummary m = moments();
  return std::sqrt(m.variance / static_cast<double>(values.size()));
}

SampleEnsemble simulate_interference(const TrafficModel& traffic, const LinkConfig& link,
                                     uint64_t trials, uint64_t seed, int fading_shape,
                                     int threads, double window_override) {
  SampleEnsemble e;
  e.trials = trials;
  e.master_seed = seed;
  e.fading_shape = fading_shape;
  e.window_half_length = window_override > 0.0 ? window_override : default_window(traffic, link);
  e.values.resize(trials);
  Pathloss g(link.eta());
  run_trials(trials, threads, [&](uint64_t i) {
    Rng rng = Rng::for_trial(seed, i);
    e.values[i] = interference_draw(traffic, link, e.window_half_length, fading_shape, g, rng);
  });
  return e;
}

OutageCurve empirical_outage(const SampleEnsemble& ensemble, const LinkConfig& link,
                             const std::vector<double>& theta_db) {
  OutageCurve curve;
  curve.theta_db = theta_db;
  for (double db : theta_db) curve.theta_lin.push_back(db_to_linear(db));
  auto& col = curve.add_column("empirical");
  std::vector<uint64_t> counts(theta_db.size(), 0);
  for (uint64_t i = 0; i < ensemble.values.size(); ++i) {
    Rng rng = Rng::for_trial(ensemble.master_seed ^ kSaltLinkFading, i);
    double ht = rng.exponential(1.0);
    double critical = ht * link.pr() / ensemble.values[i];  // outage iff theta >= SIR
    for (size_t j = 0; j < curve.theta_lin.size(); ++j)
      if (curve.theta_lin[j] >= critical) ++counts[j];
  }
  for (size_t j = 0; j < counts.size(); ++j)
    col.values[j] = static_cast<double>(counts[j]) / static_cast<double>(ensemble.values.size());
  return curve;
}

MrcResult empirical_mrc(const TrafficModel& traffic, const LinkConfig& link,
                        const std::vector<double>& theta_db, uint64_t trials, uint64_t seed,
                        int threads, double window_override) {
  double window = window_override > 0.0 ? window_override : default_window(traffic, link);
  Pathloss g(link.eta());
  std::vector<double> i1(trials), i2(trials), sir(trials);
  run_trials(trials, threads, [&](uint64_t t) {
    Rng rng = Rng::for_trial(seed, t);
    Rng rng2 = Rng::for_trial(seed ^ kSaltBranchTwo, t);
    double a = 0.0, b = 0.0;
    auto add = [&](double x) {
      double gx = g(x);
      a += rng2.exponential(1.0) * gx;
      b += rng2.exponential(1.0) * gx;
    };
    stream_halfline(traffic, link.r0(), window, rng, add);
    stream_halfline(traffic, link.r0(), window, rng, add);
    i1[t] = a;
    i2[t] = b;
    double h1 = rng2.exponential(1.0), h2 = rng2.exponential(1.0);
    sir[t] = h1 * link.pr() / a + h2 * link.pr() / b;
  });

  MrcResult res;
  res.curve.theta_db = theta_db;
  for (double db : theta_db) res.curve.theta_lin.push_back(db_to_linear(db));
  auto& col = res.curve.add_column("empirical-mrc");
  for (size_t j = 0; j < res.curve.theta_lin.size(); ++j) {
    uint64_t cnt = 0;
    for (uint64_t t = 0; t < trials; ++t)
      if (sir[t] <= res.curve.theta_lin[j]) ++cnt;
    col.values[j] = static_cast<double>(cnt) / static_cast<double>(trials);
  }

  double m1 = 0.0, m2 = 0.0;
  for (uint64_t t = 0; t < trials; ++t) {
    m1 += i1[t];
    m2 += i2[t];
  }
  m1 /= trials;
  m2 /= trials;
  double c12 = 0.0, v1 = 0.0, v2 = 0.0;
  for (uint64_t t = 0; t < trials; ++t) {
    double d1 = i1[t] - m1, d2 = i2[t] - m2;
    c12 += d1 * d2;
    v1 += d1 * d1;
    v2 += d2 * d2;
  }
  res.interference_corr = c12 / std::sqrt(v1 * v2);
  return res;
}

DelayEstimate empirical_mean_delay_static(const TrafficModel& traffic, const LinkConfig& link,
                                          double theta, uint64_t runs, uint64_t slot_cap,
                                          uint64_t seed, double window_override) {
  if (slot_cap < 1) throw std::domain_error("slot_cap must be >= 1");
  double window = window_override > 0.0 ? window_override : default_window(traffic, link);
  Pathloss g(link.eta());
  double sum = 0.0, sumsq = 0.0;
  uint64_t censored = 0;
  std::vector<double> gains;
  for (uint64_t r = 0; r < runs; ++r) {
    Rng rng = Rng::for_trial(seed, r);
    gains.clear();
    stream_halfline(traffic, link.r0(), window, rng, [&](double x) { gains.push_back(g(x)); });
    stream_halfline(traffic, link.r0(), window, rng, [&](double x) { gains.push_back(g(x)); });
    uint64_t slots = 0;
    bool ok = false;
    while (slots < slot_cap) {
      ++slots;
      double interf = 0.0;
      for (double gx : gains) interf += rng.exponential(1.0) * gx;
      double ht = rng.exponential(1.0);
      if (ht * link.pr() > theta * interf) {
        ok = true;
        break;
      }
    }
    if (!ok) ++censored;
    sum += static_cast<double>(slots);
    sumsq += static_cast<double>(slots) * static_cast<double>(slots);
  }
  DelayEstimate d;
  d.runs = runs;
  d.mean = sum / runs;
  d.std_error = std::sqrt(std::max(0.0, sumsq / runs - d.mean * d.mean) / runs);
  d.censored_fraction = static_cast<double>(censored) / runs;
  if (d.censored_fraction > 0.05)
    throw ExcessCensoring("empirical_mean_delay_static: censored fraction " +
                          std::to_string(d.censored_fraction));
  return d;
}

DelayEstimate empirical_mean_delay_iid(const TrafficModel& traffic, const LinkConfig& link,
                                       double theta, uint64_t trials, uint64_t seed,
                                       double window_override) {
  double window = window_override > 0.0 ? window_override : default_window(traffic, link);
  Pathloss g(link.eta());
  uint64_t successes = 0;
  for (uint64_t i = 0; i < trials; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    double interf = interference_draw(traffic, link, window, 1, g, rng);
    if (rng.exponential(1.0) * link.pr() > theta * interf) ++successes;
  }
  double p = static_cast<double>(successes) / trials;
  if (p <= 0.0) throw DivergentDelay("empirical_mean_delay_iid: no successes");
  DelayEstimate d;
  d.runs = trials;
  d.mean = 1.0 / p;
  double se_p = std::sqrt(p * (1.0 - p) / trials);
  d.std_error = se_p / (p * p);  // delta method
  return d;
}

std::vector<KthNearestStats> empirical_kth_nearest(const TrafficModel& traffic,
                                                   const LinkConfig& link, int k_max,
                                                   uint64_t trials, uint64_t seed) {
  if (k_max < 1) throw std::domain_error("k_max must be >= 1");
  std::vector<KthNearestStats> out(k_max);
  for (int k = 0; k < k_max; ++k) {
    out[k].k = k + 1;
    out[k].distances.resize(trials);
  }
  const double c = traffic.hardcore_c();
  const double inv_mu = 1.0 / traffic.mu();
  std::vector<double> merged;
  for (uint64_t i = 0; i < trials; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    merged.clear();
    for (int side = 0; side < 2; ++side) {
      double x = link.r0() + forward_recurrence_inv(traffic, rng.uniform());
      for (int j = 0; j < k_max; ++j) {
        merged.push_back(x);
        x += c + rng.exponential(inv_mu);
      }
    }
    std::sort(merged.begin(), merged.end());
    for (int k = 0; k < k_max; ++k) out[k].distances[i] = merged[k];
  }
  auto cov_skew = [](const double* v, uint64_t n, double& cov, double& skew) {
    double mean = 0.0;
    for (uint64_t i = 0; i < n; ++i) mean += v[i];
    mean /= n;
    double s2 = 0.0, s3 = 0.0;
    for (uint64_t i = 0; i < n; ++i) {
      double d = v[i] - mean;
      s2 += d * d;
      s3 += d * d * d;
    }
    double var = s2 / n;
    cov = std::sqrt(var) / mean;
    skew = (s3 / n) * std::pow(var, -1.5);
  };
  const int nbatch = 20;
  for (auto& s : out) {
    cov_skew(s.distances.data(), trials, s.cov, s.skewness);
    // batch means over the trial-ordered (i.i.d.) values, before sorting
    if (trials >= 10 * nbatch) {
      uint64_t bs = trials / nbatch;
      double cm = 0.0, sm = 0.0, cq = 0.0, sq = 0.0;
      for (int b = 0; b < nbatch; ++b) {
        double bc, bskew;
        cov_skew(s.distances.data() + b * bs, bs, bc, bskew);
        cm += bc;
        sm += bskew;
        cq += bc * bc;
        sq += bskew * bskew;
      }
      cm /= nbatch;
      sm /= nbatch;
      s.cov_se = std::sqrt(std::max(0.0, cq / nbatch - cm * cm) / (nbatch - 1));
      s.skew_se = std::sqrt(std::max(0.0, sq / nbatch - sm * sm) / (nbatch - 1));
    }
    std::sort(s.distances.begin(), s.distances.end());
  }
  return out;
}

double KthNearestStats::empirical_cdf(double x) const {
  auto it = std::upper_bound(distances.begin(), distances.end(), x);
  return static_cast<double>(it - distances.begin()) / static_cast<double>(distances.size());
}

std::vector<double> empirical_nearest_noguard(const TrafficModel& traffic, uint64_t trials,
                                              uint64_t seed) {
  // window wide enough that the nearest point is essentially never missed
  double w = 60.0 / traffic.lambda();
  std::vector<double> out(trials);
  for (uint64_t i = 0; i < trials; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    double best = w;
    stream_halfline(traffic, -w, w, rng, [&](double x) {
      double a = std::fabs(x);
      if (a < best) best = a;
    });
    out[i] = best;
  }
  std::sort(out.begin(), out.end());
  return out;
}

double ks_distance(const std::vector<double>& sorted, const std::function<double(double)>& cdf) {
  double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    double f = cdf(sorted[i]);
    worst = std::max(worst, std::fabs(f - static_cast<double>(i) / n));
    worst = std::max(worst, std::fabs(static_cast<double>(i + 1) / n - f));
  }
  return worst;
}

}  // namespace hcfield
