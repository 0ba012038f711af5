#include "hcfield/specfun.hpp"

#include <string>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace hcfield {

namespace {

double hyp2f1_series(double a, double b, double c, double w) {
  // Power series at argument w in [0, 1/2); relative tolerance 1e-12.
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 100000; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * w;
    sum += term;
    if (std::fabs(term) < 1e-15 * std::fabs(sum) + 1e-300) return sum;
  }
  throw NoConvergence("hyp2f1 series did not converge");
}

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
  if (c <= 0.0 && c == std::floor(c))
    throw std::domain_error("hyp2f1: c is a non-positive integer");
  if (!(z > -1.0 && z <= 0.0))
    throw std::domain_error("hyp2f1: z outside (-1, 0]");
  if (z == 0.0) return 1.0;
  // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
  double w = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, w);
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
struct Gk15Node {
  double x, gw, kw;
};
constexpr Gk15Node kGk15[8] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

std::pair<double, double> gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double y0 = f(mid);
  double g = kGk15[0].gw * y0;
  double k = kGk15[0].kw * y0;
  for (int i = 1; i < 8; ++i) {
    double dx = h * kGk15[i].x;
    double y = f(mid + dx) + f(mid - dx);
    g += kGk15[i].gw * y;
    k += kGk15[i].kw * y;
  }
  g *= h;
  k *= h;
  return {k, std::fabs(k - g)};
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec) {
  if (a == b) return 0.0;
  struct Seg {
    double a, b, val, err;
  };
  auto [v0, e0] = gk15(f, a, b);
  std::vector<Seg> segs{{a, b, v0, e0}};
  double total = v0, toterr = e0;
  int splits = 0;
  // the L1 norm of the segment values guards the relative test when the
  // integrand cancels to ~0 over [a, b]
  auto l1 = [&] {
    double n = 0.0;
    for (const Seg& s : segs) n += std::fabs(s.val);
    return n;
  };
  while (toterr > spec.abs_tol && toterr > spec.rel_tol * std::max(std::fabs(total), l1())) {
    if (++splits > spec.max_subdivisions)
      throw ToleranceNotMet("integrate_1d: tolerance not met after max subdivisions on [" +
                            std::to_string(a) + ", " + std::to_string(b) + "], estimate " +
                            std::to_string(total) + ", error " + std::to_string(toterr));
    // split the segment with the largest error estimate
    size_t worst = 0;
    for (size_t i = 1; i < segs.size(); ++i)
      if (segs[i].err > segs[worst].err) worst = i;
    Seg s = segs[worst];
    double m = 0.5 * (s.a + s.b);
    auto [vl, el] = gk15(f, s.a, m);
    auto [vr, er] = gk15(f, m, s.b);
    total += vl + vr - s.val;
    toterr += el + er - s.err;
    segs[worst] = {s.a, m, vl, el};
    segs.push_back({m, s.b, vr, er});
  }
  return total;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double a,
                               const QuadratureSpec& spec) {
  // x = a + u/(1-u), dx = du/(1-u)^2. GK nodes never touch u = 1.
  auto g = [&](double u) {
    double om = 1.0 - u;
    double x = a + u / om;
    return f(x) / (om * om);
  };
  return integrate_1d(g, 0.0, 1.0, spec);
}

}  // namespace hcfield
