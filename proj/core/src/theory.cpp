#include "gpm/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gpm {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

void require_sigma2(double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be > 0");
}
}  // namespace

double riemann_term(double sigma2, double x) {
  require_sigma2(sigma2);
  const double s = std::sin(kPi * x);
  return std::log1p(s * s / sigma2);
}

double riemann_limit(double sigma2) {
  require_sigma2(sigma2);
  const double t = 1.0 / sigma2;
  // 2 log((1 + sqrt(1+t))/2) written to stay accurate as t -> 0.
  const double w = t / (1.0 + std::sqrt(1.0 + t));
  return 2.0 * std::log1p(0.5 * w);
}

double riemann_sum(double sigma2, int t) {
  require_sigma2(sigma2);
  if (t < 2) throw std::invalid_argument("riemann_sum: t must be >= 2");
  double s = 0.0;
  for (int j = 1; j < t; ++j) {
    const double sn = std::sin(kPi * j / t);
    s += std::log1p(sn * sn / sigma2);
  }
  return s;
}

double lucas(int k, double x) {
  if (k < 0) throw std::invalid_argument("lucas: k must be >= 0");
  if (k == 0) return 2.0;
  if (k == 1) return x;
  double prev = 2.0, cur = x;
  for (int i = 2; i <= k; ++i) {
    const double next = x * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double lucas_log(int k, double x) {
  if (k < 0) throw std::invalid_argument("lucas_log: k must be >= 0");
  if (!(x > 0.0)) throw std::invalid_argument("lucas_log: x must be > 0");
  if (k == 0) return std::log(2.0);
  // Binet: L_k = alpha^k + beta^k with alpha beta = -1, so
  // beta^k = (-1)^k alpha^{-k}.
  const double alpha = 0.5 * (x + std::sqrt(x * x + 4.0));
  const double log_alpha = std::log(alpha);
  const double tail = std::exp(-2.0 * k * log_alpha);
  return k * log_alpha + std::log1p(k % 2 == 0 ? tail : -tail);
}

double riemann_sum_via_lucas(double sigma2, int t) {
  require_sigma2(sigma2);
  if (t < 3) throw std::invalid_argument("riemann_sum_via_lucas: t must be >= 3");
  const double sigma = std::sqrt(sigma2);
  const double ll = lucas_log(2 * t, 2.0 * sigma);
  // log((L - 2) / (4 sigma^2)^t)
  return -t * std::log(4.0 * sigma2) + ll + std::log1p(-2.0 * std::exp(-ll));
}

RecoveryThresholds recovery_thresholds(int n, int d) {
  if (n < 2) throw std::invalid_argument("recovery_thresholds: n must be >= 2");
  if (d < 1) throw std::invalid_argument("recovery_thresholds: d must be >= 1");
  const double u = std::log(static_cast<double>(n)) / d;
  RecoveryThresholds th;
  th.perfect = 1.0 / std::expm1(4.0 * u);
  th.strong_conjectured = 1.0 / (4.0 * std::exp(u) * std::expm1(u));
  th.greedy_third = 1.0 / std::expm1(2.0 * u);
  return th;
}

double cycle_mass_exponent(int n, int d, double sigma2, int t) {
  if (n < 2) throw std::invalid_argument("cycle_mass_exponent: n must be >= 2");
  if (t < 2) throw std::invalid_argument("cycle_mass_exponent: t must be >= 2");
  return t - d * riemann_sum(sigma2, t) / (2.0 * std::log(static_cast<double>(n)));
}

EtaRates eta_rates(double sigma2) {
  require_sigma2(sigma2);
  const double s2 = riemann_sum(sigma2, 2);
  const double s3 = riemann_sum(sigma2, 3);
  const double s4 = riemann_sum(sigma2, 4);
  EtaRates e;
  e.eta1 = 0.75 * s2 - 0.25 * s4;
  e.eta2 = s2 - 0.5 * s3;
  e.eta3 = 0.5 * (s2 - riemann_limit(sigma2));
  return e;
}

double multinomial_entropy(std::span<const double> args) {
  double sum = 0.0;
  for (double x : args) {
    if (x < 0.0) throw std::invalid_argument("multinomial_entropy: negative argument");
    sum += x;
  }
  if (sum > 1.0 + 1e-12) throw std::invalid_argument("multinomial_entropy: sum exceeds 1");
  auto xlogx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
  double h = 0.0;
  for (double x : args) h -= xlogx(x);
  h -= xlogx(std::max(0.0, 1.0 - sum));
  return h;
}

namespace {

// F at one point of the constraint set; +inf-guarded by the caller keeping
// points feasible.
double rate_function(const std::array<double, 6>& x, double rmax) {
  const double a = x[0], b = x[1], c = x[2], j = x[3], k = x[4], l = x[5];
  const double args[8] = {a, a, b, c, c, j, k, l};
  const double h = multinomial_entropy(std::span<const double>(args, 8));
  return 7.0 * h + (a + b + c + j + k + l) * rmax;
}

bool feasible(const std::array<double, 6>& x) {
  for (double v : x)
    if (v < 0.0 || v > 1.0) return false;
  const double w = 2.0 * x[0] + x[1] + 2.0 * x[2] + x[3] + x[4] + x[5];
  return w <= 1.0 + 1e-12;
}

}  // namespace

SupRateResult sup_rate_function(double r1, double r2) {
  const double rmax = std::max(r1, r2);
  constexpr int kGrid = 20;
  std::array<double, kGrid> pts{};
  for (int i = 0; i < kGrid; ++i) pts[i] = static_cast<double>(i) / (kGrid - 1);

  SupRateResult best;
  best.value = 0.0;     // the origin is always feasible and F(0) = 0
  best.argmax.fill(0.0);

  std::array<double, 6> x{};
  for (int ia = 0; ia < kGrid; ++ia) {
    x[0] = pts[ia];
    if (2 * x[0] > 1.0) break;
    for (int ib = 0; ib < kGrid; ++ib) {
      x[1] = pts[ib];
      if (2 * x[0] + x[1] > 1.0) break;
      for (int ic = 0; ic < kGrid; ++ic) {
        x[2] = pts[ic];
        if (2 * x[0] + x[1] + 2 * x[2] > 1.0) break;
        for (int ij = 0; ij < kGrid; ++ij) {
          x[3] = pts[ij];
          if (2 * x[0] + x[1] + 2 * x[2] + x[3] > 1.0) break;
          for (int ik = 0; ik < kGrid; ++ik) {
            x[4] = pts[ik];
            if (2 * x[0] + x[1] + 2 * x[2] + x[3] + x[4] > 1.0) break;
            for (int il = 0; il < kGrid; ++il) {
              x[5] = pts[il];
              if (2 * x[0] + x[1] + 2 * x[2] + x[3] + x[4] + x[5] > 1.0) break;
              const double f = rate_function(x, rmax);
              if (f > best.value) {
                best.value = f;
                best.argmax = x;
              }
            }
          }
        }
      }
    }
  }

  // Local refinement around the incumbent; radius shrinks 8x per round so
  // near-origin maxima at strongly negative rates are still resolved.
  double radius = 1.0 / (kGrid - 1);
  for (int round = 0; round < 3; ++round) {
    radius /= 8.0;
    const auto center = best.argmax;
    std::array<double, 6> y{};
    constexpr int kLocal = 9;
    std::array<double, kLocal> offs{};
    for (int i = 0; i < kLocal; ++i) offs[i] = (i - (kLocal - 1) / 2) * (2.0 * radius / (kLocal - 1));
    std::array<int, 6> idx{};
    // odometer over the 9^6 local grid
    while (true) {
      bool ok = true;
      for (int dim = 0; dim < 6; ++dim) {
        y[dim] = center[dim] + offs[idx[dim]];
        if (y[dim] < 0.0) y[dim] = 0.0;
        if (y[dim] > 1.0) y[dim] = 1.0;
      }
      if (!feasible(y)) ok = false;
      if (ok) {
        const double f = rate_function(y, rmax);
        if (f > best.value) {
          best.value = f;
          best.argmax = y;
        }
      }
      int dim = 0;
      while (dim < 6 && ++idx[dim] == kLocal) idx[dim++] = 0;
      if (dim == 6) break;
    }
  }
  return best;
}

SecondMomentRates second_moment_rates(int n, int d, double sigma2, int r,
                                      double m, double p) {
  require_sigma2(sigma2);
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("second_moment_rates: p in (0,1]");
  if (r < 1 || n < r || m <= 0.0) throw std::invalid_argument("second_moment_rates: bad r/m");
  constexpr double kK = 50.0;
  const double nprime = std::floor(static_cast<double>(n) / r);
  SecondMomentRates out;
  out.r1 = kK + std::log(nprime * nprime / (p * static_cast<double>(n) * n * m));
  const double log_plus = std::max(0.0, std::log(d / (1.0 + sigma2)));
  out.r2 = kK + d * (riemann_sum(sigma2, 2) - riemann_limit(sigma2)) +
           4.0 * log_plus - 2.0 * std::log(static_cast<double>(r));
  out.sup_f = sup_rate_function(out.r1, out.r2);
  return out;
}

EdgeProbBounds phat_bounds(int d, double sigma2) {
  require_sigma2(sigma2);
  if (d < 1) throw std::invalid_argument("phat_bounds: d must be >= 1");
  EdgeProbBounds b;
  b.lower = 1e-3 * std::sqrt((1.0 + sigma2) / d);
  b.upper = 1.0;
  b.hypothesis_satisfied = sigma2 <= d / 40.0;
  return b;
}

TheoryProfile compute_theory_profile(int n, int d, double sigma2, int t_max) {
  if (t_max < 2) throw std::invalid_argument("compute_theory_profile: t_max >= 2");
  TheoryProfile p;
  p.n = n;
  p.d = d;
  p.sigma2 = sigma2;
  p.riemann_limit_value = riemann_limit(sigma2);
  for (int t = 2; t <= t_max; ++t) {
    p.riemann_sums[t] = riemann_sum(sigma2, t);
    p.cycle_exponents[t] = cycle_mass_exponent(n, d, sigma2, t);
  }
  p.thresholds = recovery_thresholds(n, d);
  p.eta = eta_rates(sigma2);
  p.phat = phat_bounds(d, sigma2);
  return p;
}

}  // namespace gpm
