#pragma once

#include <array>
#include <map>
#include <span>

namespace gpm {

// The periodic log term log(1 + sin^2(pi x)/sigma^2) whose Riemann sums
// control the probability that a cycle is augmenting.
double riemann_term(double sigma2, double x);

// Closed form of the per-vertex limit: 2 log((1 + sqrt(1 + 1/sigma^2)) / 2).
double riemann_limit(double sigma2);

// S(sigma2, t) = sum_{j=1}^{t-1} riemann_term(sigma2, j/t), t >= 2.
double riemann_sum(double sigma2, int t);

// Lucas polynomials L_0 = 2, L_1 = x, L_k = x L_{k-1} + L_{k-2}.
double lucas(int k, double x);
// log L_k(x) for x > 0, stable for large k (Binet form).
double lucas_log(int k, double x);

// Same value as riemann_sum, evaluated through the Lucas-polynomial identity
// exp(S) = (4 sigma^2)^{-t} (L_{2t}(2 sigma) - 2), in the log domain. t >= 3.
double riemann_sum_via_lucas(double sigma2, int t);

struct RecoveryThresholds {
  double perfect = 0.0;             // 1 / (n^{4/d} - 1)
  double strong_conjectured = 0.0;  // 1 / ((2 n^{1/d} - 1)^2 - 1)
  double greedy_third = 0.0;        // 1 / (n^{2/d} - 1)
};
RecoveryThresholds recovery_thresholds(int n, int d);

// c(t) = t - d S(sigma2, t) / (2 log n): polynomial growth rate of the
// expected total mass of augmenting t-cycles.
double cycle_mass_exponent(int n, int d, double sigma2, int t);

struct EtaRates {
  double eta1 = 0.0;  // 3/4 S(.,2) - 1/4 S(.,4)
  double eta2 = 0.0;  // S(.,2) - 1/2 S(.,3)
  double eta3 = 0.0;  // (S(.,2) - I)/2
};
EtaRates eta_rates(double sigma2);

// Multinomial entropy with the omitted-last-argument convention:
// H(x_1..x_k) = -sum x_i log x_i - (1 - sum x_i) log(1 - sum x_i).
double multinomial_entropy(std::span<const double> args);

struct SupRateResult {
  double value = 0.0;
  std::array<double, 6> argmax{};  // (a, b, c, j, k, l) normalized
};

// sup over {2a + b + 2c + j + k + l <= 1, all in [0,1]} of
// 7 H(a, a, b, c, c, j, k, l) + (a+b+c+j+k+l) max(r1, r2);
// 20-point grid per axis plus three local refinement rounds.
SupRateResult sup_rate_function(double r1, double r2);

struct SecondMomentRates {
  double r1 = 0.0;
  double r2 = 0.0;
  SupRateResult sup_f;
};

// Rate functions of the matching-count second moment, with the constant
// K fixed to 50. p is the augmenting-pair probability, r the grouping
// size, m the target matching size.
SecondMomentRates second_moment_rates(int n, int d, double sigma2, int r,
                                      double m, double p);

struct EdgeProbBounds {
  double lower = 0.0;
  double upper = 1.0;
  // The bounds are only guaranteed under sigma2 <= d/40; outside that the
  // values are still returned but flagged.
  bool hypothesis_satisfied = false;
};
EdgeProbBounds phat_bounds(int d, double sigma2);

struct TheoryProfile {
  int n = 0;
  int d = 0;
  double sigma2 = 0.0;
  double riemann_limit_value = 0.0;
  std::map<int, double> riemann_sums;   // t -> S(sigma2, t)
  std::map<int, double> cycle_exponents;  // t -> c(t)
  RecoveryThresholds thresholds;
  EtaRates eta;
  EdgeProbBounds phat;
};
TheoryProfile compute_theory_profile(int n, int d, double sigma2, int t_max);

}  // namespace gpm
