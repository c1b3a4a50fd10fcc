#pragma once

namespace gpm {

// Regularized incomplete beta function I_x(a, b), continued fraction
// evaluation (modified Lentz), absolute error well below 1e-10 over the
// parameter ranges used here.
double regularized_incomplete_beta(double a, double b, double x);

// P[A/B < x] for A, B independent chi-square with d degrees of freedom,
// i.e. the CDF of the equal-parameter F ratio, I_{x/(1+x)}(d/2, d/2).
double f_ratio_cdf(int d, double x);

}  // namespace gpm
