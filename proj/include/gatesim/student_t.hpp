#pragma once

namespace gatesim {

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
// x in [0, 1], via the Lentz continued fraction. Absolute error well below
// 1e-10 over the parameter ranges used here.
double regularized_incomplete_beta(double a, double b, double x);

// Student-t CDF with df >= 1 degrees of freedom (df need not be integral).
double student_t_cdf(double t, double df);

// Two-sided tail probability 2*(1 - CDF(|t|)). Throws DomainError for
// df < 1 or non-finite t.
double two_tailed_p(double t, double df);

// Inverse CDF by bisection on student_t_cdf; the result satisfies
// |CDF(result) - quantile| <= 1e-8. quantile must lie in (0, 1).
double t_critical(double quantile, double df);

}  // namespace gatesim
