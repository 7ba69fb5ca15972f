#pragma once

#include <span>
#include <vector>

namespace convgraph {

double mean(std::span<const double> values);
/// Sample standard deviation (n-1 denominator); 0 for fewer than 2 values.
double sample_stddev(std::span<const double> values);

/// Regularized incomplete beta function I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided p-value of Student's t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, int df);

/// Two-sided paired t-test over matched samples. Zero variance of the
/// differences gives p = 1 when the means agree and p = 0 otherwise.
double paired_t_test_p(std::span<const double> a, std::span<const double> b);

}  // namespace convgraph
