#ifndef SSVG_STATS_HPP
#define SSVG_STATS_HPP

#include <Eigen/Dense>
#include <functional>

namespace ssvg {

double normal_cdf(double x); // standard normal

struct KsResult {
    double statistic;
    double p_value;
};

// One-sample Kolmogorov-Smirnov test against a continuous cdf; asymptotic
// p-value with the usual finite-sample correction of the argument.
KsResult ks_test(Eigen::VectorXd samples, const std::function<double(double)>& cdf);

// Empirical (uncentered) covariance of two columns of a centered Gaussian
// ensemble, and its standard error under the null covariance R:
// Var((1/N) sum x_s x_t) = (R_ss R_tt + R_st^2) / N.
double cov_standard_error(double r_ss, double r_tt, double r_st, int n);

// Pearson correlation of two sample vectors.
double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

} // namespace ssvg

#endif
