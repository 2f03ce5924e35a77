#include "ssvg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssvg {

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace {

// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda) {
    if (lambda < 1e-8) return 1.0;
    double sum = 0.0, sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

} // namespace

KsResult ks_test(Eigen::VectorXd samples, const std::function<double(double)>& cdf) {
    const int n = static_cast<int>(samples.size());
    if (n < 2) throw std::invalid_argument("ks_test: need at least 2 samples");
    std::sort(samples.data(), samples.data() + n);
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        const double F = cdf(samples(i));
        d = std::max(d, std::max(F - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - F));
    }
    const double sn = std::sqrt(static_cast<double>(n));
    return {d, kolmogorov_q((sn + 0.12 + 0.11 / sn) * d)};
}

double cov_standard_error(double r_ss, double r_tt, double r_st, int n) {
    if (n < 1) throw std::invalid_argument("cov_standard_error: n >= 1");
    return std::sqrt((r_ss * r_tt + r_st * r_st) / n);
}

double correlation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("correlation: size mismatch");
    const double ma = a.mean(), mb = b.mean();
    const Eigen::ArrayXd da = a.array() - ma, db = b.array() - mb;
    const double denom = std::sqrt((da * da).sum() * (db * db).sum());
    if (denom == 0.0) return 0.0;
    return (da * db).sum() / denom;
}

} // namespace ssvg
