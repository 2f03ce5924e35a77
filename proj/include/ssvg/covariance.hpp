#ifndef SSVG_COVARIANCE_HPP
#define SSVG_COVARIANCE_HPP

#include <Eigen/Dense>
#include <span>
#include <utility>

#include "ssvg/grid.hpp"
#include "ssvg/kernels.hpp"

namespace ssvg {

// Covariance of fractional Brownian motion,
// R(s,t) = (s^2H + t^2H - |s-t|^2H) / 2.
double fbm_cov(HurstIndex H, double s, double t);

// Covariance of the power martingale N_t = int_0^t s^alpha dW_s:
// min(s,t)^(2a+1) / (2a+1).
double nalpha_cov(AlphaParam alpha, double s, double t);

// Evaluates R(s,t) for a kernel spec, analytically where a closed form
// exists (fbm, power-Markov) and by quadrature otherwise.
class CovarianceOracle {
public:
    enum class Mode { analytic, quadrature };

    explicit CovarianceOracle(KernelSpec spec, Mode mode = Mode::analytic,
                              QuadOptions quad = {});

    double operator()(double s, double t) const;

    // Always the quadrature route: int_0^min z(s,u) z(t,u) du.
    double kernel_cov(double s, double t) const;

    const KernelSpec& spec() const { return spec_; }
    double beta() const { return spec_.beta(); }
    Mode mode() const { return mode_; }

private:
    KernelSpec spec_;
    Mode mode_;
    QuadOptions quad_;
};

struct CovMatrix {
    TimeGrid grid;
    Eigen::MatrixXd entries;
    bool positive_definite = true;
    double smallest_eigenvalue = 0.0;
};

// Symmetric covariance matrix over the grid; flags non-positive-definiteness
// (smallest eigenvalue reported).  Optional jitter adds 1e-12 * max-diagonal
// to the diagonal; off by default so modeling errors are not masked.
CovMatrix cov_matrix(const CovarianceOracle& oracle, const TimeGrid& grid,
                     bool jitter = false);

// Max over samples of |R(s,t)| - R(1,1) s^beta t^beta; self-similarity
// makes this non-positive up to numerical error.
double selfsim_bound_check(const CovarianceOracle& oracle,
                           std::span<const std::pair<double, double>> samples);

// Deterministic restatement of measure preservation: the covariance of the
// transformed process expanded by bilinearity into R-integrals,
//   R(s,t) - (2a+1) t^g I1 - (2a+1) s^g I2 + (2a+1)^2 (st)^g I12,
// with g = beta - alpha - 1/2, d = alpha - beta - 1/2.  Equals R(s,t) when
// the transformation preserves the law.
double transform_cov_oracle(const CovarianceOracle& oracle, AlphaParam alpha,
                            double s, double t, const QuadOptions& opt = {});

} // namespace ssvg

#endif
