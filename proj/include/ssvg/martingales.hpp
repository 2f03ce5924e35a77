#ifndef SSVG_MARTINGALES_HPP
#define SSVG_MARTINGALES_HPP

#include <Eigen/Dense>

#include "ssvg/grid.hpp"
#include "ssvg/kernels.hpp"

namespace ssvg {

struct BridgeSpec {
    AlphaParam alpha;
    double T;
    BridgeSpec(AlphaParam a, double T_) : alpha(a), T(T_) {
        if (!(T > 0.0)) throw std::domain_error("BridgeSpec: T > 0 required");
    }
};

// Per-cell weights for the discrete stochastic integral int s^gamma dW:
// midpoint evaluation on every cell, so weights for different gamma compose
// multiplicatively and discrete integral identities telescope.
Eigen::VectorXd power_integrand_weights(const TimeGrid& grid, double gamma);

// N_t = int_0^t s^alpha dW_s, the (alpha+1/2)-self-similar martingale.
PathEnsemble nalpha_path(AlphaParam alpha, const TimeGrid& grid,
                         const Eigen::MatrixXd& increments);

// Bridge of N: N_t - (t/T)^(2a+1) N_T on [0, T]; endpoint exactly 0.
PathEnsemble bridge(const PathEnsemble& n_ensemble, const BridgeSpec& spec);

// Fundamental martingale of fBm: sqrt(2-2H) int_0^t s^(1/2-H) dW_s.
PathEnsemble fundamental_martingale(HurstIndex H, const TimeGrid& grid,
                                    const Eigen::MatrixXd& increments);

// xi = 2H int_0^T (s/T)^(2H-1) dM_s, one scalar per path.
Eigen::VectorXd xi(HurstIndex H, double T, const PathEnsemble& m_ensemble);

// Y_t = M_t - (t/T) xi_T on [0, T].
PathEnsemble yh_path(HurstIndex H, double T, const TimeGrid& grid,
                     const Eigen::MatrixXd& increments);

} // namespace ssvg

#endif
