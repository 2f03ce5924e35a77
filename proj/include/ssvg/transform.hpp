#ifndef SSVG_TRANSFORM_HPP
#define SSVG_TRANSFORM_HPP

#include <Eigen/Dense>
#include <complex>

#include "ssvg/grid.hpp"
#include "ssvg/kernels.hpp"

namespace ssvg {

struct TransformParams {
    AlphaParam alpha;
    double beta;       // self-similarity index of the input process
    double T = 1.0;    // working horizon
    double T_ext = 32.0; // extended horizon for the inverse

    TransformParams(AlphaParam a, double b, double T_ = 1.0, double Text = 32.0)
        : alpha(a), beta(b), T(T_), T_ext(Text) {
        if (!(beta > 0.0)) throw std::domain_error("TransformParams: beta > 0 required");
        if (!(T > 0.0) || !(T_ext / T >= 2.0))
            throw std::domain_error("TransformParams: need T > 0 and T_ext/T >= 2");
    }
};

// Forward transformation
//   Z_t = X_t - (2a+1) t^(b-a-1/2) int_0^t s^(a-b-1/2) X_s ds
// on the ensemble's grid.  Paths are piecewise linear between grid points and
// the power weight is integrated exactly per cell (product integration);
// Z at t = 0 is 0.
PathEnsemble z_alpha_forward(const PathEnsemble& ensemble, AlphaParam alpha,
                             double beta);

struct InverseResult {
    PathEnsemble ensemble;            // restricted to [0, T]
    Eigen::VectorXd truncation_bound; // per output time, worst case over paths
};

// Inverse transformation
//   Z^{-1}_t = X_t - (2a+1) t^(a+b+1/2) int_t^inf X_s s^(-b-a-3/2) ds,
// with the infinite integral truncated at the ensemble's horizon.  The
// per-time truncation bound uses C = sup over the tail half of |X_s| / s^b.
InverseResult z_alpha_inverse(const PathEnsemble& ensemble, AlphaParam alpha,
                              double beta, double T);

// n-th iterate; n = 0 is the identity, negative n applies the inverse with
// the horizon shrinking by `shrink` per application.
PathEnsemble z_alpha_iterate(const PathEnsemble& ensemble, AlphaParam alpha,
                             double beta, int n, double shrink = 2.0);

// Molchan's transformation Z_t = B_t - 2H int_0^t B_s / s ds; exactly the
// forward transform with alpha = H - 1/2, beta = H (same code path).
PathEnsemble molchan(const PathEnsemble& ensemble, HurstIndex H);

// Transfer function of the induced filter on the Lamperti-stationary
// process: (i*lambda - (a+1/2)) / (i*lambda + (a+1/2)); unit modulus.
std::complex<double> transfer_function(AlphaParam alpha, double lambda);

// Absolutely continuous part of the impulse response, x > 0:
// -(2a+1) exp(-(a+1/2) x).  The unit mass at 0 is carried implicitly by
// the identity term.
double impulse_response(AlphaParam alpha, double x);

// Pathwise commutation: sup over grid and paths of the discrepancy between
//   A = Z(synth(W))   and   B = synth(increments of Z(W)),
// which coincide in the continuum.
double commutation_check(const KernelSpec& spec, const TimeGrid& grid,
                         const Eigen::MatrixXd& increments, AlphaParam alpha);

} // namespace ssvg

#endif
