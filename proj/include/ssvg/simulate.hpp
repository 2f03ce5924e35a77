#ifndef SSVG_SIMULATE_HPP
#define SSVG_SIMULATE_HPP

#include <Eigen/Dense>

#include "ssvg/covariance.hpp"
#include "ssvg/grid.hpp"
#include "ssvg/kernels.hpp"

namespace ssvg {

// Independent centered Gaussian increments, variance = cell width; row r is
// generated from the stream (seed.root, r), so ensembles are reproducible
// and order-independent.  Shape: n_paths x (grid.size() - 1).
Eigen::MatrixXd sample_bm_increments(const TimeGrid& grid, int n_paths, Seed seed,
                                     std::uint64_t first_replicate = 0);

// Lower-triangular synthesis weights w(i,j) ~ (1/D_j) int_{cell j} z(t_{i+1}, s) ds,
// 4-point Gauss cell averages of the kernel; the cell touching s = t_{i+1}
// uses the exact power moment of the (t-s)^(beta-1/2) factor.
Eigen::MatrixXd synthesis_weights(const KernelSpec& spec, const TimeGrid& grid);

// Riemann-sum synthesis of X_t = int_0^t z(t,s) dW_s from increments.
PathEnsemble synth_from_kernel(const KernelSpec& spec, const TimeGrid& grid,
                               const Eigen::MatrixXd& increments);

// Exact multivariate Gaussian sampling via Cholesky factorization of the
// grid covariance (grid points > 0; a leading t = 0 point maps to value 0).
PathEnsemble sample_cholesky(const CovarianceOracle& oracle, const TimeGrid& grid,
                             int n_paths, Seed seed, bool jitter = false);

// Lamperti transform Y_u = exp(-beta u) X(exp(u)) over an exponential grid;
// output is indexed by the log-times u_i.
PathEnsemble lamperti(const PathEnsemble& ensemble, double beta);

} // namespace ssvg

#endif
