#ifndef SSVG_VERIFY_HPP
#define SSVG_VERIFY_HPP

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ssvg/covariance.hpp"
#include "ssvg/grid.hpp"
#include "ssvg/kernels.hpp"

namespace ssvg {

using json = nlohmann::ordered_json;

// Structured pass/fail record of one identity test.
struct VerificationReport {
    std::string name;
    json params = json::object();
    json statistics = json::object();
    double threshold = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;

    json to_json() const;
};

// Finite-grid surrogate for span and orthogonality statements: pairwise
// covariances of scalar Gaussian variables.
struct GramMatrix {
    std::vector<std::string> labels;
    Eigen::MatrixXd entries;
};

// Per-entry z-scores of the empirical covariance against the oracle,
// SE^2 = (R_ss R_tt + R_st^2) / N.
VerificationReport covariance_match(const PathEnsemble& ensemble,
                                    const CovarianceOracle& oracle,
                                    double z_threshold = 5.0);

// Statistical instantiation of measure preservation: synthesize from
// sim_spec, optionally apply the transformation, compare the covariance and
// five Bonferroni-corrected KS marginals against oracle_spec's law.
VerificationReport measure_preservation_test(const KernelSpec& sim_spec,
                                             const KernelSpec& oracle_spec,
                                             AlphaParam alpha, double T,
                                             int n_cells, int n_paths, Seed seed,
                                             bool apply_transform = true);

// Covariance z-scores between (X_{at}) and a^beta-scaled (X_t); the scale
// factor a must be a positive integer so both lattices share one grid.
VerificationReport selfsimilarity_test(const KernelSpec& spec, double beta_claim,
                                       int a, double T, int n_cells, int n_paths,
                                       Seed seed);

// Monte Carlo Gram matrix of the transform iterates of N at time T,
// n = 0..K; off-diagonals within 4*SE of 0, diagonals within 4*SE of
// T^(2a+1)/(2a+1).
std::pair<GramMatrix, VerificationReport>
iterate_orthogonality(AlphaParam alpha, double T, int K, int n_paths, Seed seed,
                      int n_cells = 1024);

// Freeness of the iterates of X at T (normalized Gram spectrum bounded away
// from 0) plus the non-orthogonality of each X-iterate to the matching
// N-iterate.
VerificationReport completeness_check(const KernelSpec& spec, AlphaParam alpha,
                                      double T, int K, int n_paths, Seed seed,
                                      int n_cells = 1024);

// Two-sided regression residual between the transformed process at grid
// points and the bridge variables built from the same driving noise.  With
// control = true the bridge uses independent noise and the residual must be
// near 1 instead.
VerificationReport span_equality_residual(const KernelSpec& spec, AlphaParam alpha,
                                          double T, int n_grid, int n_paths,
                                          Seed seed, bool control = false,
                                          int n_cells = 512,
                                          double eps_span = 0.02);

enum class ErgodicFunctional { square_at_T, sign_at_T };

// Birkhoff averages of a functional of the path at T along forward iterates,
// averaged over independent starting paths.
VerificationReport ergodic_average_test(const KernelSpec& spec, AlphaParam alpha,
                                        double T, int n_iter, int n_seeds,
                                        ErgodicFunctional functional, Seed seed,
                                        int n_cells = 512);

// Mixing proxy in the exactly-orthogonal case: Corr(N_T, Z^n_T(N)) vanishes
// for n >= 1 within 4*SE.
VerificationReport mixing_proxy_nalpha(AlphaParam alpha, double T, int max_iter,
                                       int n_paths, Seed seed, int n_cells = 1024);

// Named suites: kernels, covariance, transform, bridges, ergodic, all.
std::vector<VerificationReport> run_suite(const std::string& name, Seed seed);

bool all_pass(const std::vector<VerificationReport>& reports);

} // namespace ssvg

#endif
