#pragma once

#include "ssvg/verify.hpp"

// Individual report builders behind the named suites in run_suite().  Each
// one fixes its own parameter grid and tolerance; callers only choose the
// seed.  Exposed separately so single properties can be checked without
// paying for a whole suite.

namespace ssvg::reports {

// kernels
VerificationReport hyp2f1_accuracy(Seed seed);
VerificationReport kernel_homogeneity(Seed seed);
VerificationReport kernel_factorization(Seed seed);
VerificationReport kernel_identity(Seed seed);

// covariance
VerificationReport covariance_oracle_agreement(Seed seed);
VerificationReport selfsimilarity_bound(Seed seed);
VerificationReport transform_cov_identity(Seed seed);
VerificationReport transform_cov_scaling(Seed seed);

// transform
VerificationReport transfer_modulus(Seed seed);
VerificationReport impulse_transfer_consistency(Seed seed);
VerificationReport power_path_regression(Seed seed);
VerificationReport molchan_equivalence(Seed seed);
VerificationReport transform_linearity(Seed seed);
VerificationReport commutation_refinement(Seed seed);
VerificationReport inverse_composition(Seed seed);
std::vector<VerificationReport> statistical_measure_preservation(Seed seed);

// bridges
VerificationReport bridge_covariance(Seed seed);
VerificationReport yh_representation(Seed seed);
VerificationReport iterate_orthogonality_suite(Seed seed);
std::vector<VerificationReport> span_equality(Seed seed);
VerificationReport completeness(Seed seed);

// ergodic
std::vector<VerificationReport> ergodic_suite(Seed seed);

} // namespace ssvg::reports
