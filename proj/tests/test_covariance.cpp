#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "ssvg/covariance.hpp"

using namespace ssvg;

TEST_CASE("fBm covariance closed form") {
    CHECK(fbm_cov(HurstIndex(0.7), 1.0, 2.0) ==
          doctest::Approx(1.3195079107728943).epsilon(1e-14));
    CHECK(fbm_cov(HurstIndex(0.5), 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fbm_cov(HurstIndex(0.3), 2.0, 2.0) ==
          doctest::Approx(std::pow(2.0, 0.6)).epsilon(1e-14));
}

TEST_CASE("N^alpha covariance") {
    CHECK(nalpha_cov(AlphaParam(0.0), 0.4, 0.9) == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(nalpha_cov(AlphaParam(0.5), 2.0, 3.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("oracle: analytic vs quadrature") {
    SUBCASE("power-Markov") {
        const CovarianceOracle oracle(
            KernelSpec::power_markov(AlphaParam(0.5), 0.8, 2.0));
        const double analytic = oracle(0.7, 1.9);
        const double quad = oracle.kernel_cov(0.7, 1.9);
        CHECK(quad == doctest::Approx(analytic).epsilon(1e-8));
    }
    SUBCASE("fBm") {
        const CovarianceOracle oracle(KernelSpec::fbm(HurstIndex(0.3)));
        CHECK(oracle(0.5, 1.25) ==
              doctest::Approx(fbm_cov(HurstIndex(0.3), 0.5, 1.25)).epsilon(1e-12));
        CHECK(oracle.kernel_cov(0.5, 1.25) ==
              doctest::Approx(fbm_cov(HurstIndex(0.3), 0.5, 1.25)).epsilon(1e-5));
    }
}

TEST_CASE("covariance matrix is symmetric positive definite") {
    const CovarianceOracle oracle(KernelSpec::fbm(HurstIndex(0.5)));
    const CovMatrix m = cov_matrix(oracle, TimeGrid({1.0, 2.0}));
    CHECK(m.entries(0, 0) == doctest::Approx(1.0));
    CHECK(m.entries(0, 1) == doctest::Approx(1.0));
    CHECK(m.entries(1, 0) == m.entries(0, 1));
    CHECK(m.entries(1, 1) == doctest::Approx(2.0));
    CHECK(m.positive_definite);
}

TEST_CASE("self-similarity bound holds on samples") {
    const CovarianceOracle oracle(KernelSpec::fbm(HurstIndex(0.7)));
    const std::vector<std::pair<double, double>> samples = {
        {1.0, 1.0}, {0.5, 3.0}, {0.2, 5.0}, {2.0, 0.3}};
    const double v = selfsim_bound_check(oracle, samples);
    CHECK(v <= 1e-10);
}

TEST_CASE("transformed covariance equals the original") {
    const CovarianceOracle oracle(KernelSpec::fbm(HurstIndex(0.7)));
    const double v = transform_cov_oracle(oracle, AlphaParam(0.2), 1.0, 2.0);
    CHECK(v == doctest::Approx(fbm_cov(HurstIndex(0.7), 1.0, 2.0)).epsilon(1e-4));
}
