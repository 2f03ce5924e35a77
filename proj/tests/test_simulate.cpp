#include <doctest.h>

#include <cmath>

#include "ssvg/simulate.hpp"

using namespace ssvg;

TEST_CASE("Brownian increments: reproducible, order-independent streams") {
    const TimeGrid grid = TimeGrid::regular(1.0, 16);
    const Seed seed{42};
    const Eigen::MatrixXd a = sample_bm_increments(grid, 8, seed);
    const Eigen::MatrixXd b = sample_bm_increments(grid, 8, seed);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    // Rows 4..7 of a full draw equal a draw offset to replicate 4.
    const Eigen::MatrixXd tail = sample_bm_increments(grid, 4, seed, 4);
    CHECK((a.bottomRows(4) - tail).cwiseAbs().maxCoeff() == 0.0);
    // Different seeds decorrelate.
    const Eigen::MatrixXd c = sample_bm_increments(grid, 8, Seed{43});
    CHECK((a - c).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("Brownian increment variance matches cell widths") {
    const TimeGrid grid = TimeGrid::regular(2.0, 4);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 20000, Seed{7});
    for (int j = 0; j < 4; ++j) {
        const double var = inc.col(j).squaredNorm() / inc.rows();
        CHECK(var == doctest::Approx(0.5).epsilon(0.05));
    }
}

TEST_CASE("H = 1/2 synthesis reproduces Brownian partial sums") {
    const TimeGrid grid = TimeGrid::regular(1.0, 32);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 4, Seed{5});
    const PathEnsemble e =
        synth_from_kernel(KernelSpec::fbm(HurstIndex(0.5)), grid, inc);
    CHECK(e.values.col(0).cwiseAbs().maxCoeff() == 0.0);
    double worst = 0.0;
    for (int p = 0; p < 4; ++p) {
        double run = 0.0;
        for (int j = 0; j < 32; ++j) {
            run += inc(p, j);
            worst = std::max(worst, std::abs(e.values(p, j + 1) - run));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("kernel synthesis variance tracks the covariance at T") {
    const TimeGrid grid = TimeGrid::regular(1.0, 256);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 20000, Seed{11});
    const PathEnsemble e =
        synth_from_kernel(KernelSpec::fbm(HurstIndex(0.7)), grid, inc);
    const double var = e.values.col(256).squaredNorm() / e.values.rows();
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("Cholesky sampling matches the target variance") {
    const TimeGrid grid = TimeGrid::regular(1.0, 16);
    const PathEnsemble e = sample_cholesky(
        CovarianceOracle(KernelSpec::fbm(HurstIndex(0.3))), grid, 20000, Seed{13});
    const double var = e.values.col(16).squaredNorm() / e.values.rows();
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
    CHECK(e.values.col(0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Lamperti transform is stationary in law at matched log-times") {
    const TimeGrid grid = TimeGrid::exponential(-2.0, 2.0, 64);
    const PathEnsemble x = sample_cholesky(
        CovarianceOracle(KernelSpec::fbm(HurstIndex(0.7))), grid, 20000, Seed{17});
    const PathEnsemble y = lamperti(x, 0.7);
    // Var Y_u = R(1,1) for every u.
    const double v0 = y.values.col(3).squaredNorm() / y.values.rows();
    const double v1 = y.values.col(60).squaredNorm() / y.values.rows();
    CHECK(v0 == doctest::Approx(1.0).epsilon(0.05));
    CHECK(v1 == doctest::Approx(1.0).epsilon(0.05));
}
