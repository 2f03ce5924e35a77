#include <doctest.h>

#include <cmath>

#include "ssvg/martingales.hpp"
#include "ssvg/simulate.hpp"

using namespace ssvg;

TEST_CASE("power integrand weights are midpoint values, and they compose") {
    const TimeGrid grid = TimeGrid::regular(1.0, 4);
    const Eigen::VectorXd w = power_integrand_weights(grid, 2.0);
    CHECK(w(0) == doctest::Approx(std::pow(0.125, 2)).epsilon(1e-14));
    CHECK(w(2) == doctest::Approx(std::pow(0.625, 2)).epsilon(1e-14));
    // Multiplicativity across exponents, including the cell at the origin.
    const Eigen::VectorXd a = power_integrand_weights(grid, -0.5);
    const Eigen::VectorXd b = power_integrand_weights(grid, 0.75);
    const Eigen::VectorXd c = power_integrand_weights(grid, 0.25);
    CHECK((a.cwiseProduct(b) - c).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("N^alpha variance matches min^(2a+1)/(2a+1)") {
    const TimeGrid grid = TimeGrid::regular(1.0, 128);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 20000, Seed{21});
    const AlphaParam a(0.5);
    const PathEnsemble n = nalpha_path(a, grid, inc);
    const double var = n.values.col(128).squaredNorm() / n.values.rows();
    CHECK(var == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("bridge endpoint is exactly zero") {
    const TimeGrid grid = TimeGrid::regular(2.0, 32);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 64, Seed{22});
    const AlphaParam a(0.25);
    const PathEnsemble br = bridge(nalpha_path(a, grid, inc), BridgeSpec(a, 2.0));
    CHECK(br.values.col(32).cwiseAbs().maxCoeff() == 0.0);
    CHECK(br.values.col(0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fundamental martingale variance t^(2-2H) / (2-2H) scaling") {
    const double H = 0.7;
    const TimeGrid grid = TimeGrid::regular(1.0, 256);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 20000, Seed{23});
    const PathEnsemble m = fundamental_martingale(HurstIndex(H), grid, inc);
    // Var M_T = (2-2H) * T^(2-2H) / (2-2H) = T^(2-2H) at T = 1.
    const double var = m.values.col(256).squaredNorm() / m.values.rows();
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("Y^H endpoint variance matches (1-2H)^2 T^(2-2H)") {
    const double H = 0.75, T = 1.0;
    const TimeGrid grid = TimeGrid::regular(T, 256);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 20000, Seed{24});
    const PathEnsemble y = yh_path(HurstIndex(H), T, grid, inc);
    CHECK(y.values.col(0).cwiseAbs().maxCoeff() == 0.0);
    // Var Y_T = Var(M_T - xi) = (1-2H)^2 T^(2-2H) from the Ito isometry.
    const double var_T = y.values.col(256).squaredNorm() / y.values.rows();
    CHECK(var_T == doctest::Approx(0.25).epsilon(0.1));
}
