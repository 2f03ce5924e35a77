#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ssvg/simulate.hpp"
#include "ssvg/transform.hpp"

using namespace ssvg;

namespace {

PathEnsemble power_path(const TimeGrid& grid, double beta) {
    PathEnsemble e;
    e.grid = grid;
    e.values.resize(1, grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        e.values(0, j) = std::pow(grid[j], beta);
    return e;
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(TransformParams(AlphaParam(0.2), 0.0), std::domain_error);
    CHECK_THROWS_AS(TransformParams(AlphaParam(0.2), 0.7, 1.0, 1.5),
                    std::domain_error);
    CHECK_NOTHROW(TransformParams(AlphaParam(0.2), 0.7, 1.0, 2.0));
}

TEST_CASE("t^beta maps to -t^beta (beta = 1 is exact)") {
    const TimeGrid grid = TimeGrid::regular(1.0, 512);
    const PathEnsemble e = power_path(grid, 1.0);
    const PathEnsemble z = z_alpha_forward(e, AlphaParam(0.3), 1.0);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
        worst = std::max(worst, std::abs(z.values(0, j) + grid[j]));
    CHECK(worst < 1e-10);
}

TEST_CASE("transform requires paths vanishing at 0 for singular weights") {
    const TimeGrid grid = TimeGrid::regular(1.0, 8);
    PathEnsemble e = power_path(grid, 1.0);
    e.values(0, 0) = 0.5; // nonzero at the origin, weight s^(a-b-1/2) <= s^-1
    CHECK_THROWS_AS(z_alpha_forward(e, AlphaParam(0.0), 0.5), std::domain_error);
}

TEST_CASE("forward transform is linear") {
    const TimeGrid grid = TimeGrid::regular(1.0, 64);
    const Eigen::MatrixXd i1 = sample_bm_increments(grid, 2, Seed{1});
    const Eigen::MatrixXd i2 = sample_bm_increments(grid, 2, Seed{2});
    const KernelSpec spec = KernelSpec::fbm(HurstIndex(0.7));
    const PathEnsemble x = synth_from_kernel(spec, grid, i1);
    const PathEnsemble y = synth_from_kernel(spec, grid, i2);
    PathEnsemble sum = x;
    sum.values = x.values + 2.0 * y.values;
    const AlphaParam a(0.2);
    const Eigen::MatrixXd lhs = z_alpha_forward(sum, a, 0.7).values;
    const Eigen::MatrixXd rhs = z_alpha_forward(x, a, 0.7).values +
                                2.0 * z_alpha_forward(y, a, 0.7).values;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("iterate: n = 0 is the identity, n composes the forward map") {
    const TimeGrid grid = TimeGrid::regular(1.0, 64);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 2, Seed{3});
    const PathEnsemble x =
        synth_from_kernel(KernelSpec::fbm(HurstIndex(0.7)), grid, inc);
    const AlphaParam a(0.2);
    CHECK((z_alpha_iterate(x, a, 0.7, 0).values - x.values).cwiseAbs().maxCoeff() ==
          0.0);
    const PathEnsemble two_steps =
        z_alpha_forward(z_alpha_forward(x, a, 0.7), a, 0.7);
    CHECK((z_alpha_iterate(x, a, 0.7, 2).values - two_steps.values)
              .cwiseAbs()
              .maxCoeff() == 0.0);
}

TEST_CASE("Molchan transformation is the alpha = H - 1/2 forward map") {
    const TimeGrid grid = TimeGrid::regular(1.0, 64);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 4, Seed{4});
    for (double H : {0.25, 0.5, 0.75}) {
        const PathEnsemble x =
            synth_from_kernel(KernelSpec::fbm(HurstIndex(H)), grid, inc);
        const PathEnsemble a = molchan(x, HurstIndex(H));
        const PathEnsemble b = z_alpha_forward(x, AlphaParam(H - 0.5), H);
        CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("transfer function has unit modulus and matches its closed form") {
    const AlphaParam a(0.5);
    for (double lambda : {-7.0, 0.0, 0.3, 50.0}) {
        const std::complex<double> h = transfer_function(a, lambda);
        CHECK(std::abs(h) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(transfer_function(a, 0.0).real() == doctest::Approx(-1.0));
    CHECK(impulse_response(a, 1.0) == doctest::Approx(-2.0 * std::exp(-1.0)));
    CHECK(impulse_response(a, 2.0) == doctest::Approx(-2.0 * std::exp(-2.0)));
}

TEST_CASE("inverse recovers the path within its reported budget") {
    // Grid out to T_ext = 8 T; the inverse on [0, T] must come back near the
    // input, up to truncation (bounded and reported) plus discretization.
    const TimeGrid grid = TimeGrid::regular(8.0, 1024);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 4, Seed{6});
    const KernelSpec spec = KernelSpec::fbm(HurstIndex(0.7));
    const PathEnsemble x = synth_from_kernel(spec, grid, inc);
    const AlphaParam a(0.2);
    const PathEnsemble z = z_alpha_forward(x, a, 0.7);
    const InverseResult r = z_alpha_inverse(z, a, 0.7, 1.0);
    double worst = 0.0;
    for (int j = 0; j < static_cast<int>(r.ensemble.grid.size()); ++j)
        worst = std::max(worst, (r.ensemble.values.col(j) - x.values.col(j))
                                    .cwiseAbs()
                                    .maxCoeff() -
                                    r.truncation_bound(j));
    CHECK(worst < 0.05);
    CHECK(r.truncation_bound.maxCoeff() < 5.0);
}

TEST_CASE("inverse horizon validation") {
    const TimeGrid grid = TimeGrid::regular(1.0, 16);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 1, Seed{8});
    const PathEnsemble x =
        synth_from_kernel(KernelSpec::fbm(HurstIndex(0.7)), grid, inc);
    CHECK_THROWS_AS(z_alpha_inverse(x, AlphaParam(0.2), 0.7, 0.9),
                    std::domain_error);
}
