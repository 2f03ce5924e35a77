#include <doctest.h>

#include <stdexcept>

#include "ssvg/reports.hpp"
#include "ssvg/simulate.hpp"
#include "ssvg/verify.hpp"

using namespace ssvg;

TEST_CASE("report JSON carries the fixed schema") {
    VerificationReport r;
    r.name = "demo";
    r.params = {{"H", 0.7}};
    r.statistics = {{"max_abs_z", 1.5}};
    r.threshold = 5.0;
    r.pass = true;
    r.seed = 99;
    r.wall_time_s = 0.25;
    const json j = r.to_json();
    const std::vector<std::string> keys = {"test",      "params", "statistics",
                                           "threshold", "pass",   "seed",
                                           "wall_time_s"};
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        REQUIRE(i < keys.size());
        CHECK(it.key() == keys[i]);
    }
    CHECK(i == keys.size());
}

TEST_CASE("covariance match accepts a correctly simulated ensemble") {
    const TimeGrid grid = TimeGrid::regular(1.0, 8);
    const CovarianceOracle oracle(KernelSpec::fbm(HurstIndex(0.5)));
    const PathEnsemble e = sample_cholesky(oracle, grid, 30000, Seed{41});
    const VerificationReport r = covariance_match(e, oracle);
    CHECK(r.pass);
    // A mismatched oracle is rejected.
    const CovarianceOracle wrong(KernelSpec::fbm(HurstIndex(0.25)));
    CHECK_FALSE(covariance_match(e, wrong).pass);
}

TEST_CASE("run_suite rejects unknown suite names") {
    CHECK_THROWS_AS(run_suite("bogus", Seed{1}), std::invalid_argument);
}

TEST_CASE("suite reports are deterministic given the seed") {
    const VerificationReport a = reports::transfer_modulus(Seed{7});
    const VerificationReport b = reports::transfer_modulus(Seed{7});
    json ja = a.to_json(), jb = b.to_json();
    ja.erase("wall_time_s");
    jb.erase("wall_time_s");
    CHECK(ja == jb);
}
