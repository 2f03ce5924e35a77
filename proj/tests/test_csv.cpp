#include <doctest.h>

#include <cstdio>

#include "ssvg/csv.hpp"
#include "ssvg/simulate.hpp"

using namespace ssvg;

TEST_CASE("CSV round trip is lossless") {
    const TimeGrid grid = TimeGrid::regular(1.0, 16);
    const Eigen::MatrixXd inc = sample_bm_increments(grid, 3, Seed{31});
    PathEnsemble e = synth_from_kernel(KernelSpec::fbm(HurstIndex(0.7)), grid, inc);
    e.meta = "spec=fbm(H=0.7), beta=0.7, seed=31";
    const std::string path = "/tmp/ssvg_test_roundtrip.csv";
    write_csv(path, e);
    const PathEnsemble back = read_csv(path);
    CHECK(back.meta == e.meta);
    REQUIRE(back.grid.size() == e.grid.size());
    for (std::size_t j = 0; j < e.grid.size(); ++j)
        CHECK(back.grid[j] == e.grid[j]);
    CHECK((back.values - e.values).cwiseAbs().maxCoeff() == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("CSV reader rejects malformed input") {
    const std::string path = "/tmp/ssvg_test_bad.csv";
    {
        FILE* f = std::fopen(path.c_str(), "w");
        std::fputs("t,path_0\n0,0\n", f); // missing metadata line
        std::fclose(f);
    }
    CHECK_THROWS(read_csv(path));
    std::remove(path.c_str());
    CHECK_THROWS(read_csv("/tmp/ssvg_does_not_exist.csv"));
}
