// Acceptance harness: one line per criterion, selectable by number on the
// command line (default: all).  Exit code 0 iff every selected criterion
// passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "ssvg/reports.hpp"
#include "ssvg/verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 20240801ULL;

bool all_of(const std::vector<ssvg::VerificationReport>& rs) {
    return ssvg::all_pass(rs);
}

// 16. Full suite completes deterministically with every report passing.
bool full_suite_criterion() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = ssvg::run_suite("all", ssvg::Seed{kSeed});
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    // Determinism spot checks: repeat seeded deterministic and Monte Carlo
    // reports and compare everything but the timing field.
    auto strip = [](const ssvg::VerificationReport& r) {
        ssvg::json j = r.to_json();
        j.erase("wall_time_s");
        return j;
    };
    bool deterministic =
        strip(ssvg::reports::transfer_modulus(ssvg::Seed{kSeed})) ==
        strip(ssvg::reports::transfer_modulus(ssvg::Seed{kSeed}));
    {
        const auto a = ssvg::reports::statistical_measure_preservation(
            ssvg::Seed{kSeed});
        const auto b = ssvg::reports::statistical_measure_preservation(
            ssvg::Seed{kSeed});
        deterministic = deterministic && a.size() == b.size();
        for (std::size_t i = 0; deterministic && i < a.size(); ++i)
            deterministic = strip(a[i]) == strip(b[i]);
    }
    std::printf("    suite reports: %zu, wall %.1f s, deterministic: %s\n",
                reports.size(), elapsed, deterministic ? "yes" : "no");
    return all_of(reports) && deterministic && elapsed < 900.0;
}

struct Criterion {
    int number;
    const char* title;
    std::function<bool()> run;
};

const std::vector<Criterion>& criteria() {
    using namespace ssvg;
    const Seed s{kSeed};
    static const std::vector<Criterion> c = {
        {1, "transfer-function modulus",
         [s] { return reports::transfer_modulus(s).pass; }},
        {2, "kernel homogeneity",
         [s] { return reports::kernel_homogeneity(s).pass; }},
        {3, "kernel identity",
         [s] { return reports::kernel_identity(s).pass; }},
        {4, "covariance oracle agreement",
         [s] { return reports::covariance_oracle_agreement(s).pass; }},
        {5, "deterministic measure preservation",
         [s] { return reports::transform_cov_identity(s).pass; }},
        {6, "pathwise commutation under refinement",
         [s] { return reports::commutation_refinement(s).pass; }},
        {7, "inverse composition within budget",
         [s] { return reports::inverse_composition(s).pass; }},
        {8, "closed-form transform regression",
         [s] { return reports::power_path_regression(s).pass; }},
        {9, "bridge properties",
         [s] { return reports::bridge_covariance(s).pass; }},
        {10, "iterate orthogonality",
         [s] { return reports::iterate_orthogonality_suite(s).pass; }},
        {11, "span equality with control",
         [s] { return all_of(reports::span_equality(s)); }},
        {12, "Molchan equivalence",
         [s] { return reports::molchan_equivalence(s).pass; }},
        {13, "Y^H representation",
         [s] { return reports::yh_representation(s).pass; }},
        {14, "statistical measure preservation with controls",
         [s] { return all_of(reports::statistical_measure_preservation(s)); }},
        {15, "ergodicity: Birkhoff averages and mixing proxy",
         [s] { return all_of(reports::ergodic_suite(s)); }},
        {16, "full verification suite", full_suite_criterion},
    };
    return c;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    bool ok = true;
    for (const Criterion& c : criteria()) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.number) ==
                selected.end())
            continue;
        bool pass = false;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            std::printf("    exception: %s\n", e.what());
        }
        std::printf("criterion %2d (%s): %s\n", c.number, c.title,
                    pass ? "PASS" : "FAIL");
        std::fflush(stdout);
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}
