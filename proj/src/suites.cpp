#include <chrono>
#include <cmath>
#include <complex>

#include "ssvg/martingales.hpp"
#include "ssvg/simulate.hpp"
#include "ssvg/special.hpp"
#include "ssvg/stats.hpp"
#include "ssvg/transform.hpp"
#include "ssvg/reports.hpp"
#include "ssvg/verify.hpp"

// Named verification suites.  Parameter grids and tolerances are fixed here;
// the CLI and the acceptance tests run the same code.

namespace ssvg {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

VerificationReport make_report(const std::string& name, json params,
                               json statistics, double threshold, bool pass,
                               Seed seed, double wall) {
    VerificationReport r;
    r.name = name;
    r.params = std::move(params);
    r.statistics = std::move(statistics);
    r.threshold = threshold;
    r.pass = pass;
    r.seed = seed.root;
    r.wall_time_s = wall;
    return r;
}

std::vector<std::pair<double, double>> ts_lattice() {
    // 50 pairs (t, s) with 0 < s < t across two decades.
    static const double t_vals[] = {0.1, 0.35, 0.8, 1.7, 3.1, 6.0, 10.0, 0.52, 2.4, 4.8};
    static const double fracs[] = {0.15, 0.4, 0.65, 0.85, 0.97};
    std::vector<std::pair<double, double>> out;
    for (double t : t_vals)
        for (double f : fracs) out.emplace_back(t, f * t);
    return out;
}

std::vector<KernelSpec> lattice_specs() {
    return {KernelSpec::fbm(HurstIndex(0.25)), KernelSpec::fbm(HurstIndex(0.5)),
            KernelSpec::fbm(HurstIndex(0.75)),
            KernelSpec::power_markov(AlphaParam(0.0), 1.0, 1.0),
            KernelSpec::power_markov(AlphaParam(0.5), 0.8, 2.0)};
}

} // namespace

namespace reports {

// ---------------------------------------------------------------- kernels

VerificationReport hyp2f1_accuracy(Seed seed) {
    Timer timer;
    double worst = 0.0;
    // Terminating cases against explicit closed forms.
    for (double b : {0.3, 2.0})
        for (double c : {1.2, 3.0})
            for (double x : {-0.5, -2.0, -5.0}) {
                const double v1 = gauss_2f1(-1.0, b, c, x);
                const double e1 = 1.0 - b / c * x;
                worst = std::max(worst, std::abs(v1 - e1) / std::abs(e1));
                const double v2 = gauss_2f1(-2.0, b, c, x);
                const double e2 = 1.0 - 2.0 * b / c * x +
                                  b * (b + 1.0) / (c * (c + 1.0)) * x * x;
                worst = std::max(worst, std::abs(v2 - e2) / std::abs(e2));
            }
    const double term_worst = worst;
    // Frozen high-precision references.
    struct Ref { double a, b, c, x, v; };
    static const Ref refs[] = {
        {0.2, -0.2, 0.7, -3.0, 1.1065934725904679},
        {-0.25, 0.25, 0.75, -50.0, 1.7807351701612215},
        {0.45, -0.45, 0.55, -10000.0, 55.374337927921445},
    };
    double ref_worst = 0.0;
    for (const Ref& r : refs)
        ref_worst = std::max(ref_worst,
                             std::abs(gauss_2f1(r.a, r.b, r.c, r.x) - r.v) /
                                 std::abs(r.v));
    static const std::pair<double, double> c_refs[] = {
        {0.25, 0.64599800374075197}, {0.5, 1.0}, {0.75, 1.0696446350319903}};
    double c_worst = 0.0;
    for (auto [H, v] : c_refs)
        c_worst = std::max(c_worst, std::abs(fbm_c(H) - v) / v);
    const bool pass = term_worst <= 1e-13 && ref_worst <= 1e-12 && c_worst <= 1e-13;
    return make_report("hyp2f1_accuracy", json::object(),
                       {{"terminating_rel_err", term_worst},
                        {"reference_rel_err", ref_worst},
                        {"fbm_c_rel_err", c_worst}},
                       1e-12, pass, seed, timer.elapsed());
}

VerificationReport kernel_homogeneity(Seed seed) {
    Timer timer;
    double worst = 0.0;
    bool volterra_ok = true;
    for (const KernelSpec& spec : lattice_specs()) {
        const double b = spec.beta();
        for (auto [t, s] : ts_lattice()) {
            volterra_ok = volterra_ok && kernel_eval(spec, t, t) == 0.0 &&
                          kernel_eval(spec, t, 2.0 * t) == 0.0;
            const double base = kernel_eval(spec, t, s);
            for (double a : {0.5, 2.0, 10.0}) {
                const double scaled = kernel_eval(spec, a * t, a * s);
                worst = std::max(worst, std::abs(scaled - std::pow(a, b - 0.5) * base) /
                                            std::abs(base));
            }
        }
    }
    return make_report("kernel_homogeneity", {{"scales", {0.5, 2.0, 10.0}}},
                       {{"max_rel_err", worst}, {"volterra_zero", volterra_ok}},
                       1e-10, worst <= 1e-10 && volterra_ok, seed, timer.elapsed());
}

VerificationReport kernel_factorization(Seed seed) {
    Timer timer;
    double worst = 0.0;
    for (const KernelSpec& spec : lattice_specs()) {
        const double b = spec.beta();
        for (auto [t, s] : ts_lattice()) {
            const double z = kernel_eval(spec, t, s);
            const double f = std::pow(t - s, b - 0.5) * factor_eval(spec, s / t);
            worst = std::max(worst, std::abs(f - z) / std::abs(z));
        }
    }
    return make_report("kernel_factorization", json::object(),
                       {{"max_rel_err", worst}}, 1e-10, worst <= 1e-10, seed,
                       timer.elapsed());
}

VerificationReport kernel_identity(Seed seed) {
    Timer timer;
    double worst = 0.0;
    for (double H : {0.25, 0.5, 0.75})
        for (double a : {-0.25, 0.0, 1.0})
            for (auto [s, t] : {std::pair{0.5, 1.0}, {1.0, 2.0}, {0.1, 5.0}})
                worst = std::max(worst,
                                 kernel_identity_residual(KernelSpec::fbm(HurstIndex(H)),
                                                          AlphaParam(a), s, t));
    // Power-Markov case where both sides reduce to elementary integrals.
    worst = std::max(worst, kernel_identity_residual(
                                KernelSpec::power_markov(AlphaParam(0.5), 1.0, 1.0),
                                AlphaParam(0.5), 1.0, 2.0));
    return make_report("kernel_identity", {{"H", {0.25, 0.5, 0.75}},
                                           {"alpha", {-0.25, 0.0, 1.0}}},
                       {{"max_residual", worst}}, 1e-6, worst <= 1e-6, seed,
                       timer.elapsed());
}

// -------------------------------------------------------------- covariance

VerificationReport covariance_oracle_agreement(Seed seed) {
    Timer timer;
    double worst = 0.0;
    for (double H : {0.3, 0.7}) {
        const CovarianceOracle oracle(KernelSpec::fbm(HurstIndex(H)));
        for (double s : {0.25, 0.7, 1.3, 2.0})
            for (double f : {0.2, 0.5, 0.77, 0.9, 1.0}) {
                const double t = s / f;
                const double q = oracle.kernel_cov(s, t);
                const double r = fbm_cov(HurstIndex(H), s, t);
                worst = std::max(worst, std::abs(q - r) / std::abs(r));
            }
    }
    return make_report("covariance_oracle_agreement", {{"H", {0.3, 0.7}}},
                       {{"max_rel_err", worst}}, 1e-5, worst <= 1e-5, seed,
                       timer.elapsed());
}

VerificationReport selfsimilarity_bound(Seed seed) {
    Timer timer;
    const std::vector<std::pair<double, double>> samples = {
        {1.0, 1.0}, {0.5, 3.0}, {0.1, 0.1}, {0.2, 5.0}, {2.0, 2.0},
        {0.7, 1.4}, {3.0, 0.9}, {5.0, 5.0}, {0.05, 1.0}, {1.0, 0.05}};
    double worst = -1e300;
    for (double H : {0.3, 0.7})
        worst = std::max(worst, selfsim_bound_check(
                                    CovarianceOracle(KernelSpec::fbm(HurstIndex(H))),
                                    samples));
    worst = std::max(worst,
                     selfsim_bound_check(CovarianceOracle(KernelSpec::power_markov(
                                             AlphaParam(0.5), 0.8, 2.0)),
                                         samples));
    return make_report("selfsimilarity_bound", json::object(),
                       {{"max_violation", worst}}, 1e-9, worst <= 1e-9, seed,
                       timer.elapsed());
}

VerificationReport transform_cov_identity(Seed seed) {
    Timer timer;
    double worst = 0.0;
    json cases = json::array();
    for (double H : {0.5, 0.7}) {
        const CovarianceOracle oracle(KernelSpec::fbm(HurstIndex(H)));
        for (double a : {0.0, 0.2, H - 0.5}) {
            for (auto [s, t] : {std::pair{1.0, 1.0}, {1.0, 2.0}}) {
                const double v = transform_cov_oracle(oracle, AlphaParam(a), s, t);
                const double r = fbm_cov(HurstIndex(H), s, t);
                const double rel = std::abs(v - r) / std::abs(r);
                cases.push_back({{"H", H}, {"alpha", a}, {"s", s}, {"t", t},
                                 {"rel_err", rel}});
                worst = std::max(worst, rel);
            }
        }
    }
    return make_report("transform_cov_identity", json::object(),
                       {{"max_rel_err", worst}, {"cases", cases}}, 1e-4,
                       worst <= 1e-4, seed, timer.elapsed());
}

VerificationReport transform_cov_scaling(Seed seed) {
    Timer timer;
    const double H = 0.7;
    const CovarianceOracle oracle(KernelSpec::fbm(HurstIndex(H)));
    const AlphaParam a(0.2);
    const double base = transform_cov_oracle(oracle, a, 1.0, 2.0);
    const double scaled = transform_cov_oracle(oracle, a, 2.0, 4.0);
    const double rel =
        std::abs(scaled - std::pow(2.0, 2.0 * H) * base) / std::abs(scaled);
    return make_report("transform_cov_scaling", {{"H", H}, {"alpha", 0.2}},
                       {{"rel_err", rel}}, 1e-3, rel <= 1e-3, seed,
                       timer.elapsed());
}

// --------------------------------------------------------------- transform

VerificationReport transfer_modulus(Seed seed) {
    Timer timer;
    double worst = 0.0;
    for (double a : {-0.4, 0.0, 0.5, 2.0})
        for (int k = 0; k <= 400; ++k) {
            const double lambda = -100.0 + 0.5 * k;
            worst = std::max(worst, std::abs(std::abs(transfer_function(
                                                 AlphaParam(a), lambda)) -
                                             1.0));
        }
    return make_report("transfer_modulus", {{"alpha", {-0.4, 0.0, 0.5, 2.0}}},
                       {{"max_modulus_dev", worst}}, 1e-12, worst <= 1e-12, seed,
                       timer.elapsed());
}

VerificationReport impulse_transfer_consistency(Seed seed) {
    Timer timer;
    double worst = 0.0;
    const GaussRule& rule = GaussRule::of(24);
    for (double a : {0.0, 0.5, 2.0}) {
        const AlphaParam alpha(a);
        const double rate = a + 0.5;
        const double x_max = 40.0 / rate;
        for (double lambda : {0.0, 1.0, 5.0}) {
            // Fourier integral of the continuous part + the identity term.
            const double period = lambda > 0.0 ? 2.0 * M_PI / lambda : x_max;
            const double cell = std::min(period / 8.0, x_max / 64.0);
            const int cells = static_cast<int>(std::ceil(x_max / cell));
            std::complex<double> integral = 0.0;
            for (int k = 0; k < cells; ++k) {
                const double lo = k * x_max / cells, hi = (k + 1) * x_max / cells;
                std::complex<double> s = 0.0;
                for (std::size_t i = 0; i < rule.x.size(); ++i) {
                    const double x = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.x[i];
                    s += rule.w[i] * std::exp(std::complex<double>(0.0, -lambda * x)) *
                         impulse_response(alpha, x);
                }
                integral += s * 0.5 * (hi - lo);
            }
            const std::complex<double> numeric = 1.0 + integral;
            worst = std::max(worst,
                             std::abs(numeric - transfer_function(alpha, lambda)));
        }
    }
    return make_report("impulse_transfer_consistency", json::object(),
                       {{"max_abs_err", worst}}, 1e-8, worst <= 1e-8, seed,
                       timer.elapsed());
}

VerificationReport power_path_regression(Seed seed) {
    Timer timer;
    // Deterministic path t^beta with beta = 1: the piecewise-linear product
    // integration is exact, so the forward transform must return -t^beta to
    // roundoff.
    const double beta = 1.0;
    const int n = 1024;
    const TimeGrid grid = TimeGrid::regular(1.0, n);
    PathEnsemble e;
    e.grid = grid;
    e.values.resize(1, grid.size());
    for (int j = 0; j <= n; ++j) e.values(0, j) = std::pow(grid[j], beta);
    double worst = 0.0;
    for (double a : {-0.3, 0.2, 0.7}) {
        const PathEnsemble z = z_alpha_forward(e, AlphaParam(a), beta);
        for (int j = 0; j <= n; ++j)
            worst = std::max(worst,
                             std::abs(z.values(0, j) + std::pow(grid[j], beta)));
    }
    return make_report("power_path_regression", {{"beta", beta}, {"n", n}},
                       {{"max_abs_err", worst}}, 1e-8, worst <= 1e-8, seed,
                       timer.elapsed());
}

VerificationReport molchan_equivalence(Seed seed) {
    Timer timer;
    const TimeGrid grid = TimeGrid::regular(1.0, 128);
    double worst = 0.0;
    for (double H : {0.25, 0.5, 0.75}) {
        const KernelSpec spec = KernelSpec::fbm(HurstIndex(H));
        const Eigen::MatrixXd inc = sample_bm_increments(grid, 16, seed);
        const PathEnsemble x = synth_from_kernel(spec, grid, inc);
        const PathEnsemble a = molchan(x, HurstIndex(H));
        const PathEnsemble b = z_alpha_forward(x, AlphaParam(H - 0.5), H);
        worst = std::max(worst, (a.values - b.values).cwiseAbs().maxCoeff());
    }
    return make_report("molchan_equivalence", {{"H", {0.25, 0.5, 0.75}}},
                       {{"max_abs_diff", worst}}, 0.0, worst == 0.0, seed,
                       timer.elapsed());
}

VerificationReport transform_linearity(Seed seed) {
    Timer timer;
    const TimeGrid grid = TimeGrid::regular(1.0, 256);
    const Eigen::MatrixXd i1 = sample_bm_increments(grid, 8, seed);
    const Eigen::MatrixXd i2 =
        sample_bm_increments(grid, 8, Seed{splitmix64(seed.root + 17)});
    const KernelSpec spec = KernelSpec::fbm(HurstIndex(0.7));
    const PathEnsemble x = synth_from_kernel(spec, grid, i1);
    const PathEnsemble y = synth_from_kernel(spec, grid, i2);
    PathEnsemble combo = x;
    combo.values = 2.0 * x.values + 3.0 * y.values;
    const AlphaParam a(0.2);
    const PathEnsemble lhs = z_alpha_forward(combo, a, 0.7);
    const PathEnsemble zx = z_alpha_forward(x, a, 0.7);
    const PathEnsemble zy = z_alpha_forward(y, a, 0.7);
    const double scale = lhs.values.cwiseAbs().maxCoeff();
    const double worst =
        (lhs.values - 2.0 * zx.values - 3.0 * zy.values).cwiseAbs().maxCoeff() /
        scale;
    return make_report("transform_linearity", json::object(),
                       {{"max_rel_err", worst}}, 1e-10, worst <= 1e-10, seed,
                       timer.elapsed());
}

VerificationReport commutation_refinement(Seed seed) {
    Timer timer;
    const AlphaParam alpha(0.2);
    json detail = json::array();
    bool pass = true;
    for (double H : {0.5, 0.7}) {
        const KernelSpec spec = KernelSpec::fbm(HurstIndex(H));
        const int n_fine = 1 << 12;
        const TimeGrid fine = TimeGrid::regular(1.0, n_fine);
        const Eigen::MatrixXd inc_fine = sample_bm_increments(fine, 4, seed);
        std::vector<double> disc;
        std::vector<int> sizes;
        for (int n = 1 << 9; n <= n_fine; n *= 2) {
            const int factor = n_fine / n;
            const TimeGrid grid = TimeGrid::regular(1.0, n);
            Eigen::MatrixXd inc = Eigen::MatrixXd::Zero(inc_fine.rows(), n);
            for (int j = 0; j < n; ++j)
                inc.col(j) =
                    inc_fine.middleCols(j * factor, factor).rowwise().sum();
            disc.push_back(commutation_check(spec, grid, inc, alpha));
            sizes.push_back(n);
        }
        if (disc.back() < 1e-10) {
            // Exactly-commuting discrete case (Brownian kernel).
            detail.push_back({{"H", H}, {"discrepancies", disc}, {"order", "exact"}});
            continue;
        }
        // Least-squares slope of log2(discrepancy) vs log2(n).
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const int k = static_cast<int>(disc.size());
        for (int i = 0; i < k; ++i) {
            const double lx = std::log2(static_cast<double>(sizes[i]));
            const double ly = std::log2(disc[i]);
            sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        }
        const double order = -(k * sxy - sx * sy) / (k * sxx - sx * sx);
        detail.push_back({{"H", H}, {"discrepancies", disc}, {"order", order}});
        pass = pass && order >= 0.5 && disc.back() < disc.front();
    }
    return make_report("commutation_refinement",
                       {{"alpha", 0.2}, {"n_range", {512, 4096}}},
                       {{"detail", detail}}, 0.5, pass, seed, timer.elapsed());
}

VerificationReport inverse_composition(Seed seed) {
    Timer timer;
    const double T = 1.0, T_ext = 32.0;
    const AlphaParam alpha(0.2);
    const KernelSpec spec = KernelSpec::fbm(HurstIndex(0.7));
    const int n_paths = 100;

    // Fine grid: uniform on [0, T], geometric on [T, T_ext]; the coarse run
    // (every second point) estimates the discretization part of the budget.
    auto make_grid = [&](int n_uni, int n_geo) {
        std::vector<double> pts;
        for (int i = 0; i <= n_uni; ++i) pts.push_back(T * i / n_uni);
        const double ratio = std::pow(T_ext / T, 1.0 / n_geo);
        for (int i = 1; i <= n_geo; ++i) pts.push_back(T * std::pow(ratio, i));
        return TimeGrid(std::move(pts));
    };
    const TimeGrid fine = make_grid(512, 512);
    const Eigen::MatrixXd inc_fine = sample_bm_increments(fine, n_paths, seed);

    auto run = [&](const TimeGrid& grid, const Eigen::MatrixXd& inc) {
        const PathEnsemble x = synth_from_kernel(spec, grid, inc);
        const PathEnsemble z = z_alpha_forward(x, alpha, spec.beta());
        InverseResult back = z_alpha_inverse(z, alpha, spec.beta(), T);
        // Signed per-path error against the input at each output time.
        const int mo = static_cast<int>(back.ensemble.grid.size());
        const Eigen::MatrixXd e =
            back.ensemble.values - x.values.leftCols(mo);
        return std::pair{e, std::move(back.truncation_bound)};
    };

    const auto [err_fine, trunc_fine] = run(fine, inc_fine);

    std::vector<double> coarse_pts;
    for (std::size_t i = 0; i < fine.size(); i += 2) coarse_pts.push_back(fine[i]);
    const TimeGrid coarse{std::move(coarse_pts)};
    Eigen::MatrixXd inc_coarse(n_paths, coarse.size() - 1);
    for (std::size_t j = 0; j + 1 < coarse.size(); ++j)
        inc_coarse.col(j) = inc_fine.col(2 * j) + inc_fine.col(2 * j + 1);
    const auto [err_coarse, trunc_coarse] = run(coarse, inc_coarse);

    // A-posteriori discretization budget: the truncation part of the error is
    // the same for both resolutions (same driving noise, same horizon), so
    // the pathwise difference at shared times isolates D(2h) - D(h).  Order
    // >= 1/2 gives the 1/(2^0.5 - 1) ~ 2.4 amplification; 2.5 used.
    double diff = 0.0;
    for (int j = 0; j < err_coarse.cols(); ++j)
        diff = std::max(diff,
                        (err_coarse.col(j) - err_fine.col(2 * j))
                            .cwiseAbs()
                            .maxCoeff());
    const double disc_budget = 2.5 * diff;

    bool pass = true;
    double worst_excess = -1e300;
    for (int j = 0; j < err_fine.cols(); ++j) {
        const double excess = err_fine.col(j).cwiseAbs().maxCoeff() -
                              (trunc_fine(j) + disc_budget);
        worst_excess = std::max(worst_excess, excess);
        pass = pass && excess <= 0.0;
    }
    return make_report("inverse_composition",
                       {{"H", 0.7}, {"alpha", 0.2}, {"T", T}, {"T_ext", T_ext},
                        {"n_paths", n_paths}},
                       {{"sup_error", err_fine.cwiseAbs().maxCoeff()},
                        {"max_truncation_bound", trunc_fine.maxCoeff()},
                        {"discretization_budget", disc_budget},
                        {"worst_excess", worst_excess}},
                       0.0, pass, seed, timer.elapsed());
}

std::vector<VerificationReport> statistical_measure_preservation(Seed seed) {
    std::vector<VerificationReport> out;
    const KernelSpec h07 = KernelSpec::fbm(HurstIndex(0.7));
    const KernelSpec h05 = KernelSpec::fbm(HurstIndex(0.5));
    const AlphaParam alpha(0.2);
    // Main claim: transformed ensemble matches the original law.
    out.push_back(measure_preservation_test(h07, h07, alpha, 1.0, 64, 10000, seed));
    // Skipped-transform control: must also pass (calibration of the harness).
    VerificationReport skip = measure_preservation_test(
        h07, h07, alpha, 1.0, 64, 10000, Seed{splitmix64(seed.root + 1)}, false);
    skip.name = "measure_preservation_skip_control";
    out.push_back(skip);
    // Wrong-H control: must fail.
    VerificationReport wrong = measure_preservation_test(
        h05, h07, alpha, 1.0, 64, 10000, Seed{splitmix64(seed.root + 2)});
    wrong.name = "measure_preservation_wrongH_control";
    wrong.statistics["control_expected_to_fail"] = true;
    wrong.pass = !wrong.pass;
    out.push_back(wrong);
    return out;
}

// ----------------------------------------------------------------- bridges

VerificationReport bridge_covariance(Seed seed) {
    Timer timer;
    const double T = 1.0;
    const int n = 32, n_paths = 100000;
    bool pass = true;
    json detail = json::array();
    for (double a : {0.0, 0.5}) {
        const AlphaParam alpha(a);
        const TimeGrid grid = TimeGrid::regular(T, n);
        const Eigen::MatrixXd inc = sample_bm_increments(grid, n_paths, seed);
        const PathEnsemble br = bridge(nalpha_path(alpha, grid, inc),
                                       BridgeSpec(alpha, T));
        const double endpoint = br.values.col(n).cwiseAbs().maxCoeff();
        const double p = 2.0 * a + 1.0;
        auto closed = [&](double s, double t) {
            return std::pow(std::min(s, t), p) / p -
                   std::pow(s * t, p) / (std::pow(T, p) * p);
        };
        double max_z = 0.0;
        const Eigen::MatrixXd emp =
            (br.values.middleCols(1, n - 1).transpose() *
             br.values.middleCols(1, n - 1)) /
            static_cast<double>(n_paths);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j <= i; ++j) {
                const double r = closed(grid[j], grid[i]);
                const double se = cov_standard_error(closed(grid[j], grid[j]),
                                                     closed(grid[i], grid[i]), r,
                                                     n_paths);
                max_z = std::max(max_z, std::abs(emp(i - 1, j - 1) - r) / se);
            }
        detail.push_back({{"alpha", a}, {"endpoint_max", endpoint},
                          {"max_abs_z", max_z}});
        pass = pass && endpoint == 0.0 && max_z < 4.0;
    }
    return make_report("bridge_covariance",
                       {{"alpha", {0.0, 0.5}}, {"n_paths", n_paths}, {"n", n}},
                       {{"detail", detail}}, 4.0, pass, seed, timer.elapsed());
}

VerificationReport yh_representation(Seed seed) {
    Timer timer;
    const double T = 1.0;
    bool pass = true;
    json detail = json::array();
    for (double H : {0.25, 0.75}) {
        const HurstIndex h(H);
        const AlphaParam ap(H - 0.5);
        std::vector<double> errs;
        std::vector<int> sizes;
        for (int n = 1 << 9; n <= (1 << 11); n *= 2) {
            const TimeGrid grid = TimeGrid::regular(T, n);
            const Eigen::MatrixXd inc = sample_bm_increments(grid, 8, seed);
            const PathEnsemble y = yh_path(h, T, grid, inc);
            const PathEnsemble nb =
                bridge(nalpha_path(ap, grid, inc), BridgeSpec(ap, T));
            // sqrt(2-2H) * int_0^t s^(1-2H) dN^{bridge}
            const Eigen::VectorXd w =
                power_integrand_weights(grid, 1.0 - 2.0 * H);
            Eigen::MatrixXd rhs(inc.rows(), grid.size());
            rhs.col(0).setZero();
            for (int j = 0; j < n; ++j)
                rhs.col(j + 1) = rhs.col(j) +
                                 std::sqrt(2.0 - 2.0 * H) * w(j) *
                                     (nb.values.col(j + 1) - nb.values.col(j));
            errs.push_back((y.values - rhs).cwiseAbs().maxCoeff());
            sizes.push_back(n);
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const int k = static_cast<int>(errs.size());
        for (int i = 0; i < k; ++i) {
            const double lx = std::log2(static_cast<double>(sizes[i]));
            const double ly = std::log2(errs[i]);
            sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        }
        const double slope = -(k * sxy - sx * sy) / (k * sxx - sx * sx);
        detail.push_back({{"H", H}, {"errors", errs}, {"order", slope}});
        pass = pass && slope >= 0.5 && errs.back() <= 0.02;
    }
    return make_report("yh_representation", {{"H", {0.25, 0.75}}, {"T", T}},
                       {{"detail", detail}}, 0.02, pass, seed, timer.elapsed());
}

VerificationReport iterate_orthogonality_suite(Seed seed) {
    VerificationReport combined;
    Timer timer;
    bool pass = true;
    json detail = json::array();
    for (double a : {0.0, 0.5}) {
        auto [gram, rep] = iterate_orthogonality(AlphaParam(a), 1.0, 4, 100000,
                                                 seed, 1024);
        detail.push_back({{"alpha", a}, {"statistics", rep.statistics}});
        pass = pass && rep.pass;
    }
    combined = make_report("iterate_orthogonality_suite",
                           {{"alpha", {0.0, 0.5}}, {"K", 4}, {"n_paths", 100000}},
                           {{"detail", detail}}, 4.0, pass, seed, timer.elapsed());
    return combined;
}

std::vector<VerificationReport> span_equality(Seed seed) {
    std::vector<VerificationReport> out;
    const KernelSpec spec = KernelSpec::fbm(HurstIndex(0.75));
    const AlphaParam alpha(0.25);
    out.push_back(
        span_equality_residual(spec, alpha, 1.0, 16, 100000, seed, false));
    out.push_back(span_equality_residual(spec, alpha, 1.0, 16, 100000,
                                         Seed{splitmix64(seed.root + 5)}, true));
    return out;
}

VerificationReport completeness(Seed seed) {
    return completeness_check(KernelSpec::fbm(HurstIndex(0.7)), AlphaParam(0.0),
                              1.0, 3, 20000, seed);
}

// ----------------------------------------------------------------- ergodic

std::vector<VerificationReport> ergodic_suite(Seed seed) {
    std::vector<VerificationReport> out;
    const KernelSpec spec = KernelSpec::fbm(HurstIndex(0.7));
    const AlphaParam alpha(0.2);
    out.push_back(ergodic_average_test(spec, alpha, 1.0, 200, 100,
                                       ErgodicFunctional::sign_at_T, seed));
    // Larger alpha for the square functional: the iterate group delay
    // 2/(alpha+1/2) sets how far below T the grid must resolve, and
    // alpha = 1 keeps 200 iterates inside double range.
    out.push_back(ergodic_average_test(spec, AlphaParam(1.0), 1.0, 200, 100,
                                       ErgodicFunctional::square_at_T,
                                       Seed{splitmix64(seed.root + 3)}));
    out.push_back(mixing_proxy_nalpha(AlphaParam(0.2), 1.0, 6, 20000,
                                      Seed{splitmix64(seed.root + 4)}));
    return out;
}

} // namespace reports

std::vector<VerificationReport> run_suite(const std::string& name, Seed seed) {
    std::vector<VerificationReport> out;
    auto add = [&out](VerificationReport r) { out.push_back(std::move(r)); };
    auto add_all = [&out](std::vector<VerificationReport> rs) {
        for (auto& r : rs) out.push_back(std::move(r));
    };
    const bool all = name == "all";
    bool known = all;
    if (all || name == "kernels") {
        known = true;
        add(reports::hyp2f1_accuracy(seed));
        add(reports::kernel_homogeneity(seed));
        add(reports::kernel_factorization(seed));
        add(reports::kernel_identity(seed));
    }
    if (all || name == "covariance") {
        known = true;
        add(reports::covariance_oracle_agreement(seed));
        add(reports::selfsimilarity_bound(seed));
        add(reports::transform_cov_identity(seed));
        add(reports::transform_cov_scaling(seed));
    }
    if (all || name == "transform") {
        known = true;
        add(reports::transfer_modulus(seed));
        add(reports::impulse_transfer_consistency(seed));
        add(reports::power_path_regression(seed));
        add(reports::molchan_equivalence(seed));
        add(reports::transform_linearity(seed));
        add(reports::commutation_refinement(seed));
        add(reports::inverse_composition(seed));
        add_all(reports::statistical_measure_preservation(seed));
    }
    if (all || name == "bridges") {
        known = true;
        add(reports::bridge_covariance(seed));
        add(reports::yh_representation(seed));
        add(reports::iterate_orthogonality_suite(seed));
        add_all(reports::span_equality(seed));
        add(reports::completeness(seed));
        add(selfsimilarity_test(KernelSpec::fbm(HurstIndex(0.3)), 0.3, 2, 1.0,
                                32, 10000, Seed{splitmix64(seed.root + 6)}));
    }
    if (all || name == "ergodic") {
        known = true;
        add_all(reports::ergodic_suite(seed));
    }
    if (!known) throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
    return out;
}

} // namespace ssvg
