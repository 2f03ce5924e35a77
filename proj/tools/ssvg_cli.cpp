#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ssvg/csv.hpp"
#include "ssvg/martingales.hpp"
#include "ssvg/simulate.hpp"
#include "ssvg/special.hpp"
#include "ssvg/transform.hpp"
#include "ssvg/verify.hpp"

// Exit codes: 0 success, 1 verification failure, 2 usage or validation
// error, 3 numeric failure (non-finite results, quadrature or linear-algebra
// breakdown).

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SSVG_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SSVG_SEED", "not a valid integer");
        }
    }
    return 20240801ULL;
}

ssvg::KernelSpec parse_spec(const std::string& process, double hurst,
                            double alpha, double beta, double c) {
    if (process == "fbm" || process == "bridge" || process == "mh" ||
        process == "yh")
        return ssvg::KernelSpec::fbm(ssvg::HurstIndex(hurst));
    if (process == "nalpha" || process == "power-markov")
        return ssvg::KernelSpec::power_markov(ssvg::AlphaParam(alpha), beta, c);
    throw CLI::ValidationError("--process", "unknown process '" + process + "'");
}

std::string ensemble_meta(const ssvg::KernelSpec& spec, std::uint64_t seed) {
    std::ostringstream os;
    os << "spec=" << spec.description() << ", beta=" << spec.beta()
       << ", seed=" << seed;
    return os.str();
}

void emit(const ssvg::PathEnsemble& e, const std::string& output) {
    if (output.empty() || output == "-") {
        std::ostringstream buf;
        const std::string tmp = "/tmp/ssvg_stdout.csv";
        ssvg::write_csv(tmp, e);
        std::ifstream in(tmp);
        std::cout << in.rdbuf();
    } else {
        ssvg::write_csv(output, e);
    }
}

int cmd_simulate(const std::string& process, double hurst, double alpha,
                 double beta, double c, double T, int n, int paths,
                 std::uint64_t seed, const std::string& method,
                 const std::string& output) {
    const ssvg::KernelSpec spec = parse_spec(process, hurst, alpha, beta, c);
    const ssvg::TimeGrid grid = ssvg::TimeGrid::regular(T, n);
    const ssvg::Seed s{seed};
    ssvg::PathEnsemble e;
    if (process == "nalpha") {
        e = ssvg::nalpha_path(ssvg::AlphaParam(alpha), grid,
                              ssvg::sample_bm_increments(grid, paths, s));
    } else if (process == "bridge") {
        const ssvg::AlphaParam a(hurst - 0.5);
        e = ssvg::bridge(ssvg::nalpha_path(
                             a, grid, ssvg::sample_bm_increments(grid, paths, s)),
                         ssvg::BridgeSpec(a, T));
    } else if (process == "mh") {
        e = ssvg::fundamental_martingale(ssvg::HurstIndex(hurst), grid,
                                         ssvg::sample_bm_increments(grid, paths, s));
    } else if (process == "yh") {
        e = ssvg::yh_path(ssvg::HurstIndex(hurst), T, grid,
                          ssvg::sample_bm_increments(grid, paths, s));
    } else if (method == "cholesky") {
        e = ssvg::sample_cholesky(ssvg::CovarianceOracle(spec), grid, paths, s);
    } else {
        e = ssvg::synth_from_kernel(spec, grid,
                                    ssvg::sample_bm_increments(grid, paths, s));
    }
    e.meta = ensemble_meta(spec, seed);
    if (!e.values.allFinite()) {
        std::cerr << "simulate: non-finite path values\n";
        return kExitNumeric;
    }
    emit(e, output);
    return 0;
}

int cmd_transform(const std::string& input, double alpha, double beta,
                  bool inverse, int iterate, double horizon,
                  const std::string& output) {
    ssvg::PathEnsemble e = ssvg::read_csv(input);
    const ssvg::AlphaParam a(alpha);
    ssvg::PathEnsemble out;
    if (inverse) {
        // The input grid extends to T_ext; the inverse is reported on
        // [0, horizon] (default T_ext / 2).
        const double T = horizon > 0.0 ? horizon : e.grid.back() / 2.0;
        ssvg::InverseResult r = ssvg::z_alpha_inverse(e, a, beta, T);
        out = std::move(r.ensemble);
    } else if (iterate != 1) {
        out = ssvg::z_alpha_iterate(e, a, beta, iterate);
    } else {
        out = ssvg::z_alpha_forward(e, a, beta);
    }
    out.meta = e.meta + ", alpha=" + std::to_string(alpha);
    if (!out.values.allFinite()) {
        std::cerr << "transform: non-finite path values\n";
        return kExitNumeric;
    }
    emit(out, output);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& output) {
    const std::vector<ssvg::VerificationReport> reports =
        ssvg::run_suite(suite, ssvg::Seed{seed});
    ssvg::json arr = ssvg::json::array();
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
    }
    const std::string text = arr.dump(2);
    if (output.empty() || output == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream out(output);
        out << text << "\n";
        if (!out) {
            std::cerr << "verify: cannot write " << output << "\n";
            return kExitUsage;
        }
    }
    return ssvg::all_pass(reports) ? 0 : kExitFail;
}

int cmd_kernel_eval(const std::string& process, double hurst, double alpha,
                    double beta, double c, double t, double s) {
    const ssvg::KernelSpec spec = parse_spec(process, hurst, alpha, beta, c);
    const double v = ssvg::kernel_eval(spec, t, s);
    if (!std::isfinite(v)) {
        std::cerr << "kernel-eval: non-finite value\n";
        return kExitNumeric;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::cout << buf << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-similar Volterra Gaussian process toolkit"};
    app.require_subcommand(1);

    std::string process = "fbm", method = "kernel", output, input, suite = "all";
    double hurst = 0.7, alpha = 0.0, beta = 0.5, c = 1.0, T = 1.0;
    double t_eval = 1.0, s_eval = 0.5, t_ext = 0.0;
    int n = 256, paths = 1, iterate = 1;
    bool inverse = false;
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto add_spec_opts = [&](CLI::App* cmd) {
        cmd->add_option("--process", process,
                        "fbm|nalpha|bridge|mh|yh|power-markov");
        cmd->add_option("--hurst", hurst, "Hurst index in (0,1)");
        cmd->add_option("--alpha", alpha, "alpha parameter > -1/2");
        cmd->add_option("--beta", beta, "self-similarity order > 0");
        cmd->add_option("--scale", c, "kernel scale factor");
    };

    CLI::App* sim = app.add_subcommand("simulate", "Sample path ensembles");
    add_spec_opts(sim);
    sim->add_option("--T", T, "horizon");
    sim->add_option("--n", n, "number of grid cells");
    sim->add_option("--paths", paths, "number of paths");
    sim->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
        seed_set = true;
    });
    sim->add_option("--method", method, "kernel|cholesky");
    sim->add_option("--output,-o", output, "output CSV ('-' for stdout)");

    CLI::App* tr = app.add_subcommand("transform", "Apply the transformation");
    tr->add_option("--input,-i", input, "input CSV")->required();
    tr->add_option("--alpha", alpha, "alpha parameter > -1/2")->required();
    tr->add_option("--beta", beta, "self-similarity order")->required();
    tr->add_flag("--inverse", inverse, "apply the inverse transformation");
    tr->add_option("--iterate", iterate, "number of forward applications");
    tr->add_option("--horizon", t_ext,
                   "recovery horizon for the inverse (default: half the grid)");
    tr->add_option("--output,-o", output, "output CSV ('-' for stdout)");

    CLI::App* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("--suite", suite,
                    "kernels|covariance|transform|bridges|ergodic|all");
    ver->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
        seed_set = true;
    });
    ver->add_option("--output,-o", output, "JSON report path ('-' for stdout)");

    CLI::App* ke = app.add_subcommand("kernel-eval", "Evaluate a Volterra kernel");
    add_spec_opts(ke);
    ke->add_option("--t", t_eval, "time argument")->required();
    ke->add_option("--s", s_eval, "integration argument")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (!seed_set) seed = default_seed();
        if (sim->parsed())
            return cmd_simulate(process, hurst, alpha, beta, c, T, n, paths,
                                seed, method, output);
        if (tr->parsed())
            return cmd_transform(input, alpha, beta, inverse, iterate, t_ext,
                                 output);
        if (ver->parsed()) return cmd_verify(suite, seed, output);
        if (ke->parsed())
            return cmd_kernel_eval(process, hurst, alpha, beta, c, t_eval,
                                   s_eval);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ssvg::hyp2f1_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
