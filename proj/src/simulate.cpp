#include "ssvg/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace ssvg {

Eigen::MatrixXd sample_bm_increments(const TimeGrid& grid, int n_paths, Seed seed,
                                     std::uint64_t first_replicate) {
    grid.validate();
    if (n_paths < 1) throw std::invalid_argument("sample_bm_increments: n_paths >= 1");
    const int n = static_cast<int>(grid.size()) - 1;
    Eigen::MatrixXd inc(n_paths, n);
    for (int r = 0; r < n_paths; ++r) {
        auto eng = path_engine(seed, first_replicate + static_cast<std::uint64_t>(r));
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int j = 0; j < n; ++j)
            inc(r, j) = gauss(eng) * std::sqrt(grid[j + 1] - grid[j]);
    }
    return inc;
}

Eigen::MatrixXd synthesis_weights(const KernelSpec& spec, const TimeGrid& grid) {
    if (!grid.starts_at_zero())
        throw std::invalid_argument("synthesis_weights: grid must start at 0");
    const int n = static_cast<int>(grid.size()) - 1;
    const double b = spec.beta();
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    const GaussRule& rule = GaussRule::of(4);
    for (int i = 0; i < n; ++i) {
        const double t = grid[i + 1];
        // Off-diagonal cells: cell average of the kernel (4-point Gauss), so
        // the weights integrate z exactly against per-cell increments up to
        // the quadrature error of the smooth part.
        for (int j = 0; j < i; ++j) {
            const double lo = grid[j], hi = grid[j + 1];
            double s = 0.0;
            for (std::size_t k = 0; k < rule.x.size(); ++k)
                s += rule.w[k] *
                     kernel_eval(spec, t, 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.x[k]);
            w(i, j) = 0.5 * s;
        }
        // Diagonal cell: exact moment of the singular factor against the
        // shape factor frozen at the cell midpoint.
        const double dt = grid[i + 1] - grid[i];
        const double mid = 0.5 * (grid[i] + grid[i + 1]);
        w(i, i) = factor_eval(spec, mid / t) * std::pow(dt, b - 0.5) / (b + 0.5);
    }
    return w;
}

PathEnsemble synth_from_kernel(const KernelSpec& spec, const TimeGrid& grid,
                               const Eigen::MatrixXd& increments) {
    if (increments.cols() != static_cast<Eigen::Index>(grid.size()) - 1)
        throw std::invalid_argument("synth_from_kernel: increments shape mismatch");
    const Eigen::MatrixXd w = synthesis_weights(spec, grid);
    PathEnsemble out;
    out.grid = grid;
    out.values.resize(increments.rows(), grid.size());
    out.values.col(0).setZero();
    out.values.rightCols(w.rows()).noalias() = increments * w.transpose();
    out.meta = spec.description();
    return out;
}

PathEnsemble sample_cholesky(const CovarianceOracle& oracle, const TimeGrid& grid,
                             int n_paths, Seed seed, bool jitter) {
    grid.validate();
    if (n_paths < 1) throw std::invalid_argument("sample_cholesky: n_paths >= 1");
    const bool has_zero = grid.starts_at_zero();
    std::vector<double> pos(grid.points.begin() + (has_zero ? 1 : 0),
                            grid.points.end());
    TimeGrid pgrid(std::move(pos));
    const CovMatrix cm = cov_matrix(oracle, pgrid, jitter);
    Eigen::LLT<Eigen::MatrixXd> llt(cm.entries);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error(
            "sample_cholesky: covariance not positive definite (smallest eigenvalue " +
            std::to_string(cm.smallest_eigenvalue) + ")");
    const Eigen::MatrixXd L = llt.matrixL();
    const int m = static_cast<int>(pgrid.size());
    Eigen::MatrixXd z(n_paths, m);
    for (int r = 0; r < n_paths; ++r) {
        auto eng = path_engine(seed, static_cast<std::uint64_t>(r));
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int j = 0; j < m; ++j) z(r, j) = gauss(eng);
    }
    PathEnsemble out;
    out.grid = grid;
    out.values.resize(n_paths, grid.size());
    if (has_zero) out.values.col(0).setZero();
    out.values.rightCols(m).noalias() = z * L.transpose();
    out.meta = oracle.spec().description() + " [cholesky]";
    return out;
}

PathEnsemble lamperti(const PathEnsemble& ensemble, double beta) {
    ensemble.check_shape();
    if (ensemble.grid.front() <= 0.0)
        throw std::invalid_argument("lamperti: grid must exclude t = 0");
    const int m = ensemble.n_points();
    PathEnsemble out;
    std::vector<double> logs(m);
    for (int i = 0; i < m; ++i) logs[i] = std::log(ensemble.grid[i]);
    out.grid = TimeGrid(std::move(logs));
    out.values.resize(ensemble.n_paths(), m);
    for (int i = 0; i < m; ++i)
        out.values.col(i) =
            ensemble.values.col(i) * std::pow(ensemble.grid[i], -beta);
    out.meta = ensemble.meta + " [lamperti]";
    return out;
}

} // namespace ssvg
