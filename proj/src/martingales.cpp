#include "ssvg/martingales.hpp"

#include <cmath>
#include <stdexcept>

#include "ssvg/quadrature.hpp"

namespace ssvg {

Eigen::VectorXd power_integrand_weights(const TimeGrid& grid, double gamma) {
    if (!grid.starts_at_zero())
        throw std::invalid_argument("power_integrand_weights: grid must start at 0");
    const int n = static_cast<int>(grid.size()) - 1;
    // Midpoint throughout, including the cell touching 0: products of these
    // weights then compose multiplicatively (mid^a * mid^b = mid^(a+b)), so
    // discrete stochastic-integral identities telescope exactly instead of
    // carrying an O(h^(gamma+1/2)) first-cell mismatch.
    Eigen::VectorXd w(n);
    for (int j = 0; j < n; ++j)
        w(j) = std::pow(0.5 * (grid[j] + grid[j + 1]), gamma);
    return w;
}

PathEnsemble nalpha_path(AlphaParam alpha, const TimeGrid& grid,
                         const Eigen::MatrixXd& increments) {
    if (increments.cols() != static_cast<Eigen::Index>(grid.size()) - 1)
        throw std::invalid_argument("nalpha_path: increments shape mismatch");
    const Eigen::VectorXd w = power_integrand_weights(grid, alpha.value);
    PathEnsemble out;
    out.grid = grid;
    out.values.resize(increments.rows(), grid.size());
    out.values.col(0).setZero();
    for (int j = 0; j < increments.cols(); ++j)
        out.values.col(j + 1) = out.values.col(j) + w(j) * increments.col(j);
    out.meta = "nalpha(alpha=" + std::to_string(alpha.value) + ")";
    return out;
}

PathEnsemble bridge(const PathEnsemble& n_ensemble, const BridgeSpec& spec) {
    n_ensemble.check_shape();
    const double T = spec.T;
    if (n_ensemble.grid.back() < T)
        throw std::invalid_argument("bridge: ensemble must cover [0, T]");
    TimeGrid g = n_ensemble.grid.prefix_up_to(T);
    const int m = static_cast<int>(g.size());
    if (std::abs(g.back() - T) > 1e-12 * T)
        throw std::invalid_argument("bridge: T must be a grid point");
    const double p = 2.0 * spec.alpha.value + 1.0;
    const Eigen::VectorXd end = n_ensemble.values.col(m - 1);
    PathEnsemble out;
    out.grid = g;
    out.values.resize(n_ensemble.n_paths(), m);
    for (int j = 0; j < m; ++j) {
        if (j == m - 1) {
            out.values.col(j).setZero(); // endpoint pinned exactly
            continue;
        }
        out.values.col(j) =
            n_ensemble.values.col(j) - std::pow(g[j] / T, p) * end;
    }
    out.meta = n_ensemble.meta + " [bridge T=" + std::to_string(T) + "]";
    return out;
}

PathEnsemble fundamental_martingale(HurstIndex H, const TimeGrid& grid,
                                    const Eigen::MatrixXd& increments) {
    PathEnsemble m = nalpha_path(AlphaParam(0.5 - H.value), grid, increments);
    m.values *= std::sqrt(2.0 - 2.0 * H.value);
    m.meta = "fundamental_martingale(H=" + std::to_string(H.value) + ")";
    return m;
}

Eigen::VectorXd xi(HurstIndex H, double T, const PathEnsemble& m_ensemble) {
    m_ensemble.check_shape();
    if (!m_ensemble.grid.starts_at_zero())
        throw std::invalid_argument("xi: grid must start at 0");
    if (m_ensemble.grid.back() < T * (1.0 - 1e-12))
        throw std::invalid_argument("xi: ensemble must cover [0, T]");
    TimeGrid g = m_ensemble.grid.prefix_up_to(T);
    const int m = static_cast<int>(g.size());
    const double gamma = 2.0 * H.value - 1.0;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(m_ensemble.n_paths());
    const Eigen::VectorXd w = power_integrand_weights(g, gamma);
    for (int j = 0; j + 1 < m; ++j)
        acc += std::pow(1.0 / T, gamma) * w(j) *
               (m_ensemble.values.col(j + 1) - m_ensemble.values.col(j));
    return 2.0 * H.value * acc;
}

PathEnsemble yh_path(HurstIndex H, double T, const TimeGrid& grid,
                     const Eigen::MatrixXd& increments) {
    PathEnsemble m = fundamental_martingale(H, grid, increments);
    const Eigen::VectorXd x = xi(H, T, m);
    TimeGrid g = grid.prefix_up_to(T);
    const int np = static_cast<int>(g.size());
    PathEnsemble out;
    out.grid = g;
    out.values.resize(m.n_paths(), np);
    for (int j = 0; j < np; ++j)
        out.values.col(j) = m.values.col(j) - (g[j] / T) * x;
    out.meta = "yh(H=" + std::to_string(H.value) + ", T=" + std::to_string(T) + ")";
    return out;
}

} // namespace ssvg
