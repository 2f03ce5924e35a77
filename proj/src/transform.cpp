#include "ssvg/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "ssvg/quadrature.hpp"
#include "ssvg/simulate.hpp"

namespace ssvg {

namespace {

// Product-integration moments of s^p against a piecewise-linear path on one
// cell [c,d]: returns (m0, m1) with cell integral = A*m0 + B*m1 for the
// local line A + B*s.  For c == 0 and p <= -1 the caller must have A == 0.
struct CellMoments {
    double m0, m1;
};

CellMoments cell_moments(double p, double c, double d) {
    CellMoments m{};
    if (c == 0.0 && p <= -1.0) {
        if (p + 1.0 <= -1.0)
            throw std::domain_error("z_alpha_forward: weight too singular (beta >= alpha + 3/2)");
        m.m0 = 0.0; // A must vanish at the origin
        m.m1 = power_moment(p + 1.0, c, d);
        return m;
    }
    m.m0 = power_moment(p, c, d);
    m.m1 = power_moment(p + 1.0, c, d);
    return m;
}

void check_origin_values(const PathEnsemble& e, double p) {
    if (p <= -1.0) {
        const double a0 = e.values.col(0).cwiseAbs().maxCoeff();
        if (a0 > 1e-10)
            throw std::domain_error(
                "transform: paths must vanish at t = 0 for this (alpha, beta)");
    }
}

} // namespace

PathEnsemble z_alpha_forward(const PathEnsemble& ensemble, AlphaParam alpha,
                             double beta) {
    ensemble.check_shape();
    if (!(beta > 0.0)) throw std::domain_error("z_alpha_forward: beta > 0 required");
    if (!ensemble.grid.starts_at_zero())
        throw std::invalid_argument("z_alpha_forward: grid must start at 0");
    const double a = alpha.value, b = beta;
    const double p = a - b - 0.5;        // inner power weight
    const double q = b - a - 0.5;        // outer prefactor exponent
    const double scale = 2.0 * a + 1.0;
    check_origin_values(ensemble, p);

    const int m = ensemble.n_points();
    const int n_paths = ensemble.n_paths();
    PathEnsemble out;
    out.grid = ensemble.grid;
    out.meta = ensemble.meta;
    out.values.resize(n_paths, m);
    out.values.col(0).setZero();

    Eigen::VectorXd acc = Eigen::VectorXd::Zero(n_paths);
    for (int j = 0; j + 1 < m; ++j) {
        const double c = ensemble.grid[j], d = ensemble.grid[j + 1];
        const double dt = d - c;
        const CellMoments mm = cell_moments(p, c, d);
        // local line through (c, X_j), (d, X_{j+1})
        Eigen::VectorXd B = (ensemble.values.col(j + 1) - ensemble.values.col(j)) / dt;
        Eigen::VectorXd A = ensemble.values.col(j) - B * c;
        acc += A * mm.m0 + B * mm.m1;
        out.values.col(j + 1) =
            ensemble.values.col(j + 1) - scale * std::pow(d, q) * acc;
    }
    if (!out.values.allFinite())
        throw std::runtime_error("z_alpha_forward: numeric overflow in transform");
    return out;
}

InverseResult z_alpha_inverse(const PathEnsemble& ensemble, AlphaParam alpha,
                              double beta, double T) {
    ensemble.check_shape();
    if (!(beta > 0.0)) throw std::domain_error("z_alpha_inverse: beta > 0 required");
    if (!ensemble.grid.starts_at_zero())
        throw std::invalid_argument("z_alpha_inverse: grid must start at 0");
    const double T_ext = ensemble.grid.back();
    if (!(T_ext / T >= 2.0))
        throw std::domain_error(
            "z_alpha_inverse: extended horizon must satisfy T_ext / T >= 2");
    const double a = alpha.value, b = beta;
    const double q = -b - a - 1.5;       // tail power weight
    const double r = a + b + 0.5;        // prefactor exponent
    const double scale = 2.0 * a + 1.0;

    const int m = ensemble.n_points();
    const int n_paths = ensemble.n_paths();

    // Tail envelope C = sup |X_s| / s^b over the outer half of the grid.
    // The bound must hold for the unobserved region s > T_ext as well, so the
    // windowed sup gets a 1.5x growth allowance.
    double C = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = ensemble.grid[j];
        if (t >= 0.5 * T_ext)
            C = std::max(C, ensemble.values.col(j).cwiseAbs().maxCoeff() /
                                std::pow(t, b));
    }
    C *= 1.5;

    // Backward accumulation of int_t^{T_ext} s^q X_s ds.
    Eigen::MatrixXd tail_int(n_paths, m);
    tail_int.col(m - 1).setZero();
    for (int j = m - 2; j >= 0; --j) {
        const double c = ensemble.grid[j], d = ensemble.grid[j + 1];
        const double dt = d - c;
        Eigen::VectorXd B = (ensemble.values.col(j + 1) - ensemble.values.col(j)) / dt;
        Eigen::VectorXd A = ensemble.values.col(j) - B * c;
        if (c == 0.0) {
            // The weight s^q with q < -1 never multiplies the first cell in
            // the output (t = 0 maps to 0), but the accumulated integral
            // from t_1 onward does not touch it either.
            tail_int.col(j) = tail_int.col(j + 1);
            continue;
        }
        tail_int.col(j) = tail_int.col(j + 1) + A * power_moment(q, c, d) +
                          B * power_moment(q + 1.0, c, d);
    }

    TimeGrid out_grid = ensemble.grid.prefix_up_to(T);
    const int mo = static_cast<int>(out_grid.size());
    InverseResult res;
    res.ensemble.grid = out_grid;
    res.ensemble.meta = ensemble.meta;
    res.ensemble.values.resize(n_paths, mo);
    res.truncation_bound.resize(mo);
    for (int j = 0; j < mo; ++j) {
        const double t = out_grid[j];
        if (t == 0.0) {
            res.ensemble.values.col(j).setZero();
            res.truncation_bound(j) = 0.0;
            continue;
        }
        res.ensemble.values.col(j) =
            ensemble.values.col(j) - scale * std::pow(t, r) * tail_int.col(j);
        res.truncation_bound(j) = C * scale / (a + 0.5) * std::pow(t, r) *
                                  std::pow(T_ext, -a - 0.5);
    }
    if (!res.ensemble.values.allFinite())
        throw std::runtime_error("z_alpha_inverse: numeric overflow in transform");
    return res;
}

PathEnsemble z_alpha_iterate(const PathEnsemble& ensemble, AlphaParam alpha,
                             double beta, int n, double shrink) {
    if (n >= 0) {
        PathEnsemble cur = ensemble;
        for (int k = 0; k < n; ++k) cur = z_alpha_forward(cur, alpha, beta);
        return cur;
    }
    PathEnsemble cur = ensemble;
    for (int k = 0; k < -n; ++k) {
        const double T = cur.grid.back() / shrink;
        if (cur.grid.prefix_up_to(T).size() < 2)
            throw std::runtime_error("z_alpha_iterate: horizon exhausted");
        cur = z_alpha_inverse(cur, alpha, beta, T).ensemble;
    }
    return cur;
}

PathEnsemble molchan(const PathEnsemble& ensemble, HurstIndex H) {
    return z_alpha_forward(ensemble, AlphaParam(H.value - 0.5), H.value);
}

std::complex<double> transfer_function(AlphaParam alpha, double lambda) {
    const double a = alpha.value + 0.5;
    const std::complex<double> il(0.0, lambda);
    return (il - a) / (il + a);
}

double impulse_response(AlphaParam alpha, double x) {
    if (!(x > 0.0)) throw std::domain_error("impulse_response: x must be positive");
    return -(2.0 * alpha.value + 1.0) * std::exp(-(alpha.value + 0.5) * x);
}

double commutation_check(const KernelSpec& spec, const TimeGrid& grid,
                         const Eigen::MatrixXd& increments, AlphaParam alpha) {
    if (!grid.starts_at_zero())
        throw std::invalid_argument("commutation_check: grid must start at 0");
    // A = Z applied to the synthesized process.
    PathEnsemble x = synth_from_kernel(spec, grid, increments);
    PathEnsemble a_side = z_alpha_forward(x, alpha, spec.beta());
    // B = synthesis driven by increments of the transformed Brownian path.
    PathEnsemble w;
    w.grid = grid;
    w.values.resize(increments.rows(), grid.size());
    w.values.col(0).setZero();
    for (int j = 0; j < increments.cols(); ++j)
        w.values.col(j + 1) = w.values.col(j) + increments.col(j);
    PathEnsemble wz = z_alpha_forward(w, alpha, 0.5);
    Eigen::MatrixXd zinc(increments.rows(), increments.cols());
    for (int j = 0; j < increments.cols(); ++j)
        zinc.col(j) = wz.values.col(j + 1) - wz.values.col(j);
    PathEnsemble b_side = synth_from_kernel(spec, grid, zinc);
    return (a_side.values - b_side.values).cwiseAbs().maxCoeff();
}

} // namespace ssvg
