#ifndef SSVG_GRID_HPP
#define SSVG_GRID_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssvg {

// Strictly increasing time points, first point >= 0.
struct TimeGrid {
    std::vector<double> points;
    bool uniform = false;
    double step = 0.0;

    TimeGrid() = default;
    explicit TimeGrid(std::vector<double> pts) : points(std::move(pts)) { validate(); }

    // n cells on [0, T], n+1 points including t = 0.
    static TimeGrid regular(double T, int n) {
        if (!(T > 0.0) || n < 1) throw std::invalid_argument("TimeGrid: bad T or n");
        TimeGrid g;
        g.points.resize(n + 1);
        for (int i = 0; i <= n; ++i) g.points[i] = T * i / n;
        g.uniform = true;
        g.step = T / n;
        return g;
    }

    // Points exp(u_i) for a uniform u-grid on [u0, u1]; excludes t = 0.
    static TimeGrid exponential(double u0, double u1, int n) {
        if (!(u1 > u0) || n < 1) throw std::invalid_argument("TimeGrid: bad log range");
        TimeGrid g;
        g.points.resize(n + 1);
        for (int i = 0; i <= n; ++i)
            g.points[i] = std::exp(u0 + (u1 - u0) * i / n);
        g.uniform = false;
        return g;
    }

    std::size_t size() const { return points.size(); }
    double operator[](std::size_t i) const { return points[i]; }
    double front() const { return points.front(); }
    double back() const { return points.back(); }
    bool starts_at_zero() const { return points.front() == 0.0; }

    // Grid restricted to points <= T (prefix).
    TimeGrid prefix_up_to(double T) const {
        std::vector<double> pts;
        for (double t : points)
            if (t <= T + 1e-12 * T) pts.push_back(t);
        TimeGrid g(std::move(pts));
        g.uniform = uniform;
        g.step = step;
        return g;
    }

    void validate() const {
        if (points.empty()) throw std::invalid_argument("TimeGrid: empty");
        if (!std::isfinite(points.front()))
            throw std::invalid_argument("TimeGrid: points must be finite");
        // Negative points only arise for log-time grids (Lamperti domain);
        // process-time entry points additionally require t0 >= 0.
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (!(points[i] > points[i - 1]) || !std::isfinite(points[i]))
                throw std::invalid_argument("TimeGrid: points must be strictly increasing and finite");
        }
    }
};

// Root seed with per-replicate stream derivation: (root, replicate) fully
// determines a path's increments, independent of generation order.
struct Seed {
    std::uint64_t root = 0;
};

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 path_engine(Seed seed, std::uint64_t replicate) {
    return std::mt19937_64(splitmix64(seed.root ^ splitmix64(replicate + 1)));
}

// Sample paths over a grid; one row per path, one column per grid point.
struct PathEnsemble {
    TimeGrid grid;
    Eigen::MatrixXd values; // n_paths x n_points
    std::string meta;

    int n_paths() const { return static_cast<int>(values.rows()); }
    int n_points() const { return static_cast<int>(values.cols()); }

    void check_shape() const {
        if (values.cols() != static_cast<Eigen::Index>(grid.size()))
            throw std::invalid_argument("PathEnsemble: column count != grid size");
    }
};

} // namespace ssvg

#endif
