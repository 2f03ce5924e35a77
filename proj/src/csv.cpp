#include "ssvg/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ssvg {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_csv(const std::string& path, const PathEnsemble& ensemble) {
    ensemble.check_shape();
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("write_csv: cannot open " + tmp);
        out << "# " << ensemble.meta << "\n";
        out << "t";
        for (int p = 0; p < ensemble.n_paths(); ++p) out << ",path_" << p;
        out << "\n";
        for (int j = 0; j < ensemble.n_points(); ++j) {
            out << fmt17(ensemble.grid[j]);
            for (int p = 0; p < ensemble.n_paths(); ++p)
                out << ',' << fmt17(ensemble.values(p, j));
            out << "\n";
        }
        if (!out) throw std::runtime_error("write_csv: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("write_csv: cannot rename onto " + path);
}

PathEnsemble read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#')
        throw std::runtime_error("read_csv: missing metadata line in " + path);
    PathEnsemble e;
    e.meta = line.size() > 2 ? line.substr(2) : "";
    if (!std::getline(in, line))
        throw std::runtime_error("read_csv: missing header in " + path);
    int n_paths = -1; // count of `path_k` columns
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) ++n_paths;
    }
    if (n_paths < 1)
        throw std::runtime_error("read_csv: no path columns in " + path);
    std::vector<double> times;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (static_cast<int>(row.size()) != n_paths + 1)
            throw std::runtime_error("read_csv: ragged row in " + path);
        times.push_back(row.front());
        rows.push_back(std::move(row));
    }
    e.grid = TimeGrid(std::move(times));
    e.values.resize(n_paths, static_cast<int>(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (int p = 0; p < n_paths; ++p) e.values(p, j) = rows[j][p + 1];
    e.check_shape();
    return e;
}

} // namespace ssvg
