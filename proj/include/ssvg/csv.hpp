#pragma once

#include <string>

#include "ssvg/grid.hpp"

namespace ssvg {

// Path ensembles on disk: one `#` metadata line carrying the ensemble's
// key=value annotations, a `t,path_0,...` header, then one row per grid
// point.  Values are written with 17 significant digits so a read-back
// reproduces the doubles exactly.

void write_csv(const std::string& path, const PathEnsemble& ensemble);

PathEnsemble read_csv(const std::string& path);

} // namespace ssvg
