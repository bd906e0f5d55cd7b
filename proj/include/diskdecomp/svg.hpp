#pragma once

// Static SVG drawing of a configuration: S¹, every disk boundary, and the
// boundary points on S¹.

#include "diskdecomp/signal.hpp"

#include <string>

namespace diskdecomp {

std::string render_svg(const Configuration& cfg, double tol = kDefaultTol);

/// Writes render_svg(cfg) to `path`. Throws Error if the file cannot be written.
void write_svg(const Configuration& cfg, const std::string& path, double tol = kDefaultTol);

} // namespace diskdecomp
