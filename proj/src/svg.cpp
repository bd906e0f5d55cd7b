#include "diskdecomp/svg.hpp"

#include "diskdecomp/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace diskdecomp {

namespace {

const char* stroke_for(const BoundaryClass& bc)
{
    if (std::holds_alternative<ArcSupport>(bc)) {
        return "#1f77b4";
    }
    if (std::holds_alternative<Covers>(bc)) {
        return "#2ca02c";
    }
    if (std::holds_alternative<Misses>(bc)) {
        return "#bbbbbb";
    }
    return "#d62728";  // any #∂h ∈ {1, ∞}
}

} // namespace

std::string render_svg(const Configuration& cfg, double tol)
{
    // Fit S¹ and every disk, with a small margin.
    double extent = 1.0;
    for (const auto& lm : cfg.landmarks) {
        extent = std::max({extent, std::abs(lm.center.x) + lm.radius,
                           std::abs(lm.center.y) + lm.radius});
    }
    extent *= 1.1;
    const double size = 480.0;
    const double scale = size / (2.0 * extent);
    const double stroke = 1.5 / scale;

    std::ostringstream out;
    out << std::setprecision(10);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"" << -extent << ' ' << -extent << ' ' << 2 * extent << ' ' << 2 * extent
        << "\">\n";
    // y up, as in the plane.
    out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << stroke << "\">\n";
    out << "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"black\" stroke-width=\"" << 2 * stroke
        << "\"/>\n";
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        const Landmark& lm = cfg.landmarks[i];
        const BoundaryClass bc = classify(lm, tol);
        out << "<circle data-index=\"" << i << "\" data-class=\"" << variant_name(bc) << "\" cx=\""
            << lm.center.x << "\" cy=\"" << lm.center.y << "\" r=\"" << lm.radius << "\" stroke=\""
            << stroke_for(bc) << "\"/>\n";
    }
    const BoundaryPoints bp = boundary_points(cfg, tol);
    for (const auto& [at, multiplicity] : bp.points) {
        out << "<circle data-multiplicity=\"" << multiplicity << "\" cx=\""
            << std::cos(at.radians()) << "\" cy=\"" << std::sin(at.radians()) << "\" r=\""
            << 3 * stroke * std::sqrt(static_cast<double>(multiplicity))
            << "\" fill=\"black\" stroke=\"none\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

void write_svg(const Configuration& cfg, const std::string& path, double tol)
{
    std::ofstream file(path);
    if (!file) {
        throw Error("cannot write " + path);
    }
    file << render_svg(cfg, tol);
    if (!file) {
        throw Error("cannot write " + path);
    }
}

} // namespace diskdecomp
