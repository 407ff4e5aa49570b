#pragma once

#include <string>

#include "wpd/polarize.hpp"
#include "wpd/polytope.hpp"
#include "wpd/weights.hpp"

namespace wpd {

struct SvgOptions {
    int unit = 40;   // pixels per lattice unit
    int margin = 2;  // lattice units around the polytope in every panel
};

// Draws the weighted polar decomposition of a 2-D polytope as SVG 1.1 text:
// one panel with the polytope and the weights (1/(1+y))^{c(p)} of the lattice
// points, followed by one panel per polarized cone with its sign and the
// weights w_v(p). Throws GeometryError unless P is 2-dimensional.
std::string render_decomposition_svg(const Polytope& P, const PolarizingVector& xi, const WeightParam& y,
                                     const SvgOptions& opts = {});

} // namespace wpd
