#pragma once

#include <string>

#include "spinrep/trep.hpp"

namespace spinrep {

struct RenderOptions {
    /// Draw every block on one set of concentric spheres of radius w_sigma
    /// instead of one panel per block.
    bool spheres_as_radii = false;
};

/// Static SVG of the T-rep constellations. Stars are projected orthographically
/// onto the x-z plane; back-facing stars are drawn faded, representatives filled
/// and their antipodes hollow. Coincident stars carry their multiplicity.
std::string render_svg(const TRep& t, const RenderOptions& opts = {});

} // namespace spinrep
