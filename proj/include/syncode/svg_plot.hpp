#pragma once

#include "syncode/bounds.hpp"

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace syncode {

/// One overlay polyline in (delta, rate) coordinates.
using Curve = std::vector<std::pair<double, double>>;

struct PlotOptions {
    int q = 2;
    PlotkinVariant variant = PlotkinVariant::Standard;
    bool draw_bounds = true; ///< built-in GV curve and Plotkin line overlays
    int bound_samples = 256;
};

/// Deterministic SVG scatter of the (delta, rate) plane on fixed axes
/// [0,1] x [0,1.6], points colored by region. The only non-data line is a
/// version comment after the XML declaration.
void render_scatter_svg(std::ostream& out, std::span<const CodePoint> points,
                        std::span<const Curve> extra_curves, const PlotOptions& options);

} // namespace syncode
