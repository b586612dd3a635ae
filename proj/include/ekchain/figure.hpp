#pragma once

#include "ekchain/chain.hpp"
#include "ekchain/poly_bounds.hpp"
#include "ekchain/root_oracle.hpp"

#include <string>

namespace ekchain {

struct Palette {
    std::string sums = "#0000ff";
    std::string probes = "#ffd700";
    std::string centers = "#ff00ff";
    std::string circles = "#000000";
    std::string axes = "#808080";
};

struct FigureStyle {
    int width_px = 800;
    int height_px = 800;
    double margin_frac = 0.08;  // padding as a fraction of the larger extent
    Palette palette;
    bool label_toggle = true;
    double stroke_width = 1.5;  // px
};

// Throws std::invalid_argument for non-positive sizes or margin outside [0, 0.4).
void validate(const FigureStyle& style);

// Fixed 6-decimal rendering, ties to even, "-0.000000" folded to "0.000000".
std::string format_fixed6(double v);

/// Standalone SVG 1.1 drawing of a chain in model units.
///
/// The viewBox is the bounding box of every point and circle plus margin, and
/// the model is drawn inside a single y-flipped group so radii keep their model
/// values. Elements are emitted as axes, circles (ascending k, a coincident
/// circle is drawn once), segments, points, labels. Points are path dots, so
/// `<circle>` elements are exactly the chain circles. Throws EmptyChain.
std::string render_chain_svg(const ChainConstruction& chain, const FigureStyle& style);

/// Concentric annulus boundaries (one circle when degenerate) and root markers.
std::string render_annulus_svg(const Annulus& a, const RootSet& roots, const FigureStyle& style);

}  // namespace ekchain
