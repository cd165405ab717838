#pragma once

#include <string>

namespace chordal {

struct RenderOptions {
    int width_px = 512;
    int margin_px = 24;
    int depth = 1;  // replication levels drawn, 1..8
    bool show_labels = false;
    double outer_stroke = 2.0;
    double chord_stroke = 1.0;
    double inner_stroke = 1.5;
    std::string outer_color = "#1f3b73";
    std::string chord_color = "#888888";
    std::string inner_color = "#c0392b";

    // Throws invalid_options.
    void validate() const;
};

// SVG 1.1 drawing of the construction on a unit-side polygon with its first
// side horizontal at the bottom. Each depth level adds n chord <line>s and
// one inner <polygon>. Coordinates carry 9 significant digits, so identical
// inputs give byte-identical documents.
std::string render_svg(int n, double d, const RenderOptions& opts = {});

}  // namespace chordal
