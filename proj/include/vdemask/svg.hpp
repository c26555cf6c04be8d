#pragma once

#include <string>
#include <vector>

#include "vdemask/mask.hpp"

namespace vdemask {

struct ChartSeries {
    std::string label;
    std::vector<MaskSample> points;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
};

// Minimal static SVG line chart: axes, ticks, one polyline per series and a
// legend built from the labels. No external renderer involved; output is a
// pure function of the spec.
std::string render_line_chart_svg(const ChartSpec& spec);

}  // namespace vdemask
