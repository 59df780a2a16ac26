#pragma once

#include <string>
#include <vector>

namespace gsc::plot {

struct Series {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};

struct PlotOptions {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool log_y = false;  // log10 y axis; nonpositive samples break the polyline
};

/// Fixed 800x500 line plot with axis ticks at round numbers. The output is a
/// pure function of the inputs (no timestamps or generator metadata), so
/// rerunning a command rewrites byte-identical SVG.
std::string render_line_plot(const std::vector<Series>& series, const PlotOptions& opts);

}  // namespace gsc::plot
