#pragma once

#include <string>
#include <vector>

namespace pct {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// Minimal static SVG line chart: axes, ticks, one polyline with point
/// markers per series, legend in the top-left.  Output is deterministic.
std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<PlotSeries>& series);

void write_file(const std::string& path, const std::string& content);

}  // namespace pct
