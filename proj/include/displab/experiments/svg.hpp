#pragma once
// Static SVG line plots.  Output is a plain polyline chart with axes, ticks
// and a legend, written with fixed formatting so that re-rendering the same
// data reproduces the file byte for byte.

#include <filesystem>
#include <string>
#include <vector>

namespace displab {

struct SvgSeries {
  std::string label;
  std::vector<double> x, y;
};

struct SvgPlotSpec {
  std::string title;
  std::string xlabel, ylabel;
  bool logx = false;
  bool logy = false;
};

void write_svg_plot(const std::filesystem::path& path, const SvgPlotSpec& spec,
                    const std::vector<SvgSeries>& series);

}  // namespace displab
