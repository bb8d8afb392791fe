#pragma once

#include <string>
#include <vector>

namespace sgevp::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Line plot with one polyline per series.
std::string line_plot_svg(const std::vector<Series>& series, const std::string& x_label,
                          const std::string& y_label);

}  // namespace sgevp::cli
