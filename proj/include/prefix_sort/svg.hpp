#pragma once
/**
 * @file svg.hpp
 * @brief Self-contained SVG charts: mean ratio vs size, and adaptive ratio
 *        bound vs reversal count.
 */

#include <string>

#include "prefix_sort/bench.hpp"

namespace prefix_sort {

// Fixed 800x600 canvas with margins; both axes are affine.  Degenerate
// domains (single x or y value) map to the plot center.
struct SvgChart {
  double width = 800.0;
  double height = 600.0;
  double margin_left = 70.0;
  double margin_right = 30.0;
  double margin_top = 40.0;
  double margin_bottom = 60.0;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  double x_of(double v) const;
  double y_of(double v) const;
};

// Chart frames used by the renderers, exposed so tests can recompute the
// exact coordinate transforms.
SvgChart ratio_chart_frame(const ExperimentReport& report);  // EmptyReport
SvgChart adaptive_chart_frame(int b);

// One polyline per algorithm (mean ratio per size), dashed reference lines
// at ratios 2 and 3, labeled axes.  Raises EmptyReport on an empty summary.
std::string svg_ratio_chart(const ExperimentReport& report);
void render_svg(const ExperimentReport& report, const std::string& path);

// One polyline per algorithm: adaptive_ratio(algo, b, r) over the valid r
// range (0..b for RT3/RT2, 0..floor(b/2) for FM3).
std::string svg_adaptive_chart(int b);
void render_adaptive_svg(int b, const std::string& path);

}  // namespace prefix_sort
