#include "prefix_sort/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "prefix_sort/bounds.hpp"

namespace prefix_sort {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* algo_color(Algo algo) {
  switch (algo) {
    case Algo::RT3: return "#1f77b4";
    case Algo::RT2: return "#d62728";
    case Algo::FM3: return "#2ca02c";
  }
  return "#000000";
}

std::string polyline(const std::vector<std::pair<double, double>>& pts,
                     const SvgChart& c, const char* color) {
  std::string points;
  for (const auto& [x, y] : pts) {
    if (!points.empty()) points += " ";
    points += num(c.x_of(x)) + "," + num(c.y_of(y));
  }
  return "  <polyline fill=\"none\" stroke=\"" + std::string(color) +
         "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
}

std::string line(double x1, double y1, double x2, double y2,
                 const std::string& extra) {
  return "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
         num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"#333333\"" + extra +
         "/>\n";
}

std::string text(double x, double y, const std::string& content,
                 const std::string& extra) {
  return "  <text x=\"" + num(x) + "\" y=\"" + num(y) +
         "\" font-family=\"sans-serif\" font-size=\"13\"" + extra + ">" +
         content + "</text>\n";
}

// Shared scaffolding: background, axes, dashed reference lines at ratios
// 2 and 3, endpoint tick labels, and axis titles.
std::string chart_scaffold(const SvgChart& c, const std::string& x_label,
                           const std::string& y_label,
                           const std::string& x_min_tick,
                           const std::string& x_max_tick) {
  const double left = c.margin_left;
  const double right = c.width - c.margin_right;
  const double top = c.margin_top;
  const double bottom = c.height - c.margin_bottom;
  std::string out;
  out += "  <rect x=\"0\" y=\"0\" width=\"" + num(c.width) + "\" height=\"" +
         num(c.height) + "\" fill=\"#ffffff\"/>\n";
  out += line(left, bottom, right, bottom, "");
  out += line(left, top, left, bottom, "");
  for (const double ref : {2.0, 3.0}) {
    if (ref < c.y_min || ref > c.y_max) continue;
    const double y = c.y_of(ref);
    out += line(left, y, right, y,
                " stroke-dasharray=\"6 4\" stroke-opacity=\"0.6\"");
    out += text(right - 34.0, y - 4.0, num(ref), " fill=\"#666666\"");
  }
  out += text(left, bottom + 18.0, x_min_tick, " fill=\"#333333\"");
  out += text(right - 30.0, bottom + 18.0, x_max_tick, " fill=\"#333333\"");
  out += text(left - 44.0, c.y_of(c.y_min) + 4.0, num(c.y_min),
              " fill=\"#333333\"");
  out += text(left - 44.0, c.y_of(c.y_max) + 4.0, num(c.y_max),
              " fill=\"#333333\"");
  out += text((left + right) / 2.0 - 60.0, c.height - 16.0, x_label,
              " fill=\"#333333\"");
  out += text(12.0, top - 14.0, y_label, " fill=\"#333333\"");
  return out;
}

std::string svg_open(const SvgChart& c) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(c.width) + "\" height=\"" + num(c.height) + "\" viewBox=\"0 0 " +
         num(c.width) + " " + num(c.height) + "\">\n";
}

std::string legend_entry(const SvgChart& c, int slot, Algo algo) {
  const double x = c.width - c.margin_right - 150.0;
  const double y = c.margin_top + 18.0 * slot;
  return text(x, y, algo_name(algo),
              std::string(" fill=\"") + algo_color(algo) + "\"");
}

void write_file(const std::string& content, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    raise(ErrorCode::IoError, "short write to '" + path + "'");
  }
}

}  // namespace

double SvgChart::x_of(double v) const {
  const double span = width - margin_left - margin_right;
  if (x_max == x_min) return margin_left + span / 2.0;
  return margin_left + (v - x_min) / (x_max - x_min) * span;
}

double SvgChart::y_of(double v) const {
  const double span = height - margin_top - margin_bottom;
  if (y_max == y_min) return margin_top + span / 2.0;
  return margin_top + (1.0 - (v - y_min) / (y_max - y_min)) * span;
}

SvgChart ratio_chart_frame(const ExperimentReport& report) {
  if (report.summary.empty()) {
    raise(ErrorCode::EmptyReport, "no benchmark summary to plot");
  }
  SvgChart c;
  double size_min = report.summary.front().size;
  double size_max = size_min;
  double mean_max = 0.0;
  for (const BenchSummary& s : report.summary) {
    size_min = std::min(size_min, static_cast<double>(s.size));
    size_max = std::max(size_max, static_cast<double>(s.size));
    mean_max = std::max(mean_max, s.mean_ratio);
  }
  c.x_min = size_min;
  c.x_max = size_max;
  c.y_min = 1.0;
  c.y_max = std::max(3.25, mean_max + 0.25);
  return c;
}

SvgChart adaptive_chart_frame(int b) {
  if (b < 0) {
    raise(ErrorCode::PreconditionViolated,
          "negative breakpoint count " + std::to_string(b));
  }
  SvgChart c;
  c.x_min = 0.0;
  c.x_max = b;
  c.y_min = 0.0;
  c.y_max = 3.25;
  return c;
}

std::string svg_ratio_chart(const ExperimentReport& report) {
  const SvgChart c = ratio_chart_frame(report);
  std::string out = svg_open(c);
  out += chart_scaffold(c, "permutation size", "mean ops / lower bound",
                        num(c.x_min), num(c.x_max));
  int slot = 0;
  for (const Algo algo : report.config.algos) {
    std::vector<std::pair<double, double>> pts;
    for (const BenchSummary& s : report.summary) {
      if (s.algo == algo) pts.emplace_back(s.size, s.mean_ratio);
    }
    if (pts.empty()) continue;
    std::sort(pts.begin(), pts.end());
    out += polyline(pts, c, algo_color(algo));
    out += legend_entry(c, slot++, algo);
  }
  out += "</svg>\n";
  return out;
}

void render_svg(const ExperimentReport& report, const std::string& path) {
  write_file(svg_ratio_chart(report), path);
}

std::string svg_adaptive_chart(int b) {
  const SvgChart c = adaptive_chart_frame(b);
  std::string out = svg_open(c);
  out += chart_scaffold(c, "reversals in an optimal sort",
                        "guaranteed ops / optimal", num(c.x_min),
                        num(c.x_max));
  int slot = 0;
  for (const Algo algo : {Algo::RT3, Algo::RT2, Algo::FM3}) {
    const int r_to = algo == Algo::FM3 ? b / 2 : b;
    const AdaptiveCurve curve = adaptive_curve(algo, b, 0, r_to);
    std::vector<std::pair<double, double>> pts;
    for (const auto& [r, bound] : curve.points) {
      pts.emplace_back(r, bound.to_double());
    }
    out += polyline(pts, c, algo_color(algo));
    out += legend_entry(c, slot++, algo);
  }
  out += "</svg>\n";
  return out;
}

void render_adaptive_svg(int b, const std::string& path) {
  write_file(svg_adaptive_chart(b), path);
}

}  // namespace prefix_sort
