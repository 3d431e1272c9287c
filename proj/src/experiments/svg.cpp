#include "displab/experiments/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace displab {
namespace {

constexpr double kWidth = 640.0, kHeight = 420.0;
constexpr double kLeft = 62.0, kRight = 18.0, kTop = 34.0, kBottom = 46.0;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* kPalette[] = {"#1f6fb2", "#c23b22", "#2e8b57",
                          "#8a2be2", "#b8860b", "#444444"};

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;

  double place(double v, double a, double b) const {
    double t = log ? (std::log(v) - std::log(lo)) / (std::log(hi) - std::log(lo))
                   : (v - lo) / (hi - lo);
    return a + t * (b - a);
  }
};

Axis make_axis(const std::vector<SvgSeries>& series, bool log, bool use_x) {
  Axis ax;
  ax.log = log;
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const SvgSeries& s : series) {
    const std::vector<double>& v = use_x ? s.x : s.y;
    for (double q : v) {
      if (log && !(q > 0.0)) continue;
      if (first) {
        lo = hi = q;
        first = false;
      } else {
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
    }
  }
  if (first) {
    lo = log ? 1.0 : 0.0;
    hi = log ? 10.0 : 1.0;
  }
  if (log) {
    if (hi / lo < 1.0001) hi = lo * 10.0;
  } else {
    if (hi - lo < 1e-300) hi = lo + 1.0;
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  ax.lo = lo;
  ax.hi = hi;
  return ax;
}

std::vector<double> ticks(const Axis& ax) {
  std::vector<double> t;
  if (ax.log) {
    const int e0 = static_cast<int>(std::ceil(std::log10(ax.lo) - 1e-9));
    const int e1 = static_cast<int>(std::floor(std::log10(ax.hi) + 1e-9));
    for (int e = e0; e <= e1; ++e) t.push_back(std::pow(10.0, e));
    if (t.size() < 2) {
      t = {ax.lo, std::sqrt(ax.lo * ax.hi), ax.hi};
    }
    return t;
  }
  const double span = ax.hi - ax.lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  if (raw / mag > 5.0)
    step = 10.0 * mag;
  else if (raw / mag > 2.0)
    step = 5.0 * mag;
  else if (raw / mag > 1.0)
    step = 2.0 * mag;
  const double start = std::ceil(ax.lo / step) * step;
  for (double v = start; v <= ax.hi + 0.5 * step; v += step) t.push_back(v);
  return t;
}

}  // namespace

void write_svg_plot(const std::filesystem::path& path, const SvgPlotSpec& spec,
                    const std::vector<SvgSeries>& series) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());

  const Axis xax = make_axis(series, spec.logx, true);
  const Axis yax = make_axis(series, spec.logy, false);
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom, y1 = kTop;  // y grows downward

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << px(kWidth / 2) << "\" y=\"20\" font-size=\"14\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\">"
      << spec.title << "</text>\n";

  // axes box and ticks
  out << "<rect x=\"" << px(x0) << "\" y=\"" << px(y1) << "\" width=\""
      << px(x1 - x0) << "\" height=\"" << px(y0 - y1)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double tv : ticks(xax)) {
    const double X = xax.place(tv, x0, x1);
    if (X < x0 - 0.5 || X > x1 + 0.5) continue;
    out << "<line x1=\"" << px(X) << "\" y1=\"" << px(y0) << "\" x2=\""
        << px(X) << "\" y2=\"" << px(y0 + 4) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(X) << "\" y=\"" << px(y0 + 17)
        << "\" font-size=\"11\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\">"
        << fmt(tv) << "</text>\n";
  }
  for (double tv : ticks(yax)) {
    const double Y = yax.place(tv, y0, y1);
    if (Y > y0 + 0.5 || Y < y1 - 0.5) continue;
    out << "<line x1=\"" << px(x0 - 4) << "\" y1=\"" << px(Y) << "\" x2=\""
        << px(x0) << "\" y2=\"" << px(Y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(x0 - 7) << "\" y=\"" << px(Y + 4)
        << "\" font-size=\"11\" text-anchor=\"end\" "
           "font-family=\"sans-serif\">"
        << fmt(tv) << "</text>\n";
  }
  out << "<text x=\"" << px((x0 + x1) / 2) << "\" y=\"" << px(kHeight - 8)
      << "\" font-size=\"12\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\">"
      << spec.xlabel << "</text>\n";
  out << "<text x=\"16\" y=\"" << px((y0 + y1) / 2)
      << "\" font-size=\"12\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 16 "
      << px((y0 + y1) / 2) << ")\">" << spec.ylabel << "</text>\n";

  // polylines
  for (std::size_t k = 0; k < series.size(); ++k) {
    const SvgSeries& s = series[k];
    out << "<polyline fill=\"none\" stroke=\""
        << kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))]
        << "\" stroke-width=\"1.5\" points=\"";
    bool sep = false;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if ((spec.logx && !(s.x[i] > 0.0)) || (spec.logy && !(s.y[i] > 0.0)))
        continue;
      if (sep) out << ' ';
      out << px(xax.place(s.x[i], x0, x1)) << ','
          << px(yax.place(s.y[i], y0, y1));
      sep = true;
    }
    out << "\"/>\n";
    // legend entry
    const double ly = y1 + 14.0 + 16.0 * static_cast<double>(k);
    out << "<line x1=\"" << px(x1 - 150) << "\" y1=\"" << px(ly) << "\" x2=\""
        << px(x1 - 126) << "\" y2=\"" << px(ly) << "\" stroke=\""
        << kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))]
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << px(x1 - 120) << "\" y=\"" << px(ly + 4)
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.label
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace displab
