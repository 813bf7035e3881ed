#ifndef OVERLOAD_REPORT_HPP
#define OVERLOAD_REPORT_HPP

// Tabular (CSV) and graphical (SVG) rendering of model output. Both writers
// are byte-deterministic for identical input.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace overload {

class OutputTable {
public:
  explicit OutputTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) throw std::invalid_argument("OutputTable: header is empty");
  }

  void add_row(std::vector<double> row) {
    if (row.size() != header_.size()) throw std::invalid_argument("OutputTable: row width differs from header");
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("OutputTable: non-finite value");
    }
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

/// 12 significant digits, no negative zero.
inline std::string format_real(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string emit_csv(const OutputTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header().size(); ++i) {
    if (i) out += ',';
    out += table.header()[i];
  }
  out += '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_real(row[i]);
    }
    out += '\n';
  }
  return out;
}

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotMarker {
  std::string label;
  double x = 0.0;
  double y = 0.0;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  std::vector<PlotMarker> markers;
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

inline std::string fixed2(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string tick_label(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

/// Data extent padded by 5% on each side.
inline Range padded(double lo, double hi) {
  double span = hi - lo;
  if (span <= 0.0) span = std::abs(hi) > 0.0 ? std::abs(hi) : 1.0;
  return {lo - 0.05 * span, hi + 0.05 * span};
}

}  // namespace detail

/// Self-contained 800x600 line chart: one polyline per series, a legend from
/// series names, and labelled point markers.
inline std::string emit_svg(const PlotSpec& plot) {
  if (plot.series.empty()) throw std::invalid_argument("emit_svg: no series to draw");
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : plot.series) {
    if (s.x.empty()) throw std::invalid_argument("emit_svg: empty series '" + s.name + "'");
    if (s.x.size() != s.y.size()) throw std::invalid_argument("emit_svg: x and y differ in length");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
        throw std::invalid_argument("emit_svg: non-finite point in '" + s.name + "'");
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  for (const auto& m : plot.markers) {
    xmin = std::min(xmin, m.x);
    xmax = std::max(xmax, m.x);
    ymin = std::min(ymin, m.y);
    ymax = std::max(ymax, m.y);
  }
  const detail::Range xr = detail::padded(xmin, xmax);
  const detail::Range yr = detail::padded(ymin, ymax);

  constexpr double kWidth = 800, kHeight = 600;
  constexpr double kLeft = 80, kRight = 770, kTop = 50, kBottom = 530;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft); };
  auto py = [&](double y) { return kBottom - (y - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop); };
  static const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + detail::fixed2(kWidth) + "\" height=\"" + detail::fixed2(kHeight) +
         "\" fill=\"white\"/>\n";
  out += "<text x=\"400.00\" y=\"28.00\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
         detail::xml_escape(plot.title) + "</text>\n";

  // axes and ticks
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + detail::fixed2(kLeft) + "\" y1=\"" + detail::fixed2(kBottom) + "\" x2=\"" +
         detail::fixed2(kRight) + "\" y2=\"" + detail::fixed2(kBottom) + "\"/>\n";
  out += "<line x1=\"" + detail::fixed2(kLeft) + "\" y1=\"" + detail::fixed2(kBottom) + "\" x2=\"" +
         detail::fixed2(kLeft) + "\" y2=\"" + detail::fixed2(kTop) + "\"/>\n";
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / 5.0;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / 5.0;
    out += "<text x=\"" + detail::fixed2(px(xv)) + "\" y=\"" + detail::fixed2(kBottom + 18) +
           "\" text-anchor=\"middle\">" + detail::tick_label(xv) + "</text>\n";
    out += "<text x=\"" + detail::fixed2(kLeft - 8) + "\" y=\"" + detail::fixed2(py(yv) + 4) +
           "\" text-anchor=\"end\">" + detail::tick_label(yv) + "</text>\n";
  }
  out += "<text x=\"" + detail::fixed2(0.5 * (kLeft + kRight)) + "\" y=\"" + detail::fixed2(kBottom + 45) +
         "\" text-anchor=\"middle\">" + detail::xml_escape(plot.x_label) + "</text>\n";
  out += "<text x=\"20.00\" y=\"" + detail::fixed2(0.5 * (kTop + kBottom)) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 20.00 " + detail::fixed2(0.5 * (kTop + kBottom)) +
         ")\">" + detail::xml_escape(plot.y_label) + "</text>\n";
  out += "</g>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[k % 6]) + "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) out += ' ';
      out += detail::fixed2(px(s.x[i])) + "," + detail::fixed2(py(s.y[i]));
    }
    out += "\"/>\n";
  }

  for (const auto& m : plot.markers) {
    out += "<circle cx=\"" + detail::fixed2(px(m.x)) + "\" cy=\"" + detail::fixed2(py(m.y)) +
           "\" r=\"5\" fill=\"black\"/>\n";
    out += "<text x=\"" + detail::fixed2(px(m.x) + 8) + "\" y=\"" + detail::fixed2(py(m.y) - 8) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + detail::xml_escape(m.label) + "</text>\n";
  }

  // legend
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const double y = kTop + 10 + 18.0 * static_cast<double>(k);
    out += "<line x1=\"" + detail::fixed2(kRight - 170) + "\" y1=\"" + detail::fixed2(y) + "\" x2=\"" +
           detail::fixed2(kRight - 145) + "\" y2=\"" + detail::fixed2(y) + "\" stroke=\"" +
           std::string(kPalette[k % 6]) + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + detail::fixed2(kRight - 140) + "\" y=\"" + detail::fixed2(y + 4) + "\">" +
           detail::xml_escape(plot.series[k].name) + "</text>\n";
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace overload

#endif
