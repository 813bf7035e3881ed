#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "overload/report.hpp"

using namespace overload;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(EmitCsv, HeaderAndRow) {
  OutputTable t({"a", "C_nash"});
  t.add_row({0.5, 0.958412});
  EXPECT_EQ(emit_csv(t), "a,C_nash\n0.5,0.958412\n");
}

TEST(EmitCsv, EmptyTableIsHeaderOnly) {
  EXPECT_EQ(emit_csv(OutputTable({"x", "y", "z"})), "x,y,z\n");
}

TEST(EmitCsv, RoundTripsToTwelveDigits) {
  OutputTable t({"v"});
  const std::vector<double> values{13.0 - 12.041594578792296, 1.0 / 3.0, -2.5e-7, 123456.789012345, 0.0, -0.0};
  for (double v : values) t.add_row({v});
  const auto lines = split_lines(emit_csv(t));
  ASSERT_EQ(lines.size(), values.size() + 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double parsed = std::strtod(lines[i + 1].c_str(), nullptr);
    EXPECT_NEAR(parsed, values[i], 1e-9 * (1.0 + std::abs(values[i])));
  }
  EXPECT_EQ(lines.back(), "0");
}

TEST(OutputTable, RejectsRaggedAndNonFiniteRows) {
  OutputTable t({"a", "b"});
  EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
  EXPECT_THROW(t.add_row({1.0, NAN}), std::invalid_argument);
  EXPECT_THROW(t.add_row({INFINITY, 1.0}), std::invalid_argument);
  EXPECT_THROW(OutputTable({}), std::invalid_argument);
}

TEST(EmitSvg, SingleSeriesSinglePolyline) {
  PlotSpec plot{"t", "x", "y", {{"s", {0.0, 1.0}, {0.0, 1.0}}}, {}};
  const std::string svg = emit_svg(plot);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("width=\"800\" height=\"600\""), std::string::npos);
  EXPECT_EQ(count(svg, "<polyline"), 1u);
  EXPECT_EQ(count(svg, "<svg"), 1u);
  EXPECT_EQ(count(svg, "</svg>"), 1u);
}

TEST(EmitSvg, MarkersLegendAndEscaping) {
  PlotSpec plot{"a < b & c", "x", "y",
                {{"one", {0.0, 1.0}, {1.0, 0.0}}, {"two", {0.0, 1.0}, {0.0, 1.0}}},
                {{"p\"q", 0.5, 0.5}}};
  const std::string svg = emit_svg(plot);
  EXPECT_EQ(count(svg, "<polyline"), 2u);
  EXPECT_EQ(count(svg, "<circle"), 1u);
  EXPECT_NE(svg.find("a &lt; b &amp; c"), std::string::npos);
  EXPECT_NE(svg.find("p&quot;q"), std::string::npos);
  EXPECT_NE(svg.find(">one<"), std::string::npos);
  EXPECT_NE(svg.find(">two<"), std::string::npos);
}

TEST(EmitSvg, MaximumMapsToTopOfPaddedRange) {
  // both axes span [0, 2], padded to [-0.1, 2.1]; (1, 2) maps to (80 + 1.1/2.2 * 690, 530 - 2.1/2.2 * 480)
  PlotSpec plot{"t", "x", "y", {{"s", {0.0, 1.0, 2.0}, {0.0, 2.0, 1.0}}}, {}};
  const std::string svg = emit_svg(plot);
  EXPECT_NE(svg.find("425.00,71.82"), std::string::npos);
}

TEST(EmitSvg, Errors) {
  EXPECT_THROW(emit_svg(PlotSpec{"t", "x", "y", {}, {}}), std::invalid_argument);
  EXPECT_THROW(emit_svg(PlotSpec{"t", "x", "y", {{"s", {}, {}}}, {}}), std::invalid_argument);
  EXPECT_THROW(emit_svg(PlotSpec{"t", "x", "y", {{"s", {0.0}, {}}}, {}}), std::invalid_argument);
}

TEST(EmitSvg, Deterministic) {
  PlotSpec plot{"t", "x", "y", {{"s", {0.0, 0.3, 1.0}, {0.1, 0.7, 0.2}}}, {{"m", 0.3, 0.7}}};
  EXPECT_EQ(emit_svg(plot), emit_svg(plot));
}
