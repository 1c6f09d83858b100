#include "lorenz/chart.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "lorenz/error.hpp"
#include "lorenz/extremal.hpp"

namespace lorenz {

namespace {

constexpr int kBoundarySamples = 512;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string point_attr(double x, double y) { return num(chart_px(x)) + "," + num(chart_py(y)); }

std::string text(double px, double py, std::string_view body, std::string_view extra = "") {
  std::string s = "<text x=\"" + num(px) + "\" y=\"" + num(py) + "\"";
  if (!extra.empty()) s += " " + std::string(extra);
  return s + ">" + escape(body) + "</text>\n";
}

std::string axes(std::string_view y_label) {
  std::string s;
  s += "<line class=\"axis\" x1=\"" + num(chart_px(-1.0)) + "\" y1=\"" + num(chart_py(0.0)) +
       "\" x2=\"" + num(chart_px(1.0)) + "\" y2=\"" + num(chart_py(0.0)) + "\"/>\n";
  s += "<line class=\"axis\" x1=\"" + num(chart_px(0.0)) + "\" y1=\"" + num(chart_py(0.0)) +
       "\" x2=\"" + num(chart_px(0.0)) + "\" y2=\"" + num(chart_py(1.0)) + "\"/>\n";
  for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    s += text(chart_px(x), chart_py(0.0) + 20.0, num(x), "text-anchor=\"middle\"");
  }
  for (double y : {0.5, 1.0}) {
    s += text(chart_px(0.0) - 8.0, chart_py(y) + 4.0, num(y), "text-anchor=\"end\"");
  }
  s += text(chart_px(1.0), chart_py(0.0) + 40.0, "G(X2) - G(X1)", "text-anchor=\"end\"");
  s += text(chart_px(0.0) + 8.0, chart_py(1.0) - 12.0, y_label);
  return s;
}

std::string triangle_body(const ComparisonRun& run) {
  std::string s;
  s += "<polygon class=\"region\" points=\"" + point_attr(0.0, 0.0) + " " + point_attr(1.0, 1.0) +
       " " + point_attr(-1.0, 1.0) + "\"/>\n";
  s += "<line class=\"leg\" x1=\"" + num(chart_px(0.0)) + "\" y1=\"" + num(chart_py(0.0)) +
       "\" x2=\"" + num(chart_px(1.0)) + "\" y2=\"" + num(chart_py(1.0)) + "\"/>\n";
  s += "<line class=\"leg\" x1=\"" + num(chart_px(0.0)) + "\" y1=\"" + num(chart_py(0.0)) +
       "\" x2=\"" + num(chart_px(-1.0)) + "\" y2=\"" + num(chart_py(1.0)) + "\"/>\n";
  s += "<line class=\"hypotenuse\" x1=\"" + num(chart_px(-1.0)) + "\" y1=\"" + num(chart_py(1.0)) +
       "\" x2=\"" + num(chart_px(1.0)) + "\" y2=\"" + num(chart_py(1.0)) + "\"/>\n";
  s += text(chart_px(0.62) + 14.0, chart_py(0.55), "X1 ≤L X2 (leg L1)");
  s += text(chart_px(-0.62) - 14.0, chart_py(0.55), "X2 ≤L X1 (leg L2)",
            "text-anchor=\"end\"");
  s += text(chart_px(0.0), chart_py(1.0) - 30.0, "extremal pairs", "text-anchor=\"middle\"");
  s += axes("normalized distance");
  for (const IndexRecord& r : run.results) {
    s += "<circle class=\"point\" cx=\"" + num(chart_px(r.star.x)) + "\" cy=\"" +
         num(chart_py(r.star.y)) + "\" r=\"5\"><title>" + escape(r.second) + " (" +
         escape(to_string(r.frontier)) + ")</title></circle>\n";
    s += text(chart_px(r.star.x) + 8.0, chart_py(r.star.y) - 8.0, r.second, "class=\"label\"");
  }
  return s;
}

std::string delta_body(const ComparisonRun& run) {
  std::string lower;
  std::string upper;
  std::string outline;
  for (int i = 0; i < kBoundarySamples; ++i) {
    const double x = -1.0 + 2.0 * i / (kBoundarySamples - 1);
    const double ax = std::abs(x);
    const std::string sep = i == 0 ? "" : " ";
    lower += sep + point_attr(x, ax);
    upper += sep + point_attr(x, super_max(ax).value);
  }
  // The region is the band between the two boundary curves.
  outline = lower;
  for (int i = kBoundarySamples - 1; i >= 0; --i) {
    const double x = -1.0 + 2.0 * i / (kBoundarySamples - 1);
    outline += " " + point_attr(x, super_max(std::abs(x)).value);
  }
  std::string s;
  s += "<polygon class=\"region\" points=\"" + outline + "\"/>\n";
  s += "<polyline class=\"leg\" id=\"lower-boundary\" points=\"" + lower + "\"/>\n";
  s += "<polyline class=\"hypotenuse\" id=\"upper-boundary\" points=\"" + upper + "\"/>\n";
  s += text(chart_px(0.55) + 14.0, chart_py(0.5), "y = |x|");
  s += text(chart_px(0.0), chart_py(super_max(0.0).value) - 10.0, "y = M*(x)",
            "text-anchor=\"middle\"");
  s += axes("Lorenz distance");
  for (const IndexRecord& r : run.results) {
    s += "<circle class=\"point\" cx=\"" + num(chart_px(r.raw.delta_x)) + "\" cy=\"" +
         num(chart_py(r.raw.distance)) + "\" r=\"5\"><title>" + escape(r.second) +
         "</title></circle>\n";
    s += text(chart_px(r.raw.delta_x) + 8.0, chart_py(r.raw.distance) - 8.0, r.second,
              "class=\"label\"");
  }
  return s;
}

}  // namespace

std::string_view to_string(ChartKind k) noexcept {
  return k == ChartKind::Triangle ? "triangle" : "delta";
}

double chart_px(double x) noexcept { return 100.0 + (x + 1.0) * 400.0; }
double chart_py(double y) noexcept { return 650.0 - y * 550.0; }

std::string render_chart(const ComparisonRun& run, ChartKind kind) {
  if (run.results.empty()) fail(ErrorCode::DomainError, "cannot chart an empty comparison run");
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 700\" width=\"1000\" "
       "height=\"700\" font-family=\"sans-serif\" font-size=\"14\">\n";
  s += "<style>.region{fill:#eef3fb;stroke:none}.leg{fill:none;stroke:#1f4e9c;stroke-width:2}"
       ".hypotenuse{fill:none;stroke:#b03a2e;stroke-width:2}.axis{stroke:#555;stroke-width:1}"
       ".point{fill:#d35400;stroke:#222;stroke-width:1}.label{font-size:12px}</style>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"700\" fill=\"white\"/>\n";
  const std::string title = kind == ChartKind::Triangle
                                ? "Normalized index, baseline " + run.baseline
                                : "Raw index, baseline " + run.baseline;
  s += text(500.0, 40.0, title, "text-anchor=\"middle\" font-size=\"18\"");
  s += kind == ChartKind::Triangle ? triangle_body(run) : delta_body(run);
  s += "</svg>\n";
  return s;
}

void emit_chart(const ComparisonRun& run, ChartKind kind, const std::filesystem::path& path) {
  const std::string svg = render_chart(run, kind);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << svg;
  if (!out) fail(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace lorenz
