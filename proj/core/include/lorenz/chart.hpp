#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lorenz/comparison.hpp"

namespace lorenz {

enum class ChartKind {
  Triangle,     // normalized star index in the triangle |x| <= y <= 1
  DeltaRegion,  // raw index in the region |x| <= y <= M*(x)
};

std::string_view to_string(ChartKind k) noexcept;

// Both charts share a 1000 x 700 canvas; x in [-1, 1] and y in [0, 1] map
// linearly onto [100, 900] x [650, 100].
inline constexpr double kChartWidth = 1000.0;
inline constexpr double kChartHeight = 700.0;
double chart_px(double x) noexcept;
double chart_py(double y) noexcept;

// Self-contained SVG; identical runs give identical bytes.
std::string render_chart(const ComparisonRun& run, ChartKind kind);

// Throws DomainError for an empty run and IoError when the file cannot be
// written.
void emit_chart(const ComparisonRun& run, ChartKind kind, const std::filesystem::path& path);

}  // namespace lorenz
