#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lorenz/dataset.hpp"
#include "lorenz/indices.hpp"

namespace lorenz {

struct DatasetSummary {
  std::string label;
  std::string source_path;
  std::size_t n = 0;
  double total_weight = 0.0;
  double mean = 0.0;
  double gini = 0.0;
  std::size_t dropped_negative = 0;
  std::size_t dropped_missing = 0;
};

DatasetSummary summarize(const Dataset& d);

// Indices of the pair (first, second), with the first dataset's curve as l1.
struct IndexRecord {
  std::string first;
  std::string second;
  RawIndex raw;
  Point2 star;
  Point2 upper;
  FrontierClass frontier = FrontierClass::Interior;
  double tolerance = 0.0;
};

// Frontier tolerance for empirical curves: 1/sqrt(min(n1, n2)).
double default_frontier_tolerance(std::size_t n1, std::size_t n2);

IndexRecord compare_pair(const Dataset& first, const Dataset& second,
                         std::optional<double> tolerance = std::nullopt);

struct ComparisonRun {
  std::string baseline;
  std::vector<std::string> targets;
  std::vector<IndexRecord> results;
  std::vector<DatasetSummary> datasets;  // baseline first, then the targets
};

// Baseline against every target. Throws DomainError without targets.
ComparisonRun run_comparison(const Dataset& baseline, std::span<const Dataset> targets,
                             std::optional<double> tolerance = std::nullopt);

// {"gini1", "gini2", "dL", "I", "Istar", "Iupper", "class"} plus labels and
// the tolerance used.
std::string to_json(const IndexRecord& r, int indent = -1);
std::string to_json(const ComparisonRun& run, int indent = 2);
ComparisonRun run_from_json(std::string_view text);

}  // namespace lorenz
