#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "lorenz/empirical.hpp"

namespace lorenz {

struct Dataset {
  std::string label;
  WeightedSample sample;
  std::string source_path;
  std::size_t dropped_negative = 0;
  // Rows whose income (or weight, when a weight column is used) is empty,
  // unparsable or not finite, plus rows with a weight <= 0.
  std::size_t dropped_missing = 0;
};

// Reads a comma-separated file with a header row. Fields may be quoted with
// double quotes. Without a weight column every row gets weight 1. The label
// defaults to the file stem.
// Throws FileNotFound, MissingColumn, NoValidRows.
Dataset ingest_csv(const std::filesystem::path& path, const std::string& income_column,
                   const std::optional<std::string>& weight_column = std::nullopt,
                   const std::optional<std::string>& label = std::nullopt);

// Writes income (and weight) columns; the inverse of ingest_csv up to
// floating-point formatting, which uses 17 significant digits.
void write_csv(const Dataset& d, const std::filesystem::path& path,
               const std::string& income_column = "income",
               const std::string& weight_column = "weight");

}  // namespace lorenz
