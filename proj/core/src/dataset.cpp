#include "lorenz/dataset.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) return false;
  out = v;
  return true;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name,
                        const std::filesystem::path& path) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  fail(ErrorCode::MissingColumn, "column '" + name + "' not found in " + path.string());
}

}  // namespace

Dataset ingest_csv(const std::filesystem::path& path, const std::string& income_column,
                   const std::optional<std::string>& weight_column,
                   const std::optional<std::string>& label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::NoValidRows, path.string() + " is empty");
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  const std::vector<std::string> header = split_row(line);
  const std::size_t income_idx = find_column(header, income_column, path);
  std::optional<std::size_t> weight_idx;
  if (weight_column) weight_idx = find_column(header, *weight_column, path);

  std::vector<double> values;
  std::vector<double> weights;
  std::size_t dropped_negative = 0;
  std::size_t dropped_missing = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_row(line);
    double v = 0.0;
    if (income_idx >= fields.size() || !parse_number(fields[income_idx], v)) {
      ++dropped_missing;
      continue;
    }
    double w = 1.0;
    if (weight_idx) {
      if (*weight_idx >= fields.size() || !parse_number(fields[*weight_idx], w) || !(w > 0.0)) {
        ++dropped_missing;
        continue;
      }
    }
    if (v < 0.0) {
      ++dropped_negative;
      continue;
    }
    values.push_back(v);
    weights.push_back(w);
  }
  if (values.empty()) fail(ErrorCode::NoValidRows, "no usable rows in " + path.string());

  return Dataset{label.value_or(path.stem().string()),
                 WeightedSample(std::move(values), std::move(weights)), path.string(),
                 dropped_negative, dropped_missing};
}

void write_csv(const Dataset& d, const std::filesystem::path& path,
               const std::string& income_column, const std::string& weight_column) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
  out << income_column << ',' << weight_column << '\n';
  const auto v = d.sample.values();
  const auto w = d.sample.weights();
  char buf[64];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v[i], w[i]);
    out << buf;
  }
  if (!out) fail(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace lorenz
