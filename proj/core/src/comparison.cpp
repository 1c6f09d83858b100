#include "lorenz/comparison.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

#include "lorenz/error.hpp"

namespace lorenz {

DatasetSummary summarize(const Dataset& d) {
  DatasetSummary s;
  s.label = d.label;
  s.source_path = d.source_path;
  s.n = d.sample.size();
  s.total_weight = d.sample.total_weight();
  s.mean = d.sample.mean();
  s.gini = gini(empirical_lorenz(d.sample));
  s.dropped_negative = d.dropped_negative;
  s.dropped_missing = d.dropped_missing;
  return s;
}

double default_frontier_tolerance(std::size_t n1, std::size_t n2) {
  const std::size_t n = std::min(n1, n2);
  if (n == 0) fail(ErrorCode::DomainError, "sample sizes must be at least 1");
  return 1.0 / std::sqrt(static_cast<double>(n));
}

IndexRecord compare_pair(const Dataset& first, const Dataset& second,
                         std::optional<double> tolerance) {
  const PlugInIndices idx = plug_in_indices(first.sample, second.sample);
  IndexRecord r;
  r.first = first.label;
  r.second = second.label;
  r.raw = idx.raw;
  r.star = {idx.star.x, idx.star.y};
  r.upper = {idx.upper.x, idx.upper.y};
  r.tolerance =
      tolerance.value_or(default_frontier_tolerance(first.sample.size(), second.sample.size()));
  r.frontier = classify(idx.star, r.tolerance);
  return r;
}

ComparisonRun run_comparison(const Dataset& baseline, std::span<const Dataset> targets,
                             std::optional<double> tolerance) {
  if (targets.empty()) fail(ErrorCode::DomainError, "a comparison needs at least one target");
  const std::size_t count = targets.size();
  std::vector<IndexRecord> records(count);
  std::vector<DatasetSummary> summaries(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        records[i] = compare_pair(baseline, targets[i], tolerance);
        summaries[i] = summarize(targets[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ComparisonRun run;
  run.baseline = baseline.label;
  run.datasets.push_back(summarize(baseline));
  for (std::size_t i = 0; i < count; ++i) {
    run.targets.push_back(targets[i].label);
    run.results.push_back(std::move(records[i]));
    run.datasets.push_back(std::move(summaries[i]));
  }
  return run;
}

}  // namespace lorenz
