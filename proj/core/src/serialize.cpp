#include <json.hpp>

#include "lorenz/asymptotics.hpp"
#include "lorenz/comparison.hpp"
#include "lorenz/curve.hpp"
#include "lorenz/error.hpp"
#include "lorenz/indices.hpp"

namespace lorenz {

namespace {

using nlohmann::json;

json pair_json(double x, double y) { return json::array({x, y}); }

json record_json(const IndexRecord& r) {
  return json{{"first", r.first},
              {"second", r.second},
              {"gini1", r.raw.gini1},
              {"gini2", r.raw.gini2},
              {"dL", r.raw.distance},
              {"I", pair_json(r.raw.delta_x, r.raw.distance)},
              {"Istar", pair_json(r.star.x, r.star.y)},
              {"Iupper", pair_json(r.upper.x, r.upper.y)},
              {"class", std::string(to_string(r.frontier))},
              {"tol", r.tolerance}};
}

json summary_json(const DatasetSummary& s) {
  return json{{"label", s.label},
              {"source", s.source_path},
              {"n", s.n},
              {"total_weight", s.total_weight},
              {"mean", s.mean},
              {"gini", s.gini},
              {"dropped_negative", s.dropped_negative},
              {"dropped_missing", s.dropped_missing}};
}

json margin_json(const MarginStats& m) {
  return json{{"mean", m.mean},
              {"sd", m.sd},
              {"skewness", m.skewness},
              {"excess_kurtosis", m.excess_kurtosis},
              {"normal_compatible", m.normal_compatible}};
}

Point2 read_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) throw json::other_error::create(501, "expected [x, y]", &j);
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const LorenzCurve& c) {
  json knots = json::array();
  for (const Knot& k : c.knots()) knots.push_back(pair_json(k.t, k.y));
  return json{{"knots", knots}}.dump();
}

LorenzCurve curve_from_json(std::string_view text) {
  const json j = parse(text);
  std::vector<Knot> knots;
  try {
    for (const json& k : j.at("knots")) {
      const Point2 p = read_pair(k);
      knots.push_back({p.x, p.y});
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed curve JSON: ") + e.what());
  }
  return make_curve(std::move(knots));
}

std::string to_json(const RawIndex& r) {
  return json{{"gini1", r.gini1},
              {"gini2", r.gini2},
              {"dL", r.distance},
              {"I", pair_json(r.delta_x, r.distance)}}
      .dump();
}

std::string to_json(const IndexRecord& r, int indent) { return record_json(r).dump(indent); }

std::string to_json(const ComparisonRun& run, int indent) {
  json results = json::array();
  for (const IndexRecord& r : run.results) results.push_back(record_json(r));
  json datasets = json::array();
  for (const DatasetSummary& s : run.datasets) datasets.push_back(summary_json(s));
  return json{{"baseline", run.baseline},
              {"targets", run.targets},
              {"results", results},
              {"datasets", datasets}}
      .dump(indent);
}

ComparisonRun run_from_json(std::string_view text) {
  const json j = parse(text);
  ComparisonRun run;
  try {
    run.baseline = j.at("baseline").get<std::string>();
    run.targets = j.at("targets").get<std::vector<std::string>>();
    for (const json& r : j.at("results")) {
      IndexRecord rec;
      rec.first = r.value("first", std::string());
      rec.second = r.value("second", std::string());
      rec.raw.gini1 = r.at("gini1").get<double>();
      rec.raw.gini2 = r.at("gini2").get<double>();
      rec.raw.distance = r.at("dL").get<double>();
      rec.raw.delta_x = read_pair(r.at("I")).x;
      rec.star = read_pair(r.at("Istar"));
      rec.upper = read_pair(r.at("Iupper"));
      rec.frontier = frontier_class_from_string(r.at("class").get<std::string>());
      rec.tolerance = r.value("tol", 0.0);
      run.results.push_back(rec);
    }
    if (j.contains("datasets")) {
      for (const json& d : j.at("datasets")) {
        DatasetSummary s;
        s.label = d.at("label").get<std::string>();
        s.source_path = d.value("source", std::string());
        s.n = d.value("n", std::size_t{0});
        s.total_weight = d.value("total_weight", 0.0);
        s.mean = d.value("mean", 0.0);
        s.gini = d.value("gini", 0.0);
        s.dropped_negative = d.value("dropped_negative", std::size_t{0});
        s.dropped_missing = d.value("dropped_missing", std::size_t{0});
        run.datasets.push_back(s);
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed run JSON: ") + e.what());
  }
  return run;
}

std::string to_json(const NormalityReport& r, int indent) {
  return json{{"draws", r.draws},
              {"comp1", margin_json(r.first)},
              {"comp2", margin_json(r.second)},
              {"normal_compatible", r.normal_compatible},
              {"thresholds",
               {{"abs_skewness", kMaxAbsSkewness}, {"abs_excess_kurtosis", kMaxAbsExcessKurtosis}}}}
      .dump(indent);
}

}  // namespace lorenz
