#include "hexstation/metrics.hpp"

#include <cmath>
#include <limits>

#include "hexstation/errors.hpp"

namespace hexstation::evaluation {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Grid distance from `cell` to the nearest station cell, by expanding ring
// search. Capped; beyond the cap the custom contribution is ~0 anyway.
constexpr int kMaxStationSearch = 64;

int nearest_station_distance(hexgrid::CellId cell,
                             const std::set<hexgrid::CellId>& stations) {
  if (stations.empty()) return -1;
  for (int k = 0; k <= kMaxStationSearch; ++k) {
    for (const auto& c : hexgrid::ring(cell, k))
      if (stations.count(c)) return k;
  }
  return -1;
}

}  // namespace

std::string MetricsReport::flags() const {
  std::string out;
  if (recall_undefined) out += "recall_undefined";
  if (balanced_accuracy_undefined) {
    if (!out.empty()) out += ';';
    out += "balanced_accuracy_undefined";
  }
  return out;
}

MetricsReport compute_metrics(
    const std::map<hexgrid::CellId, bool>& predictions,
    const std::map<hexgrid::CellId, bool>& labels,
    const std::set<hexgrid::CellId>& station_cells) {
  if (predictions.empty())
    throw input_error("compute_metrics: empty prediction set");
  if (predictions.size() != labels.size())
    throw input_error("compute_metrics: predictions and labels differ in size");

  double tp = 0, tn = 0, fp = 0, fn = 0;
  double custom_sum = 0.0;
  for (const auto& [cell, predicted] : predictions) {
    const auto it = labels.find(cell);
    if (it == labels.end())
      throw input_error("compute_metrics: prediction for unlabeled cell " +
                        cell.to_string());
    const bool actual = it->second;
    if (predicted && actual) {
      ++tp;
      custom_sum += 1.0;
    } else if (!predicted && !actual) {
      ++tn;
      custom_sum += 1.0;
    } else if (predicted && !actual) {
      ++fp;
      const int k = nearest_station_distance(cell, station_cells);
      if (k >= 0) custom_sum += 1.0 / static_cast<double>(k + 1);
    } else {
      ++fn;
    }
  }

  const double n = tp + tn + fp + fn;
  MetricsReport r;
  r.accuracy = (tp + tn) / n;
  r.custom = custom_sum / n;
  r.precision = (tp + fp) > 0 ? tp / (tp + fp) : 0.0;
  if (tp + fn > 0) {
    r.recall = tp / (tp + fn);
  } else {
    r.recall = kNaN;
    r.recall_undefined = true;
  }
  if (tp + fn > 0 && tn + fp > 0) {
    r.balanced_accuracy = (tp / (tp + fn) + tn / (tn + fp)) / 2.0;
  } else {
    r.balanced_accuracy = kNaN;
    r.balanced_accuracy_undefined = true;
  }
  const double pr = r.precision;
  const double rc = r.recall_undefined ? 0.0 : r.recall;
  r.f1 = (pr + rc) > 0.0 ? 2.0 * pr * rc / (pr + rc) : 0.0;
  return r;
}

namespace {

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
  bool any = false;
};

template <typename Get>
Moments moments(const std::vector<MetricsReport>& reports, Get get) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : reports) {
    const double v = get(r);
    if (std::isnan(v)) continue;
    sum += v;
    ++n;
  }
  Moments m;
  if (n == 0) return m;
  m.any = true;
  m.mean = sum / static_cast<double>(n);
  double var = 0.0;
  for (const auto& r : reports) {
    const double v = get(r);
    if (std::isnan(v)) continue;
    const double d = v - m.mean;
    var += d * d;
  }
  m.stddev = std::sqrt(var / static_cast<double>(n));
  return m;
}

}  // namespace

MetricsReport aggregate_reports(const std::vector<MetricsReport>& reports) {
  if (reports.empty()) throw input_error("no reports to aggregate");
  MetricsReport out;
  out.iterations = reports.size();

  const auto acc = moments(reports, [](const auto& r) { return r.accuracy; });
  out.accuracy = acc.mean;
  out.accuracy_std = acc.stddev;
  const auto bal =
      moments(reports, [](const auto& r) { return r.balanced_accuracy; });
  const auto prec = moments(reports, [](const auto& r) { return r.precision; });
  out.precision = prec.mean;
  out.precision_std = prec.stddev;
  const auto rec = moments(reports, [](const auto& r) { return r.recall; });
  const auto f1m = moments(reports, [](const auto& r) { return r.f1; });
  out.f1 = f1m.mean;
  out.f1_std = f1m.stddev;
  const auto cus = moments(reports, [](const auto& r) { return r.custom; });
  out.custom = cus.mean;
  out.custom_std = cus.stddev;

  if (bal.any) {
    out.balanced_accuracy = bal.mean;
    out.balanced_accuracy_std = bal.stddev;
  } else {
    out.balanced_accuracy = kNaN;
    out.balanced_accuracy_undefined = true;
  }
  if (rec.any) {
    out.recall = rec.mean;
    out.recall_std = rec.stddev;
  } else {
    out.recall = kNaN;
    out.recall_undefined = true;
  }
  for (const auto& r : reports) {
    out.recall_undefined = out.recall_undefined || r.recall_undefined;
    out.balanced_accuracy_undefined =
        out.balanced_accuracy_undefined || r.balanced_accuracy_undefined;
  }
  return out;
}

}  // namespace hexstation::evaluation
