#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hexstation/hexgrid.hpp"

namespace hexstation::evaluation {

// Evaluation metrics of one prediction pass. Undefined values (degenerate
// class composition) are NaN with the matching flag set; they are never
// silently reported as 0.
struct MetricsReport {
  double accuracy = 0.0;
  double balanced_accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double custom = 0.0;

  std::size_t iterations = 1;
  double accuracy_std = 0.0;
  double balanced_accuracy_std = 0.0;
  double precision_std = 0.0;
  double recall_std = 0.0;
  double f1_std = 0.0;
  double custom_std = 0.0;

  bool recall_undefined = false;
  bool balanced_accuracy_undefined = false;

  std::string flags() const;
};

// Confusion metrics plus the distance-discounted custom score: TP and TN
// score 1, FN scores 0 and a FP scores 1/(k+1) where k is the grid distance
// to the nearest station cell. The custom value is the mean per-cell score
// over all evaluated cells.
MetricsReport compute_metrics(
    const std::map<hexgrid::CellId, bool>& predictions,
    const std::map<hexgrid::CellId, bool>& labels,
    const std::set<hexgrid::CellId>& station_cells);

// Aggregates per-iteration reports into means and population stddevs.
// Iterations with an undefined metric propagate the flag; defined values are
// averaged over the iterations where they exist.
MetricsReport aggregate_reports(const std::vector<MetricsReport>& reports);

}  // namespace hexstation::evaluation
