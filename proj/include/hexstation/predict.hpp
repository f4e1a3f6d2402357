#pragma once

#include <map>
#include <string>

#include "hexstation/experiment.hpp"

namespace hexstation::predict {

// Whole-city station-probability map. `probabilities` is the raw,
// threshold-independent map; filtering is a pure view over it.
struct PredictionMap {
  std::string city;
  hexgrid::Resolution resolution{9};
  std::map<hexgrid::CellId, double> probabilities;
  std::size_t iterations_averaged = 0;
  double threshold = 0.5;

  std::map<hexgrid::CellId, double> filtered() const;
  std::map<hexgrid::CellId, double> filtered_at(double t) const;
};

// Per cell, the mean positive-class probability over `iterations`
// independently trained models (trained on the train city, sampled at
// cfg.imbalance_ratio). Every cell of the evaluation city is scored.
PredictionMap predict_city(const evaluation::CityContext& train_ctx,
                           const evaluation::CityContext& eval_ctx,
                           const evaluation::ExperimentConfig& cfg,
                           int iterations, double threshold);

// GeoJSON FeatureCollection of the retained cells: one polygon per cell with
// properties {cell, probability} plus {station} when labels are given.
std::string export_geojson(
    const PredictionMap& pm,
    const std::map<hexgrid::CellId, bool>* labels = nullptr);

// map.csv persistence of the raw map (`cell,probability`, sorted by cell).
std::string serialize_prediction_csv(const PredictionMap& pm);
PredictionMap parse_prediction_csv(const std::string& body);

}  // namespace hexstation::predict
