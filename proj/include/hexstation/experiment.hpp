#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexstation/buckets.hpp"
#include "hexstation/classifiers.hpp"
#include "hexstation/embedding.hpp"
#include "hexstation/metrics.hpp"
#include "hexstation/scaler.hpp"
#include "hexstation/study_area.hpp"

namespace hexstation::evaluation {

// Full hyperparameter tuple of one experiment. JSON schema
// "hexstation-config/1".
struct ExperimentConfig {
  hexgrid::Resolution resolution{9};
  int neighbourhood_k = 0;
  embedding::RegionMethod region_method = embedding::RegionMethod::CC;
  embedding::NeighbourhoodMethod neighbourhood_method =
      embedding::NeighbourhoodMethod::diminishing_squared;
  learning::ScalerKind scaler = learning::ScalerKind::none;
  double imbalance_ratio = 1.0;
  learning::ClassifierKind classifier = learning::ClassifierKind::random_forest;
  learning::ClassBalanceMode class_balance = learning::ClassBalanceMode::normal;
  int iterations = 10;
  std::uint64_t seed = 0;
  double threshold = 0.5;
  learning::ClassifierParams params;

  void validate() const;
  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  // Merges overrides (partial config JSON) over this one.
  ExperimentConfig with_overrides(const nlohmann::json& overrides) const;
};

// One city, ready for experiments: labelled cells plus base region vectors.
struct CityContext {
  study::CityDataset dataset;
  embedding::VectorMap region_vectors;
  std::size_t dim = 0;
};

CityContext build_city_context(const study::CityDataset& ds,
                               const study::BucketMap& buckets,
                               embedding::RegionMethod method,
                               const osm::TagVocabulary* vocab = nullptr);

// Neighbourhood feature vectors for the given cells under one config.
std::vector<std::vector<double>> neighbourhood_features(
    const CityContext& ctx, const ExperimentConfig& cfg,
    const std::vector<hexgrid::CellId>& cells);

// Repeated-iteration experiment: per iteration, sample a training set at the
// imbalance ratio, split it 80/20 stratified, fit scaler and classifier on
// the train part and evaluate on the test part. Reports means and population
// stddevs over the iterations; iteration i uses a seed derived from
// (cfg.seed, i).
MetricsReport run_experiment(const ExperimentConfig& cfg,
                             const CityContext& ctx);

struct SweepRow {
  ExperimentConfig cfg;
  MetricsReport report;
  bool failed = false;
  std::string error;
};

using ContextProvider =
    std::function<const CityContext&(const ExperimentConfig&)>;

// One row per config, in grid order. Failures are recorded per row and the
// sweep continues.
std::vector<SweepRow> sweep(const std::vector<ExperimentConfig>& grid,
                            const ContextProvider& provider);

// Trains on one city (sampling at cfg.imbalance_ratio per iteration) and
// scores every cell of another; metrics averaged over cfg.iterations.
MetricsReport cross_city(const CityContext& train_ctx,
                         const CityContext& eval_ctx,
                         const ExperimentConfig& cfg);

struct TransferMatrix {
  std::vector<std::string> cities;
  std::vector<std::vector<double>> recall;    // [train][eval]
  std::vector<std::vector<double>> accuracy;  // [train][eval]
};

TransferMatrix transfer_matrix(const std::vector<CityContext>& cities,
                               const ExperimentConfig& cfg);

// CSV outputs.
std::string results_csv_header();
std::string results_csv_row(const std::string& city, const SweepRow& row);
std::string serialize_transfer_csv(const TransferMatrix& tm,
                                   const std::vector<std::vector<double>>& m);

}  // namespace hexstation::evaluation
