#include "hexstation/experiment.hpp"

#include <algorithm>
#include <set>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"
#include "hexstation/rng.hpp"
#include "hexstation/sampling.hpp"

namespace hexstation::evaluation {

using nlohmann::json;

namespace {

constexpr std::uint64_t kIterationTag = 0x17E2A710;
constexpr std::uint64_t kFitTag = 0xF17C1A55;

}  // namespace

void ExperimentConfig::validate() const {
  hexgrid::validate_resolution(resolution);
  if (neighbourhood_k < 0)
    throw config_error("neighbourhood_k must be >= 0");
  if (!(imbalance_ratio >= 1.0))
    throw config_error("imbalance_ratio must be >= 1");
  if (iterations < 1) throw config_error("iterations must be >= 1");
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw config_error("threshold must be in [0, 1]");
  if (classifier == learning::ClassifierKind::plugin &&
      !learning::plugin_classifier_registered(params.plugin_name))
    throw config_error("plugin classifier '" + params.plugin_name +
                       "' is not registered");
}

json ExperimentConfig::to_json() const {
  return json{
      {"schema", "hexstation-config/1"},
      {"resolution", resolution.value},
      {"neighbourhood_k", neighbourhood_k},
      {"region_method", embedding::region_method_name(region_method)},
      {"neighbourhood_method",
       embedding::neighbourhood_method_name(neighbourhood_method)},
      {"scaler", learning::scaler_kind_name(scaler)},
      {"imbalance_ratio", imbalance_ratio},
      {"classifier", learning::classifier_kind_name(classifier)},
      {"class_balance_mode", learning::class_balance_name(class_balance)},
      {"iterations", iterations},
      {"seed", seed},
      {"threshold", threshold},
      {"classifier_params", params.to_json()}};
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (!j.is_object()) throw config_error("config must be a JSON object");
  if (j.contains("schema") && j["schema"] != "hexstation-config/1")
    throw config_error("unsupported config schema: " + j["schema"].dump());
  ExperimentConfig cfg;
  cfg = cfg.with_overrides(j);
  return cfg;
}

ExperimentConfig ExperimentConfig::with_overrides(const json& j) const {
  ExperimentConfig cfg = *this;
  if (j.contains("resolution"))
    cfg.resolution = hexgrid::Resolution{j["resolution"].get<int>()};
  if (j.contains("neighbourhood_k"))
    cfg.neighbourhood_k = j["neighbourhood_k"].get<int>();
  if (j.contains("region_method"))
    cfg.region_method =
        embedding::region_method_from_name(j["region_method"].get<std::string>());
  if (j.contains("neighbourhood_method"))
    cfg.neighbourhood_method = embedding::neighbourhood_method_from_name(
        j["neighbourhood_method"].get<std::string>());
  if (j.contains("scaler"))
    cfg.scaler = learning::scaler_kind_from_name(j["scaler"].get<std::string>());
  if (j.contains("imbalance_ratio"))
    cfg.imbalance_ratio = j["imbalance_ratio"].get<double>();
  if (j.contains("classifier"))
    cfg.classifier =
        learning::classifier_kind_from_name(j["classifier"].get<std::string>());
  if (j.contains("class_balance_mode"))
    cfg.class_balance = learning::class_balance_from_name(
        j["class_balance_mode"].get<std::string>());
  if (j.contains("iterations")) cfg.iterations = j["iterations"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("threshold")) cfg.threshold = j["threshold"].get<double>();
  if (j.contains("classifier_params"))
    cfg.params = learning::ClassifierParams::from_json(j["classifier_params"]);
  cfg.validate();
  return cfg;
}

CityContext build_city_context(const study::CityDataset& ds,
                               const study::BucketMap& buckets,
                               embedding::RegionMethod method,
                               const osm::TagVocabulary* vocab) {
  CityContext ctx;
  ctx.dataset = ds;
  if (method == embedding::RegionMethod::ST && !vocab)
    vocab = &osm::TagVocabulary::selected();
  ctx.region_vectors = embedding::embed_city(buckets, method, vocab);
  ctx.dim = embedding::region_dim(method, vocab);
  return ctx;
}

std::vector<std::vector<double>> neighbourhood_features(
    const CityContext& ctx, const ExperimentConfig& cfg,
    const std::vector<hexgrid::CellId>& cells) {
  std::vector<std::vector<double>> out;
  out.reserve(cells.size());
  for (const auto& cell : cells)
    out.push_back(embedding::neighbourhood_vector(
                      cell, cfg.neighbourhood_k, cfg.neighbourhood_method,
                      ctx.region_vectors, ctx.dim)
                      .values);
  return out;
}

namespace {

struct FeatureTable {
  std::vector<hexgrid::CellId> cells;
  std::vector<std::vector<double>> rows;

  std::vector<std::vector<double>> select(
      const std::vector<hexgrid::CellId>& subset) const {
    std::vector<std::vector<double>> out;
    out.reserve(subset.size());
    for (const auto& c : subset) {
      const auto it = std::lower_bound(cells.begin(), cells.end(), c);
      if (it == cells.end() || *it != c)
        throw input_error("no features for cell " + c.to_string());
      out.push_back(rows[static_cast<std::size_t>(it - cells.begin())]);
    }
    return out;
  }
};

FeatureTable build_features(const CityContext& ctx,
                            const ExperimentConfig& cfg) {
  FeatureTable t;
  t.cells = ctx.dataset.cells;  // sorted
  t.rows = neighbourhood_features(ctx, cfg, t.cells);
  return t;
}

std::vector<int> labels_for(const study::CityDataset& ds,
                            const std::vector<hexgrid::CellId>& cells) {
  std::vector<int> y;
  y.reserve(cells.size());
  for (const auto& c : cells) y.push_back(ds.labels.at(c) ? 1 : 0);
  return y;
}

learning::FitConfig fit_config_for(const ExperimentConfig& cfg,
                                   std::uint64_t iteration_seed) {
  learning::FitConfig fit;
  fit.kind = cfg.classifier;
  fit.balance = cfg.class_balance;
  fit.seed = iteration_seed;
  fit.params = cfg.params;
  return fit;
}

MetricsReport score_cells(const learning::TrainedModel& model,
                          const std::vector<hexgrid::CellId>& cells,
                          const std::vector<std::vector<double>>& X,
                          const study::CityDataset& ds, double threshold,
                          const std::set<hexgrid::CellId>& station_cells) {
  const auto proba = model.predict_proba(X);
  std::map<hexgrid::CellId, bool> pred, truth;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    pred[cells[i]] = proba[i] >= threshold;
    truth[cells[i]] = ds.labels.at(cells[i]);
  }
  return compute_metrics(pred, truth, station_cells);
}

}  // namespace

MetricsReport run_experiment(const ExperimentConfig& cfg,
                             const CityContext& ctx) {
  cfg.validate();
  if (ctx.dataset.resolution != cfg.resolution)
    throw data_error("dataset resolution " +
                     std::to_string(ctx.dataset.resolution.value) +
                     " does not match config resolution " +
                     std::to_string(cfg.resolution.value));
  if (ctx.dataset.positive_count() < 5)
    throw data_error("dataset has fewer than 5 positive cells");

  const FeatureTable features = build_features(ctx, cfg);
  const auto positives = ctx.dataset.positive_cells();
  const std::set<hexgrid::CellId> station_cells(positives.begin(),
                                                positives.end());

  std::vector<MetricsReport> reports;
  reports.reserve(static_cast<std::size_t>(cfg.iterations));
  for (int i = 0; i < cfg.iterations; ++i) {
    const std::uint64_t iter_seed =
        derive_seed(cfg.seed, kIterationTag, static_cast<std::uint64_t>(i));
    Rng rng(iter_seed);
    const auto sample = learning::sample_training_set(
        ctx.dataset.labels, cfg.imbalance_ratio, rng);
    const auto split =
        learning::stratified_split(sample, ctx.dataset.labels, 0.8, rng);

    const auto X_train = features.select(split.train);
    const auto y_train = labels_for(ctx.dataset, split.train);
    const auto scaler_state = learning::fit_scaler(X_train, cfg.scaler);
    const auto model = learning::fit_classifier(
        X_train, y_train,
        fit_config_for(cfg, derive_seed(cfg.seed, kFitTag,
                                        static_cast<std::uint64_t>(i))),
        scaler_state);

    reports.push_back(score_cells(model, split.test,
                                  features.select(split.test), ctx.dataset,
                                  cfg.threshold, station_cells));
  }
  return aggregate_reports(reports);
}

std::vector<SweepRow> sweep(const std::vector<ExperimentConfig>& grid,
                            const ContextProvider& provider) {
  if (grid.empty()) throw input_error("sweep grid is empty");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& cfg : grid) {
    SweepRow row;
    row.cfg = cfg;
    try {
      row.report = run_experiment(cfg, provider(cfg));
    } catch (const std::exception& e) {
      row.failed = true;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

MetricsReport cross_city(const CityContext& train_ctx,
                         const CityContext& eval_ctx,
                         const ExperimentConfig& cfg) {
  cfg.validate();
  if (train_ctx.dim != eval_ctx.dim)
    throw config_error("embedding dimension mismatch between cities: " +
                       std::to_string(train_ctx.dim) + " vs " +
                       std::to_string(eval_ctx.dim));
  if (train_ctx.dataset.resolution != eval_ctx.dataset.resolution)
    throw config_error("cross-city prediction requires one resolution");

  const FeatureTable train_features = build_features(train_ctx, cfg);
  const FeatureTable eval_features = build_features(eval_ctx, cfg);
  const auto eval_y = labels_for(eval_ctx.dataset, eval_features.cells);
  const auto eval_positives = eval_ctx.dataset.positive_cells();
  const std::set<hexgrid::CellId> station_cells(eval_positives.begin(),
                                                eval_positives.end());

  std::vector<MetricsReport> reports;
  reports.reserve(static_cast<std::size_t>(cfg.iterations));
  for (int i = 0; i < cfg.iterations; ++i) {
    Rng rng(derive_seed(cfg.seed, kIterationTag, static_cast<std::uint64_t>(i)));
    const auto sample = learning::sample_training_set(
        train_ctx.dataset.labels, cfg.imbalance_ratio, rng);
    const auto X_train = train_features.select(sample);
    const auto y_train = labels_for(train_ctx.dataset, sample);
    const auto scaler_state = learning::fit_scaler(X_train, cfg.scaler);
    const auto model = learning::fit_classifier(
        X_train, y_train,
        fit_config_for(cfg, derive_seed(cfg.seed, kFitTag,
                                        static_cast<std::uint64_t>(i))),
        scaler_state);
    reports.push_back(score_cells(model, eval_features.cells,
                                  eval_features.rows, eval_ctx.dataset,
                                  cfg.threshold, station_cells));
  }
  return aggregate_reports(reports);
}

TransferMatrix transfer_matrix(const std::vector<CityContext>& cities,
                               const ExperimentConfig& cfg) {
  if (cities.size() < 2)
    throw input_error("transfer matrix needs at least 2 cities");
  TransferMatrix tm;
  for (const auto& c : cities) tm.cities.push_back(c.dataset.city);
  const std::size_t n = cities.size();
  tm.recall.assign(n, std::vector<double>(n, 0.0));
  tm.accuracy.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const MetricsReport r = cross_city(cities[i], cities[j], cfg);
      tm.recall[i][j] = r.recall;
      tm.accuracy[i][j] = r.accuracy;
    }
  return tm;
}

std::string results_csv_header() {
  return "city,resolution,neighbourhood_k,region_method,neighbourhood_method,"
         "scaler,imbalance_ratio,classifier,class_balance_mode,iterations,"
         "seed,threshold,accuracy_mean,accuracy_std,balanced_accuracy_mean,"
         "balanced_accuracy_std,precision_mean,precision_std,recall_mean,"
         "recall_std,f1_mean,f1_std,custom_mean,custom_std,flags,error\n";
}

std::string results_csv_row(const std::string& city, const SweepRow& row) {
  const auto& cfg = row.cfg;
  const auto& r = row.report;
  std::string out;
  out += csv_escape(city);
  out += ',' + std::to_string(cfg.resolution.value);
  out += ',' + std::to_string(cfg.neighbourhood_k);
  out += ',' + embedding::region_method_name(cfg.region_method);
  out += ',' + embedding::neighbourhood_method_name(cfg.neighbourhood_method);
  out += ',' + learning::scaler_kind_name(cfg.scaler);
  out += ',' + format_double(cfg.imbalance_ratio);
  out += ',' + learning::classifier_kind_name(cfg.classifier);
  out += ',' + learning::class_balance_name(cfg.class_balance);
  out += ',' + std::to_string(cfg.iterations);
  out += ',' + std::to_string(cfg.seed);
  out += ',' + format_double(cfg.threshold);
  if (row.failed) {
    for (int i = 0; i < 12; ++i) out += ",nan";
    out += ",,";
    out += csv_escape(row.error);
  } else {
    out += ',' + format_double(r.accuracy) + ',' + format_double(r.accuracy_std);
    out += ',' + format_double(r.balanced_accuracy) + ',' +
           format_double(r.balanced_accuracy_std);
    out += ',' + format_double(r.precision) + ',' + format_double(r.precision_std);
    out += ',' + format_double(r.recall) + ',' + format_double(r.recall_std);
    out += ',' + format_double(r.f1) + ',' + format_double(r.f1_std);
    out += ',' + format_double(r.custom) + ',' + format_double(r.custom_std);
    out += ',' + csv_escape(r.flags()) + ',';
  }
  out += '\n';
  return out;
}

std::string serialize_transfer_csv(const TransferMatrix& tm,
                                   const std::vector<std::vector<double>>& m) {
  std::string out = "city";
  for (const auto& c : tm.cities) out += ',' + csv_escape(c);
  out += '\n';
  for (std::size_t i = 0; i < tm.cities.size(); ++i) {
    out += csv_escape(tm.cities[i]);
    for (std::size_t j = 0; j < tm.cities.size(); ++j)
      out += ',' + format_double(m[i][j]);
    out += '\n';
  }
  return out;
}

}  // namespace hexstation::evaluation
