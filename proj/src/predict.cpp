#include "hexstation/predict.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"
#include "hexstation/rng.hpp"
#include "hexstation/sampling.hpp"

namespace hexstation::predict {

using nlohmann::json;

namespace {
constexpr std::uint64_t kIterationTag = 0x17E2A710;
constexpr std::uint64_t kFitTag = 0xF17C1A55;
}  // namespace

std::map<hexgrid::CellId, double> PredictionMap::filtered() const {
  return filtered_at(threshold);
}

std::map<hexgrid::CellId, double> PredictionMap::filtered_at(double t) const {
  std::map<hexgrid::CellId, double> out;
  for (const auto& [cell, p] : probabilities)
    if (p >= t) out.emplace(cell, p);
  return out;
}

PredictionMap predict_city(const evaluation::CityContext& train_ctx,
                           const evaluation::CityContext& eval_ctx,
                           const evaluation::ExperimentConfig& cfg,
                           int iterations, double threshold) {
  cfg.validate();
  if (iterations < 1) throw input_error("iterations must be >= 1");
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw input_error("threshold must be in [0, 1]");
  if (train_ctx.dim != eval_ctx.dim)
    throw config_error("embedding dimension mismatch between cities");

  // Cells whose base region vectors are entirely unavailable make the map
  // meaningless (mismatched embedding input); zero-vector cells inside a
  // covered city are fine.
  if (eval_ctx.region_vectors.empty()) {
    std::string missing;
    std::size_t shown = 0;
    for (const auto& c : eval_ctx.dataset.cells) {
      if (shown++ == 8) {
        missing += ", ...";
        break;
      }
      if (!missing.empty()) missing += ", ";
      missing += c.to_string();
    }
    throw data_error("no embeddings available for evaluation cells: " + missing);
  }

  const auto eval_cells = eval_ctx.dataset.cells;
  const auto eval_X = evaluation::neighbourhood_features(eval_ctx, cfg, eval_cells);

  std::vector<double> sums(eval_cells.size(), 0.0);
  for (int i = 0; i < iterations; ++i) {
    Rng rng(derive_seed(cfg.seed, kIterationTag, static_cast<std::uint64_t>(i)));
    const auto sample = learning::sample_training_set(
        train_ctx.dataset.labels, cfg.imbalance_ratio, rng);
    const auto X_train =
        evaluation::neighbourhood_features(train_ctx, cfg, sample);
    std::vector<int> y_train;
    y_train.reserve(sample.size());
    for (const auto& c : sample)
      y_train.push_back(train_ctx.dataset.labels.at(c) ? 1 : 0);

    learning::FitConfig fit;
    fit.kind = cfg.classifier;
    fit.balance = cfg.class_balance;
    fit.seed = derive_seed(cfg.seed, kFitTag, static_cast<std::uint64_t>(i));
    fit.params = cfg.params;
    const auto scaler_state = learning::fit_scaler(X_train, cfg.scaler);
    const auto model =
        learning::fit_classifier(X_train, y_train, fit, scaler_state);

    const auto proba = model.predict_proba(eval_X);
    for (std::size_t c = 0; c < proba.size(); ++c) sums[c] += proba[c];
  }

  PredictionMap pm;
  pm.city = eval_ctx.dataset.city;
  pm.resolution = eval_ctx.dataset.resolution;
  pm.iterations_averaged = static_cast<std::size_t>(iterations);
  pm.threshold = threshold;
  for (std::size_t c = 0; c < eval_cells.size(); ++c)
    pm.probabilities[eval_cells[c]] = sums[c] / static_cast<double>(iterations);
  return pm;
}

std::string export_geojson(const PredictionMap& pm,
                           const std::map<hexgrid::CellId, bool>* labels) {
  json features = json::array();
  for (const auto& [cell, p] : pm.filtered()) {
    json ring = json::array();
    const auto boundary = hexgrid::cell_boundary(cell);
    for (const auto& v : boundary)
      ring.push_back(json::array({json::parse(format_fixed(v.lon, 7)),
                                  json::parse(format_fixed(v.lat, 7))}));
    // RFC 7946: linear rings repeat the first position.
    ring.push_back(ring.front());
    json props = {{"cell", cell.to_string()}, {"probability", p}};
    if (labels) {
      const auto it = labels->find(cell);
      if (it != labels->end()) props["station"] = it->second;
    }
    features.push_back({{"type", "Feature"},
                        {"geometry",
                         {{"type", "Polygon"},
                          {"coordinates", json::array({ring})}}},
                        {"properties", props}});
  }
  json doc = {{"type", "FeatureCollection"}, {"features", features}};
  return doc.dump();
}

std::string serialize_prediction_csv(const PredictionMap& pm) {
  std::string out = "cell,probability\n";
  for (const auto& [cell, p] : pm.probabilities) {
    out += cell.to_string();
    out += ',';
    out += format_double(p);
    out += '\n';
  }
  return out;
}

PredictionMap parse_prediction_csv(const std::string& body) {
  PredictionMap pm;
  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line) ||
      split_csv_line(line) != std::vector<std::string>{"cell", "probability"})
    throw parse_error("prediction CSV must start with header cell,probability");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2)
      throw parse_error("prediction CSV line " + std::to_string(line_no) +
                        ": expected cell,probability");
    pm.probabilities[hexgrid::CellId::from_string(fields[0])] =
        std::stod(fields[1]);
  }
  if (!pm.probabilities.empty())
    pm.resolution = pm.probabilities.begin()->first.res();
  return pm;
}

}  // namespace hexstation::predict
