// hexstation: hexagonal micro-region embeddings and bicycle-station
// probability prediction over OpenStreetMap extracts.

#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hexstation/buckets.hpp"
#include "hexstation/csvio.hpp"
#include "hexstation/eda.hpp"
#include "hexstation/embedding.hpp"
#include "hexstation/encoder.hpp"
#include "hexstation/errors.hpp"
#include "hexstation/experiment.hpp"
#include "hexstation/fixture.hpp"
#include "hexstation/overpass.hpp"
#include "hexstation/predict.hpp"
#include "hexstation/rng.hpp"
#include "hexstation/sampling.hpp"
#include "hexstation/store.hpp"
#include "hexstation/study_area.hpp"

namespace {

using namespace hexstation;
using nlohmann::json;

std::uint64_t random_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Loads the experiment config; the --seed flag wins over the file, and a
// missing seed is drawn randomly and echoed so the run can be replayed.
evaluation::ExperimentConfig load_config(const std::string& path,
                                         std::optional<std::uint64_t> seed_flag) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
  auto cfg = evaluation::ExperimentConfig::from_json(doc);
  if (seed_flag) {
    cfg.seed = *seed_flag;
  } else if (!doc.contains("seed")) {
    cfg.seed = random_seed();
    std::cerr << "note: no seed given; using " << cfg.seed
              << " (echoed in outputs)\n";
  }
  return cfg;
}

study::CityDataset require_dataset(const osm::CityStore& store,
                                   hexgrid::Resolution res) {
  const auto labels_path = store.labels_path(res);
  if (!std::filesystem::exists(labels_path))
    throw data_error("missing " + labels_path.string() +
                     "; run `hexstation area` first");
  study::CityDataset ds;
  ds.city = store.city();
  ds.resolution = res;
  study::load_labels_csv(read_file(labels_path.string()), ds);
  ds.stations = store.read_stations();
  return ds;
}

study::BucketMap require_buckets(const osm::CityStore& store,
                                 hexgrid::Resolution res) {
  const auto path = store.buckets_path(res);
  if (!std::filesystem::exists(path))
    throw data_error("missing " + path.string() +
                     "; run `hexstation area` first");
  return study::parse_buckets_jsonl(read_file(path.string()));
}

embedding::VectorMap require_embeddings(const osm::CityStore& store,
                                        const std::string& tag,
                                        hexgrid::Resolution res) {
  const auto path = store.embeddings_path(tag, res);
  if (!std::filesystem::exists(path))
    throw data_error("missing " + path.string() +
                     "; run `hexstation embed` first");
  return embedding::parse_embeddings_csv(read_file(path.string()));
}

evaluation::CityContext load_context(const std::filesystem::path& store_root,
                                     const std::string& city,
                                     const evaluation::ExperimentConfig& cfg,
                                     const std::string& emb_tag) {
  osm::CityStore store(store_root, city);
  evaluation::CityContext ctx;
  ctx.dataset = require_dataset(store, cfg.resolution);
  ctx.region_vectors = require_embeddings(store, emb_tag, cfg.resolution);
  if (ctx.region_vectors.empty())
    throw data_error("embeddings file for '" + city + "' is empty");
  ctx.dim = ctx.region_vectors.begin()->second.size();
  return ctx;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run(CLI::App& app, int argc, char** argv);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hexstation: hexagonal micro-region embeddings and station-probability "
      "maps from OpenStreetMap data"};
  app.require_subcommand(1);
  try {
    return run(app, argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;  // unreachable; run() handles parse errors
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

namespace {

int run(CLI::App& app, int argc, char** argv) {
  std::string store_root, city, in_path, out_path;
  std::string config_path, grid_path, emb_tag, method = "cc";
  std::string fetch_area, endpoint, cache_dir;
  std::string train_city, cities_arg, labels_path, encoder_in, encoder_out;
  std::string population_arg, meta_out;
  int res_value = 9;
  int encode_dim = 0;
  int iterations = 0;
  double threshold = 0.5;
  double timeout_sec = 60.0;
  std::optional<std::uint64_t> seed_flag;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { seed_flag = s; },
        "Seed for all randomness of this command");
  };

  // --- fixture ---------------------------------------------------------
  auto* cmd_fixture = app.add_subcommand(
      "fixture", "Write the bundled synthetic demo cities into a store");
  cmd_fixture->add_option("--out", store_root, "Store directory")->required();
  add_seed(cmd_fixture);

  // --- ingest ----------------------------------------------------------
  auto* cmd_ingest =
      app.add_subcommand("ingest", "Import OSM objects for a city");
  cmd_ingest->add_option("--city", city)->required();
  cmd_ingest->add_option("--store", store_root)->required();
  cmd_ingest->add_option("--in", in_path, "GeoJSON FeatureCollection file");
  cmd_ingest->add_option("--fetch", fetch_area,
                         "Administrative area name to download");
  cmd_ingest->add_option("--endpoint", endpoint, "Download service URL");
  cmd_ingest->add_option("--cache", cache_dir, "Response cache directory");
  cmd_ingest->add_option("--timeout", timeout_sec, "HTTP timeout in seconds");

  // --- stations --------------------------------------------------------
  auto* cmd_stations =
      app.add_subcommand("stations", "Import a station registry for a city");
  cmd_stations->add_option("--city", city)->required();
  cmd_stations->add_option("--store", store_root)->required();
  cmd_stations->add_option("--in", in_path, "CSV lat,lon[,id] or GeoJSON")
      ->required();

  // --- area ------------------------------------------------------------
  auto* cmd_area = app.add_subcommand(
      "area", "Build the labelled study area and per-cell object buckets");
  cmd_area->add_option("--city", city)->required();
  cmd_area->add_option("--store", store_root)->required();
  cmd_area->add_option("--res", res_value, "Grid resolution (9-11)");

  // --- embed -----------------------------------------------------------
  auto* cmd_embed =
      app.add_subcommand("embed", "Compute per-cell region vectors");
  cmd_embed->add_option("--city", city)->required();
  cmd_embed->add_option("--store", store_root)->required();
  cmd_embed->add_option("--res", res_value, "Grid resolution (9-11)");
  cmd_embed->add_option("--method", method, "cc|sa|st|at");
  cmd_embed->add_option("--encode", encode_dim,
                        "Bottleneck dimension for autoencoder reduction");
  cmd_embed->add_option("--encoder", encoder_in,
                        "Apply an existing encoder file");
  cmd_embed->add_option("--encoder-out", encoder_out,
                        "Where to save the trained encoder");
  add_seed(cmd_embed);

  // --- train -----------------------------------------------------------
  auto* cmd_train =
      app.add_subcommand("train", "Fit one model on a city's sampled cells");
  cmd_train->add_option("--config", config_path)->required();
  cmd_train->add_option("--store", store_root)->required();
  cmd_train->add_option("--city", city)->required();
  cmd_train->add_option("--emb", emb_tag, "Embeddings tag (default: method)");
  cmd_train->add_option("--out", out_path)->required();
  add_seed(cmd_train);

  // --- eval ------------------------------------------------------------
  auto* cmd_eval = app.add_subcommand(
      "eval", "Run the repeated-iteration experiment for one config");
  cmd_eval->add_option("--config", config_path)->required();
  cmd_eval->add_option("--store", store_root)->required();
  cmd_eval->add_option("--city", city)->required();
  cmd_eval->add_option("--emb", emb_tag, "Embeddings tag (default: method)");
  cmd_eval->add_option("--out", out_path)->required();
  add_seed(cmd_eval);

  // --- sweep -----------------------------------------------------------
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "Run a grid of configs (JSON array of overrides)");
  cmd_sweep->add_option("--config", config_path, "Base config")->required();
  cmd_sweep->add_option("--grid", grid_path, "JSON array of overrides")
      ->required();
  cmd_sweep->add_option("--store", store_root)->required();
  cmd_sweep->add_option("--city", city)->required();
  cmd_sweep->add_option("--out", out_path)->required();
  add_seed(cmd_sweep);

  // --- transfer --------------------------------------------------------
  auto* cmd_transfer = app.add_subcommand(
      "transfer", "Cross-city prediction matrix over a city list");
  cmd_transfer->add_option("--config", config_path)->required();
  cmd_transfer->add_option("--store", store_root)->required();
  cmd_transfer->add_option("--cities", cities_arg, "Comma-separated city list")
      ->required();
  cmd_transfer->add_option("--emb", emb_tag, "Embeddings tag");
  cmd_transfer->add_option("--out-dir", out_path, "Output directory")
      ->required();
  add_seed(cmd_transfer);

  // --- predict ---------------------------------------------------------
  auto* cmd_predict = app.add_subcommand(
      "predict", "Average per-cell probabilities over repeated trainings");
  cmd_predict->add_option("--config", config_path)->required();
  cmd_predict->add_option("--store", store_root)->required();
  cmd_predict->add_option("--train-city", train_city)->required();
  cmd_predict->add_option("--city", city, "City to score")->required();
  cmd_predict->add_option("--emb", emb_tag, "Embeddings tag");
  cmd_predict->add_option("--iterations", iterations,
                          "Models to average (default: config iterations)");
  cmd_predict->add_option("--threshold", threshold, "Filter threshold");
  cmd_predict->add_option("--out", out_path, "Raw map CSV")->required();
  cmd_predict->add_option("--meta-out", meta_out, "Metadata JSON path");
  add_seed(cmd_predict);

  // --- export ----------------------------------------------------------
  auto* cmd_export =
      app.add_subcommand("export", "Convert a prediction map to GeoJSON");
  cmd_export->add_option("--in", in_path, "Prediction map CSV")->required();
  cmd_export->add_option("--out", out_path, "GeoJSON output")->required();
  cmd_export->add_option("--threshold", threshold, "Filter threshold");
  cmd_export->add_option("--labels", labels_path,
                         "labels CSV to mark existing stations");

  // --- stats -----------------------------------------------------------
  auto* cmd_stats =
      app.add_subcommand("stats", "Descriptive statistics across cities");
  cmd_stats->add_option("--store", store_root)->required();
  cmd_stats->add_option("--cities", cities_arg, "Comma-separated city list")
      ->required();
  cmd_stats->add_option("--res", res_value, "Grid resolution (9-11)");
  cmd_stats->add_option("--population", population_arg,
                        "Per-city population, e.g. a=285000,b=640000");
  cmd_stats->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const hexgrid::Resolution res{res_value};

  if (cmd_fixture->parsed()) {
    fixture::write_fixture_store(store_root, seed_flag.value_or(1));
    std::cout << "wrote fixture_a and fixture_b under " << store_root << '\n';
    return 0;
  }

  if (cmd_ingest->parsed()) {
    osm::CityStore store(store_root, city);
    std::vector<osm::GeoObject> objects;
    std::string source;
    if (!in_path.empty()) {
      std::vector<std::string> warnings;
      objects = osm::parse_geojson(read_file(in_path), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
      source = "file:" + in_path;
    } else if (!fetch_area.empty()) {
      osm::OverpassConfig cfg = osm::overpass_config_from_env();
      if (!endpoint.empty()) cfg.endpoint = endpoint;
      if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
      cfg.timeout_sec = timeout_sec;
      objects = osm::fetch_overpass(fetch_area, cfg);
      source = "overpass:" + cfg.endpoint + "#" + fetch_area;
    } else {
      throw input_error("ingest requires --in or --fetch");
    }
    store.write_objects(objects, source);
    std::cout << "ingested " << objects.size() << " objects for " << city
              << '\n';
    return 0;
  }

  if (cmd_stations->parsed()) {
    osm::CityStore store(store_root, city);
    const auto stations = osm::load_stations(read_file(in_path), city);
    store.write_stations(stations);
    std::cout << "stored " << stations.size() << " stations for " << city
              << '\n';
    return 0;
  }

  if (cmd_area->parsed()) {
    osm::CityStore store(store_root, city);
    const auto stations = store.read_stations();
    const auto objects = store.read_objects();
    const auto ds = study::make_city_dataset(city, stations, res);
    write_file(store.labels_path(res).string(), study::serialize_labels_csv(ds));

    const auto at_vocab = osm::build_all_tag_vocab(objects);
    study::AssignStats stats;
    const auto buckets = study::assign_objects(
        objects, res, study::city_centroid(stations),
        osm::TagVocabulary::selected(), &at_vocab, &stats);
    write_file(store.buckets_path(res).string(),
               study::serialize_buckets_jsonl(buckets));
    std::cout << "study area: " << ds.cells.size() << " cells, "
              << ds.positive_count() << " positive; buckets: "
              << buckets.size() << " cells from " << stats.objects_assigned
              << " objects (" << stats.objects_uncategorized
              << " uncategorized, " << stats.degenerate_geometries
              << " degenerate)\n";
    return 0;
  }

  if (cmd_embed->parsed()) {
    osm::CityStore store(store_root, city);
    const auto buckets = require_buckets(store, res);
    const auto m = embedding::region_method_from_name(method);

    embedding::VectorMap vectors;
    if (m == embedding::RegionMethod::AT) {
      const auto at_vocab = osm::build_all_tag_vocab(store.read_objects());
      vectors = embedding::embed_city(buckets, m, &at_vocab);
    } else if (m == embedding::RegionMethod::ST) {
      vectors = embedding::embed_city(buckets, m, &osm::TagVocabulary::selected());
    } else {
      vectors = embedding::embed_city(buckets, m);
    }

    std::string tag = embedding::region_method_name(m);
    if (encode_dim > 0) {
      embedding::Encoder enc;
      if (!encoder_in.empty()) {
        enc = embedding::parse_encoder(read_file(encoder_in));
      } else {
        std::vector<std::vector<double>> X;
        X.reserve(vectors.size());
        for (const auto& [cell, v] : vectors) X.push_back(v);
        const std::uint64_t seed = seed_flag ? *seed_flag : random_seed();
        if (!seed_flag)
          std::cerr << "note: no seed given; encoder seed " << seed << '\n';
        enc = embedding::train_encoder(X, static_cast<std::size_t>(encode_dim),
                                       seed);
      }
      embedding::VectorMap encoded;
      for (const auto& [cell, v] : vectors) encoded[cell] = enc.encode(v);
      vectors = std::move(encoded);
      tag += std::to_string(encode_dim);
      if (!encoder_out.empty())
        write_file(encoder_out, embedding::serialize_encoder(enc));
    }
    write_file(store.embeddings_path(tag, res).string(),
               embedding::serialize_embeddings_csv(vectors));
    std::cout << "embedded " << vectors.size() << " cells (" << tag << ")\n";
    return 0;
  }

  if (cmd_train->parsed()) {
    const auto cfg = load_config(config_path, seed_flag);
    const std::string tag =
        emb_tag.empty() ? embedding::region_method_name(cfg.region_method)
                        : emb_tag;
    const auto ctx = load_context(store_root, city, cfg, tag);
    Rng rng(derive_seed(cfg.seed, 0x17E2A710, 0));
    const auto sample = learning::sample_training_set(ctx.dataset.labels,
                                                      cfg.imbalance_ratio, rng);
    const auto X = evaluation::neighbourhood_features(ctx, cfg, sample);
    std::vector<int> y;
    for (const auto& c : sample) y.push_back(ctx.dataset.labels.at(c) ? 1 : 0);
    learning::FitConfig fit;
    fit.kind = cfg.classifier;
    fit.balance = cfg.class_balance;
    fit.seed = derive_seed(cfg.seed, 0xF17C1A55, 0);
    fit.params = cfg.params;
    const auto model =
        learning::fit_classifier(X, y, fit, learning::fit_scaler(X, cfg.scaler));
    json doc = model.to_json();
    doc["config"] = cfg.to_json();
    doc["train_city"] = city;
    write_file(out_path, doc.dump(2) + "\n");
    std::cout << "trained " << learning::classifier_kind_name(cfg.classifier)
              << " on " << sample.size() << " cells -> " << out_path << '\n';
    return 0;
  }

  if (cmd_eval->parsed()) {
    const auto cfg = load_config(config_path, seed_flag);
    const std::string tag =
        emb_tag.empty() ? embedding::region_method_name(cfg.region_method)
                        : emb_tag;
    const auto ctx = load_context(store_root, city, cfg, tag);
    evaluation::SweepRow row;
    row.cfg = cfg;
    row.report = evaluation::run_experiment(cfg, ctx);
    write_file(out_path, evaluation::results_csv_header() +
                             evaluation::results_csv_row(city, row));
    std::cout << "f1=" << format_double(row.report.f1)
              << " accuracy=" << format_double(row.report.accuracy)
              << " recall=" << format_double(row.report.recall) << '\n';
    return 0;
  }

  if (cmd_sweep->parsed()) {
    const auto base = load_config(config_path, seed_flag);
    json grid_doc;
    try {
      grid_doc = json::parse(read_file(grid_path));
    } catch (const json::parse_error& e) {
      throw parse_error(grid_path + ": " + e.what());
    }
    if (!grid_doc.is_array())
      throw config_error("grid file must be a JSON array of override objects");
    std::vector<evaluation::ExperimentConfig> grid;
    for (const auto& o : grid_doc) grid.push_back(base.with_overrides(o));

    // Contexts cached per (resolution, embeddings tag).
    std::map<std::string, evaluation::CityContext> cache;
    auto provider = [&](const evaluation::ExperimentConfig& cfg)
        -> const evaluation::CityContext& {
      const std::string tag =
          emb_tag.empty() ? embedding::region_method_name(cfg.region_method)
                          : emb_tag;
      const std::string key = tag + "/r" + std::to_string(cfg.resolution.value);
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, load_context(store_root, city, cfg, tag)).first;
      return it->second;
    };
    const auto rows = evaluation::sweep(grid, provider);
    std::string out = evaluation::results_csv_header();
    for (const auto& row : rows) out += evaluation::results_csv_row(city, row);
    write_file(out_path, out);
    std::cout << "sweep: " << rows.size() << " rows -> " << out_path << '\n';
    return 0;
  }

  if (cmd_transfer->parsed()) {
    const auto cfg = load_config(config_path, seed_flag);
    const std::string tag =
        emb_tag.empty() ? embedding::region_method_name(cfg.region_method)
                        : emb_tag;
    const auto city_names = split_list(cities_arg);
    std::vector<evaluation::CityContext> contexts;
    for (const auto& c : city_names)
      contexts.push_back(load_context(store_root, c, cfg, tag));
    const auto tm = evaluation::transfer_matrix(contexts, cfg);
    const std::filesystem::path dir(out_path);
    write_file((dir / "transfer_recall.csv").string(),
               evaluation::serialize_transfer_csv(tm, tm.recall));
    write_file((dir / "transfer_accuracy.csv").string(),
               evaluation::serialize_transfer_csv(tm, tm.accuracy));
    std::cout << "transfer matrix over " << tm.cities.size() << " cities -> "
              << out_path << '\n';
    return 0;
  }

  if (cmd_predict->parsed()) {
    const auto cfg = load_config(config_path, seed_flag);
    const std::string tag =
        emb_tag.empty() ? embedding::region_method_name(cfg.region_method)
                        : emb_tag;
    const auto train_ctx = load_context(store_root, train_city, cfg, tag);
    const auto eval_ctx = load_context(store_root, city, cfg, tag);
    const int iters = iterations > 0 ? iterations : cfg.iterations;
    const auto pm =
        predict::predict_city(train_ctx, eval_ctx, cfg, iters, threshold);
    write_file(out_path, predict::serialize_prediction_csv(pm));
    if (!meta_out.empty()) {
      json meta = {{"schema", "hexstation-map/1"},
                   {"train_city", train_city},
                   {"city", city},
                   {"iterations", iters},
                   {"threshold", threshold},
                   {"config", cfg.to_json()}};
      write_file(meta_out, meta.dump(2) + "\n");
    }
    std::cout << "predicted " << pm.probabilities.size() << " cells, "
              << pm.filtered().size() << " above threshold "
              << format_double(threshold) << '\n';
    return 0;
  }

  if (cmd_export->parsed()) {
    auto pm = predict::parse_prediction_csv(read_file(in_path));
    pm.threshold = threshold;
    std::map<hexgrid::CellId, bool> labels;
    const bool have_labels = !labels_path.empty();
    if (have_labels) {
      study::CityDataset ds;
      study::load_labels_csv(read_file(labels_path), ds);
      labels = ds.labels;
    }
    write_file(out_path,
               predict::export_geojson(pm, have_labels ? &labels : nullptr));
    std::cout << "exported " << pm.filtered().size() << " cells -> "
              << out_path << '\n';
    return 0;
  }

  if (cmd_stats->parsed()) {
    const auto city_names = split_list(cities_arg);
    std::map<std::string, double> population;
    for (const auto& kv : split_list(population_arg)) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw input_error("--population entries must be city=count");
      population[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    std::vector<study::CityDataset> datasets;
    std::vector<study::BucketMap> buckets;
    datasets.reserve(city_names.size());
    buckets.reserve(city_names.size());
    for (const auto& c : city_names) {
      osm::CityStore store(store_root, c);
      datasets.push_back(require_dataset(store, res));
      buckets.push_back(require_buckets(store, res));
    }
    std::vector<evaluation::CityEdaInput> inputs;
    for (std::size_t i = 0; i < city_names.size(); ++i) {
      evaluation::CityEdaInput in;
      in.city = city_names[i];
      in.dataset = &datasets[i];
      in.buckets = &buckets[i];
      if (const auto it = population.find(city_names[i]);
          it != population.end())
        in.population = it->second;
      inputs.push_back(in);
    }
    write_file(out_path, evaluation::serialize_eda_csv(evaluation::eda_stats(inputs)));
    std::cout << "stats for " << city_names.size() << " cities -> " << out_path
              << '\n';
    return 0;
  }

  return 0;
}

}  // namespace
