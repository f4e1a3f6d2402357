#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hexstation/eda.hpp"
#include "hexstation/errors.hpp"
#include "hexstation/metrics.hpp"
#include "support/mini_city.hpp"

using namespace hexstation;
using namespace hexstation::evaluation;

namespace {

const LatLng kCenter{51.11, 17.03};

struct Confusion {
  std::map<hexgrid::CellId, bool> pred, truth;
  std::set<hexgrid::CellId> stations;
};

Confusion random_confusion(Rng& rng, int radius = 4) {
  Confusion c;
  const auto base = hexgrid::cell_of(kCenter, hexgrid::Resolution{9});
  for (const auto& cell : hexgrid::disk(base, radius)) {
    const bool truth = rng.next_below(4) == 0;
    c.truth[cell] = truth;
    c.pred[cell] = rng.next_below(3) == 0;
    if (truth) c.stations.insert(cell);
  }
  return c;
}

// Single-pass confusion-matrix oracle.
void naive_counts(const Confusion& c, double& tp, double& tn, double& fp,
                  double& fn) {
  tp = tn = fp = fn = 0;
  for (const auto& [cell, p] : c.pred) {
    const bool t = c.truth.at(cell);
    if (p && t)
      ++tp;
    else if (!p && !t)
      ++tn;
    else if (p && !t)
      ++fp;
    else
      ++fn;
  }
}

}  // namespace

TEST_CASE("compute_metrics: perfect predictions score 1 everywhere") {
  Rng rng(1);
  auto c = random_confusion(rng);
  c.pred = c.truth;
  const auto r = compute_metrics(c.pred, c.truth, c.stations);
  CHECK(r.accuracy == 1.0);
  CHECK(r.balanced_accuracy == 1.0);
  CHECK(r.precision == 1.0);
  CHECK(r.recall == 1.0);
  CHECK(r.f1 == 1.0);
  CHECK(r.custom == 1.0);
}

TEST_CASE("compute_metrics: the distance-discounted false positive scores") {
  const auto base = hexgrid::cell_of(kCenter, hexgrid::Resolution{9});
  const auto r1 = hexgrid::ring(base, 1);
  const auto r3 = hexgrid::ring(base, 3);

  SUBCASE("adjacent to a station cell: 1/(1+1) = 0.5") {
    Confusion c;
    c.truth[base] = true;
    c.pred[base] = true;
    c.truth[r1[0]] = false;
    c.pred[r1[0]] = true;  // FP at grid distance 1
    c.stations.insert(base);
    const auto r = compute_metrics(c.pred, c.truth, c.stations);
    CHECK(r.custom == doctest::Approx((1.0 + 0.5) / 2.0));
    CHECK(r.accuracy == doctest::Approx(0.5));
  }

  SUBCASE("at grid distance 3: 1/(3+1) = 0.25") {
    Confusion c;
    c.truth[base] = true;
    c.pred[base] = true;
    c.truth[r3[0]] = false;
    c.pred[r3[0]] = true;
    c.stations.insert(base);
    const auto r = compute_metrics(c.pred, c.truth, c.stations);
    CHECK(r.custom == doctest::Approx((1.0 + 0.25) / 2.0));
  }
}

TEST_CASE("custom metric dominates accuracy; equal without false positives") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_confusion(rng, 3);
    const auto r = compute_metrics(c.pred, c.truth, c.stations);
    CHECK(r.custom >= r.accuracy - 1e-12);

    auto no_fp = c;
    for (auto& [cell, p] : no_fp.pred)
      if (p && !no_fp.truth.at(cell)) p = false;
    const auto r2 = compute_metrics(no_fp.pred, no_fp.truth, no_fp.stations);
    CHECK(r2.custom == doctest::Approx(r2.accuracy).epsilon(1e-12));
  }
}

TEST_CASE("compute_metrics matches a naive confusion oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_confusion(rng, 3);
    double tp, tn, fp, fn;
    naive_counts(c, tp, tn, fp, fn);
    const double n = tp + tn + fp + fn;
    const auto r = compute_metrics(c.pred, c.truth, c.stations);
    CHECK(r.accuracy == doctest::Approx((tp + tn) / n).epsilon(1e-12));
    if (tp + fp > 0)
      CHECK(r.precision == doctest::Approx(tp / (tp + fp)).epsilon(1e-12));
    if (tp + fn > 0)
      CHECK(r.recall == doctest::Approx(tp / (tp + fn)).epsilon(1e-12));
    if (tp + fn > 0 && tn + fp > 0) {
      const double bal = (tp / (tp + fn) + tn / (tn + fp)) / 2.0;
      CHECK(r.balanced_accuracy == doctest::Approx(bal).epsilon(1e-12));
      // Equal class counts make balanced accuracy equal accuracy.
    }
    const double pr = (tp + fp) > 0 ? tp / (tp + fp) : 0.0;
    const double rc = (tp + fn) > 0 ? tp / (tp + fn) : 0.0;
    const double f1 = (pr + rc) > 0 ? 2 * pr * rc / (pr + rc) : 0.0;
    CHECK(r.f1 == doctest::Approx(f1).epsilon(1e-12));
  }
}

TEST_CASE("balanced accuracy equals accuracy on class-balanced sets") {
  const auto base = hexgrid::cell_of(kCenter, hexgrid::Resolution{9});
  const auto cells = hexgrid::disk(base, 2);  // 19 cells; use 18
  Confusion c;
  Rng rng(4);
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    c.truth[cells[i]] = i % 2 == 0;
    c.pred[cells[i]] = rng.next_below(2) == 0;
    if (i % 2 == 0) c.stations.insert(cells[i]);
  }
  const auto r = compute_metrics(c.pred, c.truth, c.stations);
  CHECK(r.balanced_accuracy == doctest::Approx(r.accuracy).epsilon(1e-12));
}

TEST_CASE("degenerate sets flag undefined metrics") {
  CHECK_THROWS_AS(compute_metrics({}, {}, {}), input_error);

  const auto base = hexgrid::cell_of(kCenter, hexgrid::Resolution{9});
  std::map<hexgrid::CellId, bool> pred{{base, false}}, truth{{base, false}};
  const auto r = compute_metrics(pred, truth, {});
  CHECK(r.recall_undefined);
  CHECK(std::isnan(r.recall));
  CHECK(r.flags().find("recall_undefined") != std::string::npos);
  CHECK(r.f1 == 0.0);
}

TEST_CASE("run_experiment: a separable mini city reaches f1 = 1") {
  const auto ctx = mini::make_context("mini", kCenter, 12, true, 5);
  auto cfg = mini::basic_config();
  const auto r = run_experiment(cfg, ctx);
  CHECK(r.f1 == doctest::Approx(1.0));
  CHECK(r.accuracy == doctest::Approx(1.0));
  CHECK(r.iterations == 1);
}

TEST_CASE("run_experiment is deterministic") {
  const auto ctx = mini::make_context("mini", kCenter, 10, false, 6);
  auto cfg = mini::basic_config();
  cfg.iterations = 4;
  cfg.imbalance_ratio = 2.0;
  const auto a = run_experiment(cfg, ctx);
  const auto b = run_experiment(cfg, ctx);
  CHECK(a.f1 == b.f1);
  CHECK(a.accuracy == b.accuracy);
  CHECK(a.custom == b.custom);
  CHECK(a.recall_std == b.recall_std);
}

TEST_CASE("run_experiment guards its dataset") {
  const auto ctx = mini::make_context("mini", kCenter, 3, true, 7);
  auto cfg = mini::basic_config();
  CHECK_THROWS_AS(run_experiment(cfg, ctx), data_error);  // < 5 positives

  const auto ok = mini::make_context("mini", kCenter, 8, true, 7);
  auto wrong_res = cfg;
  wrong_res.resolution = hexgrid::Resolution{10};
  CHECK_THROWS_AS(run_experiment(wrong_res, ok), data_error);
}

TEST_CASE("sweep: one row per config, failures recorded") {
  const auto ctx = mini::make_context("mini", kCenter, 10, true, 8);
  auto base = mini::basic_config();
  std::vector<ExperimentConfig> grid;
  grid.push_back(base);
  auto bad = base;
  bad.imbalance_ratio = 50.0;  // not enough negatives
  grid.push_back(bad);
  grid.push_back(base);

  const auto rows = sweep(grid, [&](const ExperimentConfig&) -> const CityContext& {
    return ctx;
  });
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].failed);
  CHECK(rows[1].failed);
  CHECK(rows[1].error.find("negative") != std::string::npos);
  CHECK_FALSE(rows[2].failed);
  CHECK(rows[0].report.f1 == rows[2].report.f1);

  CHECK_THROWS_AS(sweep({}, [&](const ExperimentConfig&) -> const CityContext& {
                    return ctx;
                  }),
                  input_error);
}

TEST_CASE("sweep rows carry the full config echo") {
  const auto ctx = mini::make_context("mini", kCenter, 10, true, 9);
  auto cfg = mini::basic_config();
  cfg.imbalance_ratio = 2.5;
  const auto rows =
      sweep({cfg}, [&](const ExperimentConfig&) -> const CityContext& {
        return ctx;
      });
  const std::string row = results_csv_row("mini", rows[0]);
  CHECK(row.find("mini,9,0,cc,concatenate,none,2.5,random_forest,normal,1,42,"
                 "0.5,") == 0);
  const std::string header = results_csv_header();
  CHECK(std::count(header.begin(), header.end(), ',') ==
        std::count(row.begin(), row.end(), ','));
}

TEST_CASE("cross_city: self-transfer beats a positive-rate-matched baseline") {
  const auto ctx = mini::make_context("mini", kCenter, 12, true, 10);
  auto cfg = mini::basic_config();
  cfg.iterations = 5;
  const auto r = cross_city(ctx, ctx, cfg);
  // Expected recall of a uniform random predictor marking the same number of
  // cells positive equals the predicted-positive rate, well below 0.5 here.
  CHECK(r.recall > 0.5);
  CHECK(r.accuracy > 0.8);
}

TEST_CASE("cross_city: degenerate evaluation city flags recall") {
  const auto train = mini::make_context("a", kCenter, 12, true, 11);
  auto eval = mini::make_context("b", LatLng{52.23, 21.01}, 0, true, 11);
  // No positives at all in the evaluation city.
  auto cfg = mini::basic_config();
  cfg.iterations = 2;
  const auto r = cross_city(train, eval, cfg);
  CHECK(r.recall_undefined);
  CHECK(std::isnan(r.recall));
}

TEST_CASE("cross_city: embedding dimension mismatch is a config error") {
  const auto train = mini::make_context("a", kCenter, 12, true, 12);
  auto eval = mini::make_context("b", LatLng{52.23, 21.01}, 10, true, 12);
  eval.dim = 3;
  for (auto& [cell, v] : eval.region_vectors) v.push_back(0.0);
  auto cfg = mini::basic_config();
  CHECK_THROWS_AS(cross_city(train, eval, cfg), config_error);
}

TEST_CASE("transfer_matrix: 2x2 with self-transfer diagonal") {
  const auto a = mini::make_context("a", kCenter, 12, true, 13);
  const auto b = mini::make_context("b", LatLng{52.23, 21.01}, 10, true, 14);
  auto cfg = mini::basic_config();
  cfg.iterations = 3;
  const auto tm = transfer_matrix({a, b}, cfg);
  REQUIRE(tm.cities == std::vector<std::string>{"a", "b"});
  REQUIRE(tm.recall.size() == 2);
  CHECK(tm.recall[0][0] == cross_city(a, a, cfg).recall);
  CHECK(tm.accuracy[1][0] == cross_city(b, a, cfg).accuracy);

  const std::string csv = serialize_transfer_csv(tm, tm.recall);
  CHECK(csv.rfind("city,a,b\n", 0) == 0);
  CHECK_THROWS_AS(transfer_matrix({a}, cfg), input_error);
}

TEST_CASE("eda_stats") {
  // Hand-built city: 337 stations, population 285000.
  const auto a = mini::make_context("ostrava-like", kCenter, 12, true, 15);
  study::CityDataset ds_a = a.dataset;
  ds_a.stations.resize(337, ds_a.stations.front());

  study::BucketMap buckets_a;
  for (const auto& cell : ds_a.cells) {
    study::CellBucket b;
    b.cell = cell;
    b.counts[osm::Category::shops] = 2.0;
    b.counts[osm::Category::sustenance] = 1.0;
    buckets_a[cell] = b;
  }

  const auto b_ctx = mini::make_context("other", LatLng{52.23, 21.01}, 10, true, 16);
  study::CityDataset ds_b = b_ctx.dataset;
  study::BucketMap buckets_b;
  for (const auto& cell : ds_b.cells) {
    study::CellBucket b;
    b.cell = cell;
    b.counts[osm::Category::shops] = 6.0;
    buckets_b[cell] = b;
  }

  CityEdaInput in_a{"ostrava-like", &ds_a, &buckets_a, 285000.0};
  CityEdaInput in_b{"other", &ds_b, &buckets_b, std::nullopt};

  SUBCASE("population per station") {
    const auto report = eda_stats({in_a, in_b});
    REQUIRE(report.rows.size() == 2);
    CHECK(*report.rows[0].population_per_station ==
          doctest::Approx(845.7).epsilon(0.001));
    CHECK_FALSE(report.rows[1].population_per_station.has_value());
  }

  SUBCASE("min-max normalisation spans [0,1] across cities") {
    const auto report = eda_stats({in_a, in_b});
    const auto shops = static_cast<std::size_t>(osm::Category::shops);
    const auto sust = static_cast<std::size_t>(osm::Category::sustenance);
    CHECK(report.normalized[0][shops] == 0.0);
    CHECK(report.normalized[1][shops] == 1.0);
    CHECK(report.normalized[0][sust] == 1.0);
    CHECK(report.normalized[1][sust] == 0.0);
  }

  SUBCASE("a single city normalises to zeros") {
    const auto report = eda_stats({in_a});
    for (const double v : report.normalized[0]) CHECK(v == 0.0);
  }

  SUBCASE("zero stations with population is an error") {
    study::CityDataset empty = ds_a;
    empty.stations.clear();
    CityEdaInput bad{"bad", &empty, &buckets_a, 1000.0};
    CHECK_THROWS_AS(eda_stats({bad}), data_error);
  }

  SUBCASE("csv export") {
    const auto csv = serialize_eda_csv(eda_stats({in_a, in_b}));
    CHECK(csv.find("ostrava-like,337,") != std::string::npos);
    CHECK(csv.rfind("city,stations,cells,population,population_per_station",
                    0) == 0);
  }
}

TEST_CASE("config JSON round-trip and validation") {
  ExperimentConfig cfg = mini::basic_config();
  cfg.neighbourhood_k = 5;
  cfg.imbalance_ratio = 2.5;
  cfg.classifier = learning::ClassifierKind::knn;
  const auto j = cfg.to_json();
  CHECK(j.at("schema") == "hexstation-config/1");
  const auto back = ExperimentConfig::from_json(j);
  CHECK(back.neighbourhood_k == 5);
  CHECK(back.imbalance_ratio == 2.5);
  CHECK(back.classifier == learning::ClassifierKind::knn);

  auto bad = j;
  bad["scaler"] = "bogus";
  CHECK_THROWS_AS(ExperimentConfig::from_json(bad), config_error);
  auto bad2 = j;
  bad2["imbalance_ratio"] = 0.2;
  CHECK_THROWS_AS(ExperimentConfig::from_json(bad2), config_error);
}
