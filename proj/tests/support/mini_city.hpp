#pragma once

// Small synthetic experiment contexts for evaluation tests.

#include "hexstation/buckets.hpp"
#include "hexstation/experiment.hpp"
#include "hexstation/fixture.hpp"
#include "hexstation/rng.hpp"
#include "hexstation/study_area.hpp"

namespace mini {

using namespace hexstation;

// A disk of cells with hand-assigned labels and 2-dimensional region vectors.
// When separable, positives are [8..12, 0..1] and negatives [0..1, 8..12].
inline evaluation::CityContext make_context(const std::string& name,
                                            const LatLng& center,
                                            std::size_t positives,
                                            bool separable,
                                            std::uint64_t seed) {
  evaluation::CityContext ctx;
  ctx.dataset.city = name;
  ctx.dataset.resolution = hexgrid::Resolution{9};
  const auto base = hexgrid::cell_of(center, hexgrid::Resolution{9});
  ctx.dataset.cells = hexgrid::disk(base, 5);  // 91 cells

  Rng rng(seed);
  std::size_t i = 0;
  for (const auto& cell : ctx.dataset.cells) {
    const bool positive = i++ < positives;
    ctx.dataset.labels[cell] = positive;
    if (positive) {
      osm::StationRecord s;
      s.city = name;
      s.position = hexgrid::centroid(cell);
      ctx.dataset.stations.push_back(s);
    }
    double a = rng.uniform(0.0, 1.0);
    double b = rng.uniform(0.0, 1.0);
    if (separable) {
      if (positive)
        a += 8.0 + rng.uniform(0.0, 4.0);
      else
        b += 8.0 + rng.uniform(0.0, 4.0);
    } else {
      a += rng.uniform(0.0, 10.0);
      b += rng.uniform(0.0, 10.0);
    }
    ctx.region_vectors[cell] = {a, b};
  }
  ctx.dim = 2;
  return ctx;
}

inline evaluation::ExperimentConfig basic_config() {
  evaluation::ExperimentConfig cfg;
  cfg.resolution = hexgrid::Resolution{9};
  cfg.neighbourhood_k = 0;
  cfg.region_method = embedding::RegionMethod::CC;
  cfg.neighbourhood_method = embedding::NeighbourhoodMethod::concatenate;
  cfg.scaler = learning::ScalerKind::none;
  cfg.imbalance_ratio = 1.0;
  cfg.classifier = learning::ClassifierKind::random_forest;
  cfg.iterations = 1;
  cfg.seed = 42;
  return cfg;
}

// The bundled fixture city as a ready experiment context.
inline evaluation::CityContext fixture_context(
    const fixture::FixtureSpec& spec,
    embedding::RegionMethod method = embedding::RegionMethod::CC) {
  const auto fc = fixture::make_fixture_city(spec);
  const auto ds =
      study::make_city_dataset(fc.city, fc.stations, hexgrid::Resolution{9});
  const auto buckets = study::assign_objects(
      fc.objects, hexgrid::Resolution{9}, study::city_centroid(fc.stations),
      osm::TagVocabulary::selected(), nullptr, nullptr);
  return evaluation::build_city_context(ds, buckets, method);
}

}  // namespace mini
