#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hexstation/buckets.hpp"
#include "hexstation/study_area.hpp"

namespace hexstation::evaluation {

struct CityEdaInput {
  std::string city;
  const study::CityDataset* dataset = nullptr;
  const study::BucketMap* buckets = nullptr;
  std::optional<double> population;
};

// Descriptive statistics: population per station, per-category object totals
// over the study cells and per-cell means, plus the per-category min-max
// normalisation of the means across cities (constant columns normalise to 0).
struct EdaReport {
  struct CityRow {
    std::string city;
    std::size_t stations = 0;
    std::size_t cells = 0;
    std::optional<double> population;
    std::optional<double> population_per_station;
    std::array<double, osm::kCategoryCount> totals{};
    std::array<double, osm::kCategoryCount> per_cell_means{};
  };
  std::vector<CityRow> rows;
  // normalized[i] aligns with rows[i].
  std::vector<std::array<double, osm::kCategoryCount>> normalized;
};

EdaReport eda_stats(const std::vector<CityEdaInput>& cities);

std::string serialize_eda_csv(const EdaReport& report);

}  // namespace hexstation::evaluation
