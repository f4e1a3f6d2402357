#include "hexstation/eda.hpp"

#include <algorithm>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"

namespace hexstation::evaluation {

EdaReport eda_stats(const std::vector<CityEdaInput>& cities) {
  if (cities.empty()) throw input_error("eda_stats: no cities given");
  EdaReport report;
  for (const auto& in : cities) {
    if (!in.dataset || !in.buckets)
      throw input_error("eda_stats: city '" + in.city +
                        "' is missing dataset or buckets");
    EdaReport::CityRow row;
    row.city = in.city;
    row.stations = in.dataset->stations.size();
    row.cells = in.dataset->cells.size();
    row.population = in.population;
    if (in.population) {
      if (row.stations == 0)
        throw data_error("eda_stats: population given but city '" + in.city +
                         "' has zero stations");
      row.population_per_station =
          *in.population / static_cast<double>(row.stations);
    }
    // Totals over the selected study cells only.
    for (const auto& cell : in.dataset->cells) {
      const auto it = in.buckets->find(cell);
      if (it == in.buckets->end()) continue;
      for (const auto& [cat, count] : it->second.counts)
        row.totals[static_cast<std::size_t>(cat)] += count;
    }
    if (row.cells > 0)
      for (std::size_t c = 0; c < osm::kCategoryCount; ++c)
        row.per_cell_means[c] = row.totals[c] / static_cast<double>(row.cells);
    report.rows.push_back(std::move(row));
  }

  // Min-max per category across cities.
  report.normalized.assign(report.rows.size(), {});
  for (std::size_t c = 0; c < osm::kCategoryCount; ++c) {
    double lo = report.rows.front().per_cell_means[c];
    double hi = lo;
    for (const auto& row : report.rows) {
      lo = std::min(lo, row.per_cell_means[c]);
      hi = std::max(hi, row.per_cell_means[c]);
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < report.rows.size(); ++i)
      report.normalized[i][c] =
          span > 0.0 ? (report.rows[i].per_cell_means[c] - lo) / span : 0.0;
  }
  return report;
}

std::string serialize_eda_csv(const EdaReport& report) {
  std::string out = "city,stations,cells,population,population_per_station";
  for (int c = 0; c < osm::kCategoryCount; ++c) {
    out += ",total_";
    out += osm::category_name(static_cast<osm::Category>(c));
  }
  for (int c = 0; c < osm::kCategoryCount; ++c) {
    out += ",mean_";
    out += osm::category_name(static_cast<osm::Category>(c));
  }
  for (int c = 0; c < osm::kCategoryCount; ++c) {
    out += ",norm_";
    out += osm::category_name(static_cast<osm::Category>(c));
  }
  out += '\n';
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    out += csv_escape(row.city);
    out += ',' + std::to_string(row.stations);
    out += ',' + std::to_string(row.cells);
    out += ',';
    if (row.population) out += format_double(*row.population);
    out += ',';
    if (row.population_per_station)
      out += format_double(*row.population_per_station);
    for (const double v : row.totals) out += ',' + format_double(v);
    for (const double v : row.per_cell_means) out += ',' + format_double(v);
    for (const double v : report.normalized[i]) out += ',' + format_double(v);
    out += '\n';
  }
  return out;
}

}  // namespace hexstation::evaluation
