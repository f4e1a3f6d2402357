#include "hexstation/study_area.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"

namespace hexstation::study {

std::vector<hexgrid::CellId> CityDataset::positive_cells() const {
  std::vector<hexgrid::CellId> out;
  for (const auto& [cell, positive] : labels)
    if (positive) out.push_back(cell);
  return out;
}

std::size_t CityDataset::positive_count() const {
  std::size_t n = 0;
  for (const auto& [cell, positive] : labels) n += positive ? 1 : 0;
  return n;
}

std::vector<hexgrid::CellId> build_study_area(
    const std::vector<osm::StationRecord>& stations, hexgrid::Resolution r) {
  if (stations.empty())
    throw input_error("study area requires at least one station");
  std::set<hexgrid::CellId> cells;
  for (const auto& s : stations) {
    for (const auto& c :
         hexgrid::cells_within_radius(s.position, kStationBufferM, r))
      cells.insert(c);
  }
  return std::vector<hexgrid::CellId>(cells.begin(), cells.end());
}

std::map<hexgrid::CellId, bool> label_cells(
    const std::vector<hexgrid::CellId>& cells,
    const std::vector<osm::StationRecord>& stations) {
  std::map<hexgrid::CellId, bool> labels;
  for (const auto& c : cells) labels[c] = false;
  if (cells.empty()) return labels;
  const hexgrid::Resolution r = cells.front().res();
  for (const auto& s : stations) {
    const auto cell = hexgrid::cell_of(s.position, r);
    if (const auto it = labels.find(cell); it != labels.end())
      it->second = true;
  }
  return labels;
}

CityDataset make_city_dataset(const std::string& city,
                              const std::vector<osm::StationRecord>& stations,
                              hexgrid::Resolution r) {
  CityDataset ds;
  ds.city = city;
  ds.resolution = r;
  ds.stations = stations;
  ds.cells = build_study_area(stations, r);
  ds.labels = label_cells(ds.cells, stations);
  return ds;
}

LatLng city_centroid(const std::vector<osm::StationRecord>& stations) {
  if (stations.empty()) throw input_error("no stations to take a centroid of");
  double lat = 0.0, lon = 0.0;
  for (const auto& s : stations) {
    lat += s.position.lat;
    lon += s.position.lon;
  }
  const auto n = static_cast<double>(stations.size());
  return normalized_latlng(lat / n, lon / n);
}

std::string serialize_labels_csv(const CityDataset& ds) {
  std::string out = "cell,label\n";
  for (const auto& cell : ds.cells) {
    out += cell.to_string();
    out += ds.labels.at(cell) ? ",1\n" : ",0\n";
  }
  return out;
}

void load_labels_csv(const std::string& body, CityDataset& ds) {
  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) !=
                                     std::vector<std::string>{"cell", "label"})
    throw parse_error("labels CSV must start with header 'cell,label'");
  ds.cells.clear();
  ds.labels.clear();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2)
      throw parse_error("labels CSV line " + std::to_string(line_no) +
                        ": expected cell,label");
    const auto cell = hexgrid::CellId::from_string(fields[0]);
    ds.cells.push_back(cell);
    ds.labels[cell] = fields[1] == "1";
  }
  std::sort(ds.cells.begin(), ds.cells.end());
  if (!ds.cells.empty()) ds.resolution = ds.cells.front().res();
}

}  // namespace hexstation::study
