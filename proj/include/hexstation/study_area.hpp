#pragma once

#include <map>
#include <string>
#include <vector>

#include "hexstation/hexgrid.hpp"
#include "hexstation/stations.hpp"

namespace hexstation::study {

// The labelled cell universe of one city.
struct CityDataset {
  std::string city;
  hexgrid::Resolution resolution;
  std::vector<hexgrid::CellId> cells;  // sorted
  std::map<hexgrid::CellId, bool> labels;
  std::vector<osm::StationRecord> stations;

  std::vector<hexgrid::CellId> positive_cells() const;
  std::size_t positive_count() const;
};

inline constexpr double kStationBufferM = 2000.0;

// Union over the stations of all cells whose centroid lies within 2 km.
std::vector<hexgrid::CellId> build_study_area(
    const std::vector<osm::StationRecord>& stations, hexgrid::Resolution r);

// A cell is positive iff at least one station indexes into it.
std::map<hexgrid::CellId, bool> label_cells(
    const std::vector<hexgrid::CellId>& cells,
    const std::vector<osm::StationRecord>& stations);

CityDataset make_city_dataset(const std::string& city,
                              const std::vector<osm::StationRecord>& stations,
                              hexgrid::Resolution r);

// Mean station position; the centre of the local measurement projection.
LatLng city_centroid(const std::vector<osm::StationRecord>& stations);

// labels_r<res>.csv (`cell,label`, rows sorted by cell).
std::string serialize_labels_csv(const CityDataset& ds);
void load_labels_csv(const std::string& body, CityDataset& ds);

}  // namespace hexstation::study
