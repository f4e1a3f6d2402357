#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexstation/geo.hpp"

namespace hexstation::osm {

struct StationRecord {
  std::string city;
  LatLng position;
  std::optional<std::string> external_id;
};

// Loads a station registry from CSV (`lat,lon[,id]`, header required) or from
// a GeoJSON FeatureCollection of points. Out-of-range coordinates raise a row
// error naming the offending line.
std::vector<StationRecord> load_stations(std::string_view bytes,
                                         const std::string& city);

std::string serialize_stations_csv(const std::vector<StationRecord>& stations);

}  // namespace hexstation::osm
