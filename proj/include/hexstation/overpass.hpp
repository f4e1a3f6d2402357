#pragma once

#include <string>
#include <vector>

#include "hexstation/geojson.hpp"

namespace hexstation::osm {

// HTTP client configuration for the object-download service. Every field can
// be overridden from the environment: HEXSTATION_OVERPASS_ENDPOINT,
// HEXSTATION_OVERPASS_TIMEOUT (seconds), HEXSTATION_OVERPASS_CACHE.
struct OverpassConfig {
  std::string endpoint = "https://overpass-api.de";
  double timeout_sec = 60.0;
  std::string cache_dir;  // empty: caching disabled
  int max_retries = 3;
  double backoff_sec = 0.5;
};

OverpassConfig overpass_config_from_env(OverpassConfig base = {});

// Downloads all objects intersecting the named administrative area and
// converts them to GeoObjects. Successful responses are cached under
// cache_dir so later runs replay offline and bit-identically. The endpoint
// must answer 400/404 for unresolvable area names (lookup error); transient
// failures are retried with exponential backoff.
std::vector<GeoObject> fetch_overpass(const std::string& area_name,
                                      const OverpassConfig& cfg);

// Conversion from the wire format (elements array with nodes and ways) used
// by fetch_overpass; exposed for tests.
std::vector<GeoObject> parse_overpass_json(std::string_view body);

}  // namespace hexstation::osm
