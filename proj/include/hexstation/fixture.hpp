#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hexstation/geojson.hpp"
#include "hexstation/stations.hpp"

namespace hexstation::fixture {

// Parameters of the synthetic demo city: a compact station cluster whose
// cells carry dense commerce, a wider town with thinning background objects,
// a street grid, a ring road and a river. Deterministic per seed.
struct FixtureSpec {
  std::string city = "fixture_a";
  LatLng center{51.11, 17.03};
  int station_count = 20;
  double station_disc_radius_m = 750.0;
  double min_station_separation_m = 230.0;
  double town_radius_m = 3200.0;
  std::uint64_t seed = 1;
};

struct FixtureCity {
  std::string city;
  std::vector<osm::StationRecord> stations;
  std::vector<osm::GeoObject> objects;
};

FixtureCity make_fixture_city(const FixtureSpec& spec);

FixtureSpec fixture_spec_a(std::uint64_t seed = 1);
FixtureSpec fixture_spec_b(std::uint64_t seed = 1);

// Writes fixture_a and fixture_b into a store directory (objects.jsonl,
// stations.csv, meta.json per city).
void write_fixture_store(const std::filesystem::path& root,
                         std::uint64_t seed = 1);

}  // namespace hexstation::fixture
