#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hexstation/geojson.hpp"
#include "hexstation/hexgrid.hpp"
#include "hexstation/stations.hpp"

namespace hexstation::osm {

// File-backed per-city dataset store:
//   <root>/<city>/objects.jsonl       one GeoJSON feature per line
//   <root>/<city>/stations.csv        lat,lon,id
//   <root>/<city>/meta.json           counts and fetch provenance
//   <root>/<city>/labels_r<res>.csv   cell,label
//   <root>/<city>/buckets_r<res>.jsonl
//   <root>/<city>/emb_<method>_r<res>.csv
class CityStore {
 public:
  CityStore(std::filesystem::path root, std::string city);

  const std::string& city() const { return city_; }
  std::filesystem::path dir() const;

  std::filesystem::path objects_path() const;
  std::filesystem::path stations_path() const;
  std::filesystem::path meta_path() const;
  std::filesystem::path labels_path(hexgrid::Resolution r) const;
  std::filesystem::path buckets_path(hexgrid::Resolution r) const;
  std::filesystem::path embeddings_path(const std::string& method,
                                        hexgrid::Resolution r) const;
  std::filesystem::path vocab_all_path() const;

  void write_objects(const std::vector<GeoObject>& objects,
                     const std::string& source);
  std::vector<GeoObject> read_objects() const;

  void write_stations(const std::vector<StationRecord>& stations);
  std::vector<StationRecord> read_stations() const;

  // meta.json is merged, not replaced, so ingest and stations steps can both
  // record provenance.
  void update_meta(const std::map<std::string, std::string>& fields);
  std::map<std::string, std::string> read_meta() const;

 private:
  std::filesystem::path root_;
  std::string city_;
};

}  // namespace hexstation::osm
