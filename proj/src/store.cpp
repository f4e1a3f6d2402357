#include "hexstation/store.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"

namespace hexstation::osm {

using nlohmann::json;

CityStore::CityStore(std::filesystem::path root, std::string city)
    : root_(std::move(root)), city_(std::move(city)) {
  if (city_.empty() || city_.find('/') != std::string::npos ||
      city_.find("..") != std::string::npos)
    throw input_error("invalid city name: '" + city_ + "'");
}

std::filesystem::path CityStore::dir() const { return root_ / city_; }
std::filesystem::path CityStore::objects_path() const {
  return dir() / "objects.jsonl";
}
std::filesystem::path CityStore::stations_path() const {
  return dir() / "stations.csv";
}
std::filesystem::path CityStore::meta_path() const {
  return dir() / "meta.json";
}
std::filesystem::path CityStore::labels_path(hexgrid::Resolution r) const {
  return dir() / ("labels_r" + std::to_string(r.value) + ".csv");
}
std::filesystem::path CityStore::buckets_path(hexgrid::Resolution r) const {
  return dir() / ("buckets_r" + std::to_string(r.value) + ".jsonl");
}
std::filesystem::path CityStore::embeddings_path(const std::string& method,
                                                 hexgrid::Resolution r) const {
  return dir() / ("emb_" + method + "_r" + std::to_string(r.value) + ".csv");
}
std::filesystem::path CityStore::vocab_all_path() const {
  return dir() / "vocab_all.json";
}

void CityStore::write_objects(const std::vector<GeoObject>& objects,
                              const std::string& source) {
  std::string body;
  for (const auto& obj : objects) {
    body += serialize_feature(obj);
    body += '\n';
  }
  write_file(objects_path().string(), body);
  update_meta({{"objects", std::to_string(objects.size())},
               {"objects_source", source}});
}

std::vector<GeoObject> CityStore::read_objects() const {
  const std::string body = read_file(objects_path().string());
  std::vector<GeoObject> out;
  std::istringstream in(body);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(parse_feature(line));
    } catch (const parse_error& e) {
      throw parse_error(objects_path().string() + ":" +
                        std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void CityStore::write_stations(const std::vector<StationRecord>& stations) {
  write_file(stations_path().string(), serialize_stations_csv(stations));
  update_meta({{"stations", std::to_string(stations.size())}});
}

std::vector<StationRecord> CityStore::read_stations() const {
  return load_stations(read_file(stations_path().string()), city_);
}

void CityStore::update_meta(const std::map<std::string, std::string>& fields) {
  json meta = json::object();
  if (std::filesystem::exists(meta_path())) {
    try {
      meta = json::parse(read_file(meta_path().string()));
    } catch (...) {
      meta = json::object();
    }
  }
  meta["city"] = city_;
  for (const auto& [k, v] : fields) meta[k] = v;
  write_file(meta_path().string(), meta.dump(2) + "\n");
}

std::map<std::string, std::string> CityStore::read_meta() const {
  std::map<std::string, std::string> out;
  if (!std::filesystem::exists(meta_path())) return out;
  const json meta = json::parse(read_file(meta_path().string()));
  for (const auto& [k, v] : meta.items())
    out[k] = v.is_string() ? v.get<std::string>() : v.dump();
  return out;
}

}  // namespace hexstation::osm
