#include "hexstation/overpass.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"

namespace hexstation::osm {

using nlohmann::json;

namespace {

std::string overpass_query(const std::string& area_name) {
  return "[out:json];area[name=\"" + area_name +
         "\"]->.a;(node(area.a);way(area.a););out tags geom;";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string cache_path(const OverpassConfig& cfg, const std::string& query) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(cfg.endpoint + query)));
  return (std::filesystem::path(cfg.cache_dir) /
          (std::string("overpass_") + buf + ".json"))
      .string();
}

// Closed ways with one of these keys are areas rather than loops.
bool way_is_area(const std::map<std::string, std::string>& tags) {
  if (const auto it = tags.find("area"); it != tags.end())
    return it->second != "no";
  for (const char* key : {"building", "landuse", "natural", "leisure",
                          "amenity", "water", "waterway", "shop", "tourism",
                          "historic", "sport"})
    if (tags.count(key)) return true;
  return false;
}

}  // namespace

OverpassConfig overpass_config_from_env(OverpassConfig base) {
  if (const char* v = std::getenv("HEXSTATION_OVERPASS_ENDPOINT"))
    base.endpoint = v;
  if (const char* v = std::getenv("HEXSTATION_OVERPASS_TIMEOUT"))
    base.timeout_sec = std::atof(v);
  if (const char* v = std::getenv("HEXSTATION_OVERPASS_CACHE"))
    base.cache_dir = v;
  return base;
}

std::vector<GeoObject> parse_overpass_json(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw parse_error("malformed overpass JSON at byte " +
                      std::to_string(e.byte) + ": " + e.what());
  }
  if (doc.contains("remark"))
    throw io_error("overpass remark: " + doc["remark"].dump());

  std::vector<GeoObject> out;
  for (const auto& el : doc.value("elements", json::array())) {
    const std::string type = el.value("type", "");
    GeoObject obj;
    if (el.contains("tags"))
      for (const auto& [k, v] : el["tags"].items())
        if (v.is_string()) obj.tags[k] = v.get<std::string>();

    if (type == "node") {
      if (!el.contains("lat") || !el.contains("lon")) continue;
      obj.id = "node/" + std::to_string(el.value("id", 0ll));
      obj.geometry.type = GeometryType::Point;
      obj.geometry.point =
          normalized_latlng(el["lat"].get<double>(), el["lon"].get<double>());
    } else if (type == "way") {
      if (!el.contains("geometry")) continue;
      obj.id = "way/" + std::to_string(el.value("id", 0ll));
      Ring ring;
      for (const auto& pt : el["geometry"])
        ring.push_back(
            normalized_latlng(pt["lat"].get<double>(), pt["lon"].get<double>()));
      if (ring.size() < 2) continue;
      const bool closed = ring.front().lat == ring.back().lat &&
                          ring.front().lon == ring.back().lon;
      if (closed && ring.size() >= 4 && way_is_area(obj.tags)) {
        ring.pop_back();
        obj.geometry.type = GeometryType::Polygon;
        obj.geometry.polygons.push_back({ring});
      } else {
        obj.geometry.type = GeometryType::LineString;
        obj.geometry.line = std::move(ring);
      }
    } else {
      // Relations carry role semantics this pipeline does not model.
      continue;
    }
    out.push_back(std::move(obj));
  }
  return out;
}

std::vector<GeoObject> fetch_overpass(const std::string& area_name,
                                      const OverpassConfig& cfg) {
  const std::string query = overpass_query(area_name);

  if (!cfg.cache_dir.empty()) {
    const std::string path = cache_path(cfg, query);
    if (std::filesystem::exists(path))
      return parse_overpass_json(read_file(path));
  }

  httplib::Client client(cfg.endpoint);
  client.set_connection_timeout(std::chrono::milliseconds(
      static_cast<int>(cfg.timeout_sec * 1000)));
  client.set_read_timeout(
      std::chrono::milliseconds(static_cast<int>(cfg.timeout_sec * 1000)));

  double backoff = cfg.backoff_sec;
  std::string last_error;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::duration<double>(backoff));
      backoff *= 2.0;
    }
    auto res = client.Post("/api/interpreter", "data=" + query, "text/plain");
    if (!res) {
      last_error = "no response (" + httplib::to_string(res.error()) + ")";
      continue;
    }
    if (res->status == 400 || res->status == 404)
      throw data_error("area lookup failed for '" + area_name +
                       "' (HTTP " + std::to_string(res->status) + ")");
    if (res->status != 200) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    auto objects = parse_overpass_json(res->body);
    if (!cfg.cache_dir.empty())
      write_file(cache_path(cfg, query), res->body);
    return objects;
  }
  throw io_error("overpass fetch failed after " +
                 std::to_string(cfg.max_retries + 1) + " attempts: " +
                 last_error);
}

}  // namespace hexstation::osm
