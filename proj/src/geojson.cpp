#include "hexstation/geojson.hpp"

#include <functional>
#include <optional>

#include <nlohmann/json.hpp>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"

namespace hexstation::osm {

using nlohmann::json;

bool Geometry::empty() const {
  switch (type) {
    case GeometryType::Point:
      return false;
    case GeometryType::LineString:
      return line.size() < 2;
    case GeometryType::Polygon:
    case GeometryType::MultiPolygon:
      for (const auto& poly : polygons)
        if (!poly.empty() && poly.front().size() >= 3) return false;
      return true;
  }
  return true;
}

namespace {

LatLng parse_position(const json& pos, const std::string& where) {
  if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() ||
      !pos[1].is_number())
    throw parse_error("bad coordinate pair in " + where);
  const double lon = pos[0].get<double>();
  const double lat = pos[1].get<double>();
  try {
    return normalized_latlng(lat, lon);
  } catch (const input_error& e) {
    throw parse_error(std::string(e.what()) + " in " + where);
  }
}

Ring parse_ring(const json& arr, const std::string& where) {
  Ring ring;
  for (const auto& pos : arr) ring.push_back(parse_position(pos, where));
  // Drop the GeoJSON closing duplicate.
  if (ring.size() >= 2 && ring.front().lat == ring.back().lat &&
      ring.front().lon == ring.back().lon)
    ring.pop_back();
  return ring;
}

PolygonRings parse_polygon(const json& arr, const std::string& where) {
  PolygonRings rings;
  for (const auto& r : arr) rings.push_back(parse_ring(r, where));
  return rings;
}

std::string property_to_tag(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number()) return format_double(v.get<double>());
  return {};
}

json position_json(const LatLng& p) {
  // Fixed 7-decimal output keeps round-trips stable to 1e-7 degrees.
  return json::array({json::parse(format_fixed(p.lon, 7)),
                      json::parse(format_fixed(p.lat, 7))});
}

json ring_json(const Ring& ring) {
  json arr = json::array();
  for (const auto& p : ring) arr.push_back(position_json(p));
  if (!ring.empty()) arr.push_back(position_json(ring.front()));
  return arr;
}

}  // namespace

namespace {

// Parses one Feature object; returns nullopt (with a warning) for skippable
// features, throws parse_error for malformed content.
std::optional<GeoObject> feature_from_json(
    const json& feat, const std::string& where, const std::string& default_id,
    const std::function<void(const std::string&)>& warn) {
  if (!feat.is_object() || feat.value("type", "") != "Feature") {
    warn(where + ": not a Feature, skipped");
    return std::nullopt;
  }
  const auto geom_it = feat.find("geometry");
  if (geom_it == feat.end() || geom_it->is_null()) {
    warn(where + ": missing geometry, skipped");
    return std::nullopt;
  }
  const std::string gtype = geom_it->value("type", "");
  const json coords = geom_it->value("coordinates", json());

  GeoObject obj;
  if (gtype == "Point") {
    obj.geometry.type = GeometryType::Point;
    obj.geometry.point = parse_position(coords, where);
  } else if (gtype == "LineString") {
    obj.geometry.type = GeometryType::LineString;
    for (const auto& pos : coords)
      obj.geometry.line.push_back(parse_position(pos, where));
  } else if (gtype == "Polygon") {
    obj.geometry.type = GeometryType::Polygon;
    obj.geometry.polygons.push_back(parse_polygon(coords, where));
  } else if (gtype == "MultiPolygon") {
    obj.geometry.type = GeometryType::MultiPolygon;
    for (const auto& poly : coords)
      obj.geometry.polygons.push_back(parse_polygon(poly, where));
  } else {
    warn(where + ": unsupported geometry type '" + gtype + "', skipped");
    return std::nullopt;
  }
  if (obj.geometry.empty()) {
    warn(where + ": empty geometry, skipped");
    return std::nullopt;
  }

  if (feat.contains("id")) {
    const auto& idv = feat["id"];
    obj.id = idv.is_string() ? idv.get<std::string>() : idv.dump();
  } else {
    obj.id = default_id;
  }
  if (feat.contains("properties") && feat["properties"].is_object()) {
    for (const auto& [key, value] : feat["properties"].items()) {
      const std::string tag = property_to_tag(value);
      if (!tag.empty()) obj.tags[key] = tag;
    }
  }
  return obj;
}

}  // namespace

std::vector<GeoObject> parse_geojson(std::string_view bytes,
                                     std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw parse_error("malformed JSON at byte " + std::to_string(e.byte) +
                      ": " + e.what());
  }
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection")
    throw parse_error("expected a GeoJSON FeatureCollection");

  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };

  std::vector<GeoObject> out;
  const json features = doc.value("features", json::array());
  std::size_t index = 0;
  for (const auto& feat : features) {
    const std::string where = "feature " + std::to_string(index);
    const std::string default_id = "feature/" + std::to_string(index);
    ++index;
    if (auto obj = feature_from_json(feat, where, default_id, warn))
      out.push_back(std::move(*obj));
  }
  return out;
}

namespace {

json feature_to_json(const GeoObject& obj) {
  json geom;
  switch (obj.geometry.type) {
    case GeometryType::Point:
      geom = {{"type", "Point"},
              {"coordinates", position_json(obj.geometry.point)}};
      break;
    case GeometryType::LineString: {
      json arr = json::array();
      for (const auto& p : obj.geometry.line) arr.push_back(position_json(p));
      geom = {{"type", "LineString"}, {"coordinates", arr}};
      break;
    }
    case GeometryType::Polygon: {
      json arr = json::array();
      for (const auto& ring : obj.geometry.polygons.front())
        arr.push_back(ring_json(ring));
      geom = {{"type", "Polygon"}, {"coordinates", arr}};
      break;
    }
    case GeometryType::MultiPolygon: {
      json arr = json::array();
      for (const auto& poly : obj.geometry.polygons) {
        json parr = json::array();
        for (const auto& ring : poly) parr.push_back(ring_json(ring));
        arr.push_back(parr);
      }
      geom = {{"type", "MultiPolygon"}, {"coordinates", arr}};
      break;
    }
  }
  json props = json::object();
  for (const auto& [k, v] : obj.tags) props[k] = v;
  return json{{"type", "Feature"},
              {"id", obj.id},
              {"geometry", geom},
              {"properties", props}};
}

}  // namespace

std::string serialize_geojson(const std::vector<GeoObject>& objects) {
  json features = json::array();
  for (const auto& obj : objects) features.push_back(feature_to_json(obj));
  json doc = {{"type", "FeatureCollection"}, {"features", features}};
  return doc.dump();
}

std::string serialize_feature(const GeoObject& obj) {
  return feature_to_json(obj).dump();
}

GeoObject parse_feature(std::string_view bytes) {
  json feat;
  try {
    feat = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw parse_error("malformed JSON at byte " + std::to_string(e.byte) +
                      ": " + e.what());
  }
  auto ignore = [](const std::string&) {};
  auto obj = feature_from_json(feat, "feature", "feature/0", ignore);
  if (!obj) throw parse_error("not a usable GeoJSON Feature");
  return *obj;
}

}  // namespace hexstation::osm
