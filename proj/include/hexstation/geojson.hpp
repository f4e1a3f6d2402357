#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hexstation/geo.hpp"

namespace hexstation::osm {

enum class GeometryType { Point, LineString, Polygon, MultiPolygon };

using Ring = std::vector<LatLng>;
// First ring is the outer boundary, the rest are holes. Rings are stored
// without the GeoJSON closing duplicate vertex.
using PolygonRings = std::vector<Ring>;

struct Geometry {
  GeometryType type = GeometryType::Point;
  LatLng point{};
  Ring line;
  std::vector<PolygonRings> polygons;  // one entry for Polygon, n for MultiPolygon

  bool empty() const;
};

// One OpenStreetMap feature: geometry plus its tag map.
struct GeoObject {
  std::string id;
  Geometry geometry;
  std::map<std::string, std::string> tags;
};

// Parses a GeoJSON FeatureCollection. Features with missing/empty geometry or
// an unsupported geometry type are skipped with a warning. Malformed JSON
// raises parse_error with the byte offset.
std::vector<GeoObject> parse_geojson(std::string_view bytes,
                                     std::vector<std::string>* warnings = nullptr);

// FeatureCollection serialization; coordinates are written with 7 decimal
// places so parse_geojson(serialize_geojson(x)) reproduces coordinates to
// 1e-7 degrees.
std::string serialize_geojson(const std::vector<GeoObject>& objects);

// Single-feature forms used by the JSONL object store.
std::string serialize_feature(const GeoObject& obj);
GeoObject parse_feature(std::string_view bytes);

}  // namespace hexstation::osm
