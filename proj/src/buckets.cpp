#include "hexstation/buckets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "hexstation/clip.hpp"
#include "hexstation/errors.hpp"

namespace hexstation::study {

using nlohmann::json;
using osm::Category;
using osm::GeoObject;
using osm::GeometryType;

namespace {

constexpr double kLengthEps = 1e-6;  // m
constexpr double kAreaEps = 1e-6;    // m^2

// Per-object, per-cell measures collected before counts are applied once.
struct CellContribution {
  double area = 0.0;
  double length = 0.0;
  bool point = false;
  bool touched = false;
};

class Assigner {
 public:
  Assigner(hexgrid::Resolution res, const LatLng& center,
           const osm::TagVocabulary& selected, const osm::TagVocabulary* all)
      : res_(res), proj_(center), selected_(selected), all_(all) {}

  void add(const GeoObject& o, BucketMap& buckets, AssignStats& stats);

 private:
  const std::vector<XY>& cell_polygon(hexgrid::CellId c);
  XY project(const LatLng& p) const {
    const PlanePoint q = proj_.forward(p);
    return XY{q.x, q.y};
  }

  std::map<hexgrid::CellId, CellContribution> contributions_point(
      const GeoObject& o);
  std::map<hexgrid::CellId, CellContribution> contributions_line(
      const GeoObject& o, AssignStats& stats);
  std::map<hexgrid::CellId, CellContribution> contributions_polygon(
      const GeoObject& o, AssignStats& stats);

  hexgrid::Resolution res_;
  AzimuthalEquidistant proj_;
  const osm::TagVocabulary& selected_;
  const osm::TagVocabulary* all_;
  std::unordered_map<std::uint64_t, std::vector<XY>> hex_cache_;
};

const std::vector<XY>& Assigner::cell_polygon(hexgrid::CellId c) {
  const auto it = hex_cache_.find(c.id());
  if (it != hex_cache_.end()) return it->second;
  std::vector<XY> poly;
  for (const auto& v : hexgrid::cell_boundary(c)) poly.push_back(project(v));
  // Boundaries are counterclockwise on the globe; the local projection
  // preserves orientation.
  if (ring_area_signed(poly) < 0.0) std::reverse(poly.begin(), poly.end());
  return hex_cache_.emplace(c.id(), std::move(poly)).first->second;
}

std::map<hexgrid::CellId, CellContribution> Assigner::contributions_point(
    const GeoObject& o) {
  std::map<hexgrid::CellId, CellContribution> out;
  auto& c = out[hexgrid::cell_of(o.geometry.point, res_)];
  c.point = true;
  c.touched = true;
  return out;
}

std::map<hexgrid::CellId, CellContribution> Assigner::contributions_line(
    const GeoObject& o, AssignStats& stats) {
  std::map<hexgrid::CellId, CellContribution> out;
  const auto& line = o.geometry.line;
  std::vector<XY> pts;
  pts.reserve(line.size());
  LatLng lo{90.0, 180.0}, hi{-90.0, -179.999999};
  for (const auto& p : line) {
    pts.push_back(project(p));
    lo.lat = std::min(lo.lat, p.lat);
    lo.lon = std::min(lo.lon, p.lon);
    hi.lat = std::max(hi.lat, p.lat);
    hi.lon = std::max(hi.lon, p.lon);
  }
  if (polyline_length(pts) <= kLengthEps) {
    // Zero-length way: counts, no measure.
    ++stats.degenerate_geometries;
    auto& c = out[hexgrid::cell_of(line.front(), res_)];
    c.touched = true;
    return out;
  }
  const auto candidates = hexgrid::cells_overlapping_envelope(lo, hi, res_);
  for (const auto& cell : candidates) {
    const auto& hex = cell_polygon(cell);
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const auto t = clip_segment_convex(pts[i - 1], pts[i], hex);
      if (!t) continue;
      len += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y) *
             (t->second - t->first);
    }
    if (len > kLengthEps) {
      auto& c = out[cell];
      c.length = len;
      c.touched = true;
    }
  }
  if (out.empty()) {
    auto& c = out[hexgrid::cell_of(line.front(), res_)];
    c.touched = true;
  }
  return out;
}

std::map<hexgrid::CellId, CellContribution> Assigner::contributions_polygon(
    const GeoObject& o, AssignStats& stats) {
  std::map<hexgrid::CellId, CellContribution> out;
  for (const auto& part : o.geometry.polygons) {
    if (part.empty() || part.front().size() < 3) {
      ++stats.degenerate_geometries;
      if (!part.empty() && !part.front().empty()) {
        auto& c = out[hexgrid::cell_of(part.front().front(), res_)];
        c.touched = true;
      }
      continue;
    }
    LatLng lo{90.0, 180.0}, hi{-90.0, -179.999999};
    std::vector<std::vector<XY>> rings;
    for (const auto& ring : part) {
      std::vector<XY> xy;
      xy.reserve(ring.size());
      for (const auto& p : ring) {
        xy.push_back(project(p));
        if (&ring == &part.front()) {
          lo.lat = std::min(lo.lat, p.lat);
          lo.lon = std::min(lo.lon, p.lon);
          hi.lat = std::max(hi.lat, p.lat);
          hi.lon = std::max(hi.lon, p.lon);
        }
      }
      rings.push_back(std::move(xy));
    }
    const double outer_area = std::fabs(ring_area_signed(rings.front()));
    if (outer_area <= kAreaEps) {
      ++stats.degenerate_geometries;
      auto& c = out[hexgrid::cell_of(part.front().front(), res_)];
      c.touched = true;
      continue;
    }
    for (const auto& cell : hexgrid::cells_overlapping_envelope(lo, hi, res_)) {
      const auto& hex = cell_polygon(cell);
      double area =
          std::fabs(ring_area_signed(clip_ring_convex(rings.front(), hex)));
      for (std::size_t h = 1; h < rings.size(); ++h)
        area -= std::fabs(ring_area_signed(clip_ring_convex(rings[h], hex)));
      if (area > kAreaEps) {
        auto& c = out[cell];
        c.area += area;
        c.touched = true;
      }
    }
  }
  if (out.empty() && !o.geometry.polygons.empty() &&
      !o.geometry.polygons.front().empty() &&
      !o.geometry.polygons.front().front().empty()) {
    auto& c =
        out[hexgrid::cell_of(o.geometry.polygons.front().front().front(), res_)];
    c.touched = true;
  }
  return out;
}

void Assigner::add(const GeoObject& o, BucketMap& buckets, AssignStats& stats) {
  const auto matches = osm::categorize_all(o);
  if (matches.empty()) {
    ++stats.objects_uncategorized;
    return;
  }

  std::map<hexgrid::CellId, CellContribution> contribs;
  switch (o.geometry.type) {
    case GeometryType::Point:
      contribs = contributions_point(o);
      break;
    case GeometryType::LineString:
      contribs = contributions_line(o, stats);
      break;
    case GeometryType::Polygon:
    case GeometryType::MultiPolygon:
      contribs = contributions_polygon(o, stats);
      break;
  }
  if (contribs.empty()) return;
  ++stats.objects_assigned;

  for (const auto& [cell, contrib] : contribs) {
    auto& bucket = buckets[cell];
    bucket.cell = cell;
    for (const auto& m : matches) {
      bucket.counts[m.category] += 1.0;
      if (contrib.point) bucket.point_counts[m.category] += 1.0;
      if (osm::is_road_category(m.category)) {
        if (contrib.length > 0.0) bucket.length_sums[m.category] += contrib.length;
      } else if (contrib.area > 0.0) {
        bucket.area_sums[m.category] += contrib.area;
      }

      const auto sel = selected_.axes_for(m);
      if (contrib.point && sel.count_axis)
        bucket.tags_selected[*sel.count_axis] += 1.0;
      if (o.geometry.type == GeometryType::LineString && !contrib.point) {
        if (sel.length_axis && contrib.length > 0.0)
          bucket.tags_selected[*sel.length_axis] += contrib.length;
        else if (sel.count_axis)
          bucket.tags_selected[*sel.count_axis] += 1.0;
      }
      if (contrib.area > 0.0 && sel.area_axis)
        bucket.tags_selected[*sel.area_axis] += contrib.area;

      if (all_) {
        const auto at = all_->axes_for(m);
        if (at.count_axis) {
          if (contrib.area > 0.0)
            bucket.tags_all[*at.area_axis] += contrib.area;
          else
            bucket.tags_all[*at.count_axis] += 1.0;
        }
      }
    }
  }
}

}  // namespace

void CellBucket::merge(const CellBucket& other) {
  for (const auto& [k, v] : other.counts) counts[k] += v;
  for (const auto& [k, v] : other.point_counts) point_counts[k] += v;
  for (const auto& [k, v] : other.area_sums) area_sums[k] += v;
  for (const auto& [k, v] : other.length_sums) length_sums[k] += v;
  for (const auto& [k, v] : other.tags_selected) tags_selected[k] += v;
  for (const auto& [k, v] : other.tags_all) tags_all[k] += v;
}

BucketMap assign_objects(const std::vector<GeoObject>& objects,
                         hexgrid::Resolution res, const LatLng& city_center,
                         const osm::TagVocabulary& selected_vocab,
                         const osm::TagVocabulary* all_vocab,
                         AssignStats* stats) {
  hexgrid::validate_resolution(res);
  AssignStats local;
  Assigner assigner(res, city_center, selected_vocab, all_vocab);
  BucketMap buckets;
  for (const auto& o : objects) assigner.add(o, buckets, local);
  if (stats) *stats = local;
  return buckets;
}

namespace {

json category_map_to_json(const std::map<Category, double>& m) {
  json obj = json::object();
  for (const auto& [cat, v] : m) obj[std::string(category_name(cat))] = v;
  return obj;
}

void category_map_from_json(const json& obj, std::map<Category, double>& m) {
  for (const auto& [name, v] : obj.items()) {
    const auto cat = osm::category_from_name(name);
    if (!cat) throw parse_error("unknown category in bucket: " + name);
    m[*cat] = v.get<double>();
  }
}

json index_map_to_json(const std::map<std::size_t, double>& m) {
  json obj = json::object();
  for (const auto& [idx, v] : m) obj[std::to_string(idx)] = v;
  return obj;
}

void index_map_from_json(const json& obj, std::map<std::size_t, double>& m) {
  for (const auto& [idx, v] : obj.items())
    m[static_cast<std::size_t>(std::stoull(idx))] = v.get<double>();
}

}  // namespace

std::string serialize_buckets_jsonl(const BucketMap& buckets) {
  std::string out;
  for (const auto& [cell, b] : buckets) {
    json line = {{"cell", cell.to_string()},
                 {"counts", category_map_to_json(b.counts)},
                 {"point_counts", category_map_to_json(b.point_counts)},
                 {"area_sums", category_map_to_json(b.area_sums)},
                 {"length_sums", category_map_to_json(b.length_sums)},
                 {"tags_selected", index_map_to_json(b.tags_selected)},
                 {"tags_all", index_map_to_json(b.tags_all)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

BucketMap parse_buckets_jsonl(const std::string& body) {
  BucketMap buckets;
  std::istringstream in(body);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw parse_error("buckets line " + std::to_string(line_no) + ": " +
                        e.what());
    }
    CellBucket b;
    b.cell = hexgrid::CellId::from_string(obj.at("cell").get<std::string>());
    category_map_from_json(obj.value("counts", json::object()), b.counts);
    category_map_from_json(obj.value("point_counts", json::object()),
                           b.point_counts);
    category_map_from_json(obj.value("area_sums", json::object()), b.area_sums);
    category_map_from_json(obj.value("length_sums", json::object()),
                           b.length_sums);
    index_map_from_json(obj.value("tags_selected", json::object()),
                        b.tags_selected);
    index_map_from_json(obj.value("tags_all", json::object()), b.tags_all);
    buckets[b.cell] = std::move(b);
  }
  return buckets;
}

}  // namespace hexstation::study
