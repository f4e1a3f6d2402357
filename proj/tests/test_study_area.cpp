#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hexstation/buckets.hpp"
#include "hexstation/errors.hpp"
#include "hexstation/study_area.hpp"
#include "support/oracles.hpp"

using namespace hexstation;
using namespace hexstation::study;
using hexstation::osm::Category;
using hexstation::osm::GeoObject;
using hexstation::osm::GeometryType;
using hexstation::osm::StationRecord;

namespace {

const LatLng kCenter{51.11, 17.03};
const hexgrid::Resolution kRes{9};

StationRecord station(double lat, double lon) {
  StationRecord s;
  s.city = "t";
  s.position = LatLng{lat, lon};
  return s;
}

GeoObject point_obj(const LatLng& p, std::string key, std::string value) {
  GeoObject o;
  o.id = "p";
  o.geometry.type = GeometryType::Point;
  o.geometry.point = p;
  o.tags[std::move(key)] = std::move(value);
  return o;
}

// A line through plane coordinates (metres) around kCenter.
GeoObject line_obj(const std::vector<XY>& pts, std::string value = "residential") {
  AzimuthalEquidistant proj(kCenter);
  GeoObject o;
  o.id = "l";
  o.geometry.type = GeometryType::LineString;
  for (const auto& p : pts) o.geometry.line.push_back(proj.inverse({p.x, p.y}));
  o.tags["highway"] = std::move(value);
  return o;
}

GeoObject polygon_obj(const std::vector<XY>& ring, std::string key = "building",
                      std::string value = "yes") {
  AzimuthalEquidistant proj(kCenter);
  GeoObject o;
  o.id = "g";
  o.geometry.type = GeometryType::Polygon;
  osm::Ring r;
  for (const auto& p : ring) r.push_back(proj.inverse({p.x, p.y}));
  o.geometry.polygons.push_back({r});
  o.tags[std::move(key)] = std::move(value);
  return o;
}

BucketMap assign(const std::vector<GeoObject>& objects,
                 AssignStats* stats = nullptr) {
  return assign_objects(objects, kRes, kCenter, osm::TagVocabulary::selected(),
                        nullptr, stats);
}

}  // namespace

TEST_CASE("build_study_area: union semantics") {
  CHECK_THROWS_AS(build_study_area({}, kRes), input_error);

  const auto one = build_study_area({station(51.11, 17.03)}, kRes);
  CHECK(one == hexgrid::cells_within_radius(LatLng{51.11, 17.03}, 2000.0, kRes));

  // Two stations ~10 km apart: disjoint buffers, sizes add up.
  const auto a = build_study_area({station(51.11, 17.03)}, kRes);
  const auto b = build_study_area({station(51.11, 17.173)}, kRes);
  const auto both =
      build_study_area({station(51.11, 17.03), station(51.11, 17.173)}, kRes);
  CHECK(both.size() == a.size() + b.size());

  // Adding a station never shrinks the set.
  const auto more = build_study_area(
      {station(51.11, 17.03), station(51.11, 17.173), station(51.12, 17.05)},
      kRes);
  CHECK(std::includes(more.begin(), more.end(), both.begin(), both.end()));
}

TEST_CASE("label_cells: positives are exactly the station cells") {
  const auto stations = std::vector<StationRecord>{
      station(51.11, 17.03), station(51.115, 17.04), station(51.105, 17.02)};
  const auto cells = build_study_area(stations, kRes);
  const auto labels = label_cells(cells, stations);

  // Direct recount oracle.
  std::set<hexgrid::CellId> expected;
  for (const auto& s : stations) {
    const auto c = hexgrid::cell_of(s.position, kRes);
    if (std::binary_search(cells.begin(), cells.end(), c)) expected.insert(c);
  }
  std::size_t positives = 0;
  for (const auto& [cell, v] : labels) {
    if (v) {
      ++positives;
      CHECK(expected.count(cell) == 1);
    }
  }
  CHECK(positives == expected.size());

  // A station exactly at a centroid labels that cell.
  const auto c0 = hexgrid::cell_of(LatLng{51.11, 17.03}, kRes);
  const auto ctr = hexgrid::centroid(c0);
  const auto labels2 =
      label_cells(cells, {station(ctr.lat, ctr.lon)});
  CHECK(labels2.at(c0));
  std::size_t pos2 = 0;
  for (const auto& [cell, v] : labels2) pos2 += v ? 1 : 0;
  CHECK(pos2 == 1);
}

TEST_CASE("assign_objects: a point lands in exactly one bucket") {
  const auto c = hexgrid::cell_of(kCenter, kRes);
  const auto ctr = hexgrid::centroid(c);
  const auto buckets = assign({point_obj(ctr, "amenity", "pub")});
  REQUIRE(buckets.size() == 1);
  const auto& bucket = buckets.at(c);
  CHECK(bucket.counts.at(Category::sustenance) == 1.0);
  CHECK(bucket.point_counts.at(Category::sustenance) == 1.0);
}

TEST_CASE("assign_objects: a 300 m segment splits across two cells") {
  // Span the shared edge between a cell and its neighbour: from 150 m west
  // of the edge midpoint to 150 m east in the local plane.
  const auto c = hexgrid::cell_of(kCenter, kRes);
  AzimuthalEquidistant proj(kCenter);
  const auto ctr = proj.forward(hexgrid::centroid(c));
  const auto line =
      line_obj({{ctr.x - 150.0, ctr.y}, {ctr.x + 150.0, ctr.y}});
  // Position the line so it straddles a boundary: shift east by the
  // apothem so the midpoint sits on the cell edge.
  const double apothem = hexgrid::cell_edge_m(kRes) * std::sqrt(3.0) / 2.0;
  const auto shifted = line_obj(
      {{ctr.x + apothem - 150.0, ctr.y}, {ctr.x + apothem + 150.0, ctr.y}});

  for (const auto& obj : {line, shifted}) {
    const auto buckets = assign({obj});
    double total = 0.0;
    for (const auto& [cell, bucket] : buckets) {
      const auto it = bucket.length_sums.find(Category::roads_drive);
      if (it != bucket.length_sums.end()) total += it->second;
    }
    CHECK(total == doctest::Approx(300.0).epsilon(0.01));
  }
  const auto buckets = assign({shifted});
  CHECK(buckets.size() == 2);
}

TEST_CASE("assign_objects: polygon strictly inside one cell") {
  const auto c = hexgrid::cell_of(kCenter, kRes);
  AzimuthalEquidistant proj(kCenter);
  const auto ctr = proj.forward(hexgrid::centroid(c));
  // A 60x40 m rectangle at the cell centre.
  const std::vector<XY> rect = {{ctr.x - 30, ctr.y - 20},
                                {ctr.x + 30, ctr.y - 20},
                                {ctr.x + 30, ctr.y + 20},
                                {ctr.x - 30, ctr.y + 20}};
  const auto buckets = assign({polygon_obj(rect)});
  REQUIRE(buckets.count(c) == 1);
  CHECK(buckets.at(c).area_sums.at(Category::buildings) ==
        doctest::Approx(2400.0).epsilon(0.005));
  CHECK(buckets.size() == 1);
}

TEST_CASE("assign_objects: multipolygon holes subtract") {
  AzimuthalEquidistant proj(kCenter);
  const auto c = hexgrid::cell_of(kCenter, kRes);
  const auto ctr = proj.forward(hexgrid::centroid(c));
  GeoObject o;
  o.id = "holed";
  o.geometry.type = GeometryType::Polygon;
  osm::Ring outer, hole;
  const std::vector<XY> outer_xy = {{ctr.x - 50, ctr.y - 50},
                                    {ctr.x + 50, ctr.y - 50},
                                    {ctr.x + 50, ctr.y + 50},
                                    {ctr.x - 50, ctr.y + 50}};
  const std::vector<XY> hole_xy = {{ctr.x - 20, ctr.y - 20},
                                   {ctr.x + 20, ctr.y - 20},
                                   {ctr.x + 20, ctr.y + 20},
                                   {ctr.x - 20, ctr.y + 20}};
  for (const auto& p : outer_xy) outer.push_back(proj.inverse({p.x, p.y}));
  for (const auto& p : hole_xy) hole.push_back(proj.inverse({p.x, p.y}));
  o.geometry.polygons.push_back({outer, hole});
  o.tags["building"] = "yes";
  const auto buckets = assign({o});
  CHECK(buckets.at(c).area_sums.at(Category::buildings) ==
        doctest::Approx(10000.0 - 1600.0).epsilon(0.005));
}

TEST_CASE("conservation: clipped sums match totals (Monte-Carlo oracle)") {
  Rng rng(77);
  AzimuthalEquidistant proj(kCenter);
  for (int trial = 0; trial < 8; ++trial) {
    // Random triangle-ish polygon a few hundred metres across.
    const double cx = rng.uniform(-2000.0, 2000.0);
    const double cy = rng.uniform(-2000.0, 2000.0);
    std::vector<XY> ring;
    const int verts = 3 + static_cast<int>(rng.next_below(4));
    for (int v = 0; v < verts; ++v) {
      const double ang = 2.0 * kPi * v / verts + rng.uniform(0.0, 0.4);
      const double rad = rng.uniform(150.0, 600.0);
      ring.push_back({cx + rad * std::cos(ang), cy + rad * std::sin(ang)});
    }
    const auto obj = polygon_obj(ring);
    const auto buckets = assign({obj});

    double clipped_total = 0.0;
    for (const auto& [cell, bucket] : buckets)
      if (const auto it = bucket.area_sums.find(Category::buildings);
          it != bucket.area_sums.end())
        clipped_total += it->second;

    std::vector<LatLng> ring_ll;
    for (const auto& p : ring) ring_ll.push_back(proj.inverse({p.x, p.y}));
    const double exact = oracles::polygon_area_local(ring_ll, kCenter);
    CHECK(clipped_total == doctest::Approx(exact).epsilon(0.01));

    double mc_total = 0.0;
    const auto mc =
        oracles::mc_polygon_area_by_cell(ring_ll, kRes, kCenter, 20000, rng,
                                         &mc_total);
    CHECK(clipped_total == doctest::Approx(mc_total).epsilon(0.02));
    for (const auto& [cell, mc_area] : mc) {
      double got = 0.0;
      if (const auto it = buckets.find(cell); it != buckets.end())
        if (const auto a = it->second.area_sums.find(Category::buildings);
            a != it->second.area_sums.end())
          got = a->second;
      CHECK(std::fabs(got - mc_area) <= 0.03 * exact + 50.0);
    }
  }
}

TEST_CASE("conservation: line lengths") {
  Rng rng(78);
  AzimuthalEquidistant proj(kCenter);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<XY> pts;
    double x = rng.uniform(-2000.0, 2000.0), y = rng.uniform(-2000.0, 2000.0);
    pts.push_back({x, y});
    for (int s = 0; s < 4; ++s) {
      x += rng.uniform(-500.0, 500.0);
      y += rng.uniform(-500.0, 500.0);
      pts.push_back({x, y});
    }
    const auto obj = line_obj(pts);
    const auto buckets = assign({obj});
    double clipped_total = 0.0;
    for (const auto& [cell, bucket] : buckets)
      if (const auto it = bucket.length_sums.find(Category::roads_drive);
          it != bucket.length_sums.end())
        clipped_total += it->second;
    const double exact = polyline_length(pts);
    CHECK(clipped_total == doctest::Approx(exact).epsilon(0.01));

    std::vector<LatLng> line_ll;
    for (const auto& p : pts) line_ll.push_back(proj.inverse({p.x, p.y}));
    double mc_total = 0.0;
    const auto mc = oracles::mc_line_length_by_cell(line_ll, kRes, kCenter,
                                                    20000, rng, &mc_total);
    for (const auto& [cell, mc_len] : mc) {
      double got = 0.0;
      if (const auto it = buckets.find(cell); it != buckets.end())
        if (const auto l = it->second.length_sums.find(Category::roads_drive);
            l != it->second.length_sums.end())
          got = l->second;
      CHECK(std::fabs(got - mc_len) <= 0.02 * exact + 2.0);
    }
  }
}

TEST_CASE("assignment is order-independent") {
  Rng rng(79);
  AzimuthalEquidistant proj(kCenter);
  std::vector<GeoObject> objects;
  for (int i = 0; i < 40; ++i) {
    const double x = rng.uniform(-1500.0, 1500.0);
    const double y = rng.uniform(-1500.0, 1500.0);
    objects.push_back(point_obj(proj.inverse({x, y}), "shop", "bakery"));
    objects.push_back(line_obj({{x, y}, {x + 200.0, y + 120.0}}));
  }
  const auto a = assign(objects);
  std::vector<GeoObject> shuffled = objects;
  rng.shuffle(shuffled);
  const auto b = assign(shuffled);
  REQUIRE(a.size() == b.size());
  for (const auto& [cell, bucket] : a) {
    const auto& other = b.at(cell);
    CHECK(bucket.counts == other.counts);
    CHECK(bucket.tags_selected == other.tags_selected);
    for (const auto& [cat, len] : bucket.length_sums)
      CHECK(len == doctest::Approx(other.length_sums.at(cat)).epsilon(1e-12));
  }
}

TEST_CASE("every categorized object contributes to at least one bucket") {
  Rng rng(80);
  AzimuthalEquidistant proj(kCenter);
  std::vector<GeoObject> objects;
  for (int i = 0; i < 30; ++i) {
    const double x = rng.uniform(-1000.0, 1000.0);
    const double y = rng.uniform(-1000.0, 1000.0);
    objects.push_back(point_obj(proj.inverse({x, y}), "amenity", "cafe"));
  }
  AssignStats stats;
  const auto buckets = assign(objects, &stats);
  CHECK(stats.objects_assigned == objects.size());
  double total = 0.0;
  for (const auto& [cell, bucket] : buckets)
    if (const auto it = bucket.counts.find(Category::sustenance);
        it != bucket.counts.end())
      total += it->second;
  CHECK(total == static_cast<double>(objects.size()));
}

TEST_CASE("degenerate geometries count but measure zero") {
  AzimuthalEquidistant proj(kCenter);
  const auto p = proj.inverse({100.0, 100.0});
  GeoObject zero_line;
  zero_line.id = "z";
  zero_line.geometry.type = GeometryType::LineString;
  zero_line.geometry.line = {p, p};
  zero_line.tags["highway"] = "residential";

  AssignStats stats;
  const auto buckets = assign({zero_line}, &stats);
  CHECK(stats.degenerate_geometries == 1);
  REQUIRE(buckets.size() == 1);
  const auto& bucket = buckets.begin()->second;
  CHECK(bucket.counts.at(Category::roads_drive) == 1.0);
  CHECK(bucket.length_sums.count(Category::roads_drive) == 0);
}

TEST_CASE("uncategorized objects are skipped and tallied") {
  AssignStats stats;
  const auto buckets = assign({point_obj(kCenter, "foo", "bar")}, &stats);
  CHECK(buckets.empty());
  CHECK(stats.objects_uncategorized == 1);
}

TEST_CASE("buckets JSONL round-trip") {
  Rng rng(81);
  AzimuthalEquidistant proj(kCenter);
  std::vector<GeoObject> objects;
  for (int i = 0; i < 20; ++i) {
    const double x = rng.uniform(-800.0, 800.0), y = rng.uniform(-800.0, 800.0);
    objects.push_back(point_obj(proj.inverse({x, y}), "shop", "bakery"));
    objects.push_back(
        polygon_obj({{x, y}, {x + 40, y}, {x + 40, y + 30}, {x, y + 30}}));
  }
  const auto vocab_all = osm::build_all_tag_vocab(objects);
  const auto buckets =
      assign_objects(objects, kRes, kCenter, osm::TagVocabulary::selected(),
                     &vocab_all, nullptr);
  const auto parsed = parse_buckets_jsonl(serialize_buckets_jsonl(buckets));
  REQUIRE(parsed.size() == buckets.size());
  for (const auto& [cell, bucket] : buckets) {
    const auto& other = parsed.at(cell);
    CHECK(bucket.counts == other.counts);
    CHECK(bucket.point_counts == other.point_counts);
    for (const auto& [cat, v] : bucket.area_sums)
      CHECK(v == doctest::Approx(other.area_sums.at(cat)).epsilon(1e-12));
    CHECK(bucket.tags_selected.size() == other.tags_selected.size());
    CHECK(bucket.tags_all.size() == other.tags_all.size());
  }
}

TEST_CASE("labels CSV round-trip") {
  const auto stations = std::vector<StationRecord>{station(51.11, 17.03),
                                                   station(51.115, 17.045)};
  const auto ds = make_city_dataset("t", stations, kRes);
  CityDataset loaded;
  loaded.city = "t";
  load_labels_csv(serialize_labels_csv(ds), loaded);
  CHECK(loaded.cells == ds.cells);
  CHECK(loaded.labels == ds.labels);
  CHECK(loaded.resolution == ds.resolution);
}
