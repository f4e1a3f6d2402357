#include "hexstation/fixture.hpp"

#include <cmath>

#include "hexstation/rng.hpp"
#include "hexstation/store.hpp"

namespace hexstation::fixture {

using osm::GeoObject;
using osm::GeometryType;

namespace {

struct Builder {
  explicit Builder(const FixtureSpec& spec)
      : spec(spec), proj(spec.center), rng(derive_seed(spec.seed, 0xF1C7)) {}

  LatLng at(double x, double y) const {
    return proj.inverse(PlanePoint{x, y});
  }

  GeoObject point(double x, double y, std::string key, std::string value) {
    GeoObject o;
    o.id = "node/" + std::to_string(next_id++);
    o.geometry.type = GeometryType::Point;
    o.geometry.point = at(x, y);
    o.tags[std::move(key)] = std::move(value);
    return o;
  }

  GeoObject square(double cx, double cy, double half, std::string key,
                   std::string value) {
    GeoObject o;
    o.id = "way/" + std::to_string(next_id++);
    o.geometry.type = GeometryType::Polygon;
    o.geometry.polygons.push_back({{at(cx - half, cy - half),
                                    at(cx + half, cy - half),
                                    at(cx + half, cy + half),
                                    at(cx - half, cy + half)}});
    o.tags[std::move(key)] = std::move(value);
    return o;
  }

  GeoObject line(const std::vector<std::pair<double, double>>& pts,
                 std::string key, std::string value) {
    GeoObject o;
    o.id = "way/" + std::to_string(next_id++);
    o.geometry.type = GeometryType::LineString;
    for (const auto& [x, y] : pts) o.geometry.line.push_back(at(x, y));
    o.tags[std::move(key)] = std::move(value);
    return o;
  }

  // Uniform point in a disc around (cx, cy).
  std::pair<double, double> in_disc(double cx, double cy, double radius) {
    const double r = radius * std::sqrt(rng.next_double());
    const double a = rng.uniform(0.0, 2.0 * kPi);
    return {cx + r * std::cos(a), cy + r * std::sin(a)};
  }

  const FixtureSpec& spec;
  AzimuthalEquidistant proj;
  Rng rng;
  long long next_id = 1;
};

const char* kClusterShopValues[] = {"bakery", "convenience", "clothes",
                                    "supermarket", "hairdresser", "kiosk"};
const char* kSustenanceValues[] = {"cafe", "restaurant", "pub", "bar",
                                   "fast_food"};
const char* kLeisureValues[] = {"park", "pitch", "fitness_centre", "garden"};

}  // namespace

FixtureCity make_fixture_city(const FixtureSpec& spec) {
  Builder b(spec);
  FixtureCity city;
  city.city = spec.city;

  // Stations: rejection-sampled with a minimum separation.
  std::vector<std::pair<double, double>> station_xy;
  int guard = 0;
  while (static_cast<int>(station_xy.size()) < spec.station_count &&
         guard++ < 100000) {
    const auto [x, y] = b.in_disc(0.0, 0.0, spec.station_disc_radius_m);
    bool ok = true;
    for (const auto& [sx, sy] : station_xy)
      if (std::hypot(x - sx, y - sy) < spec.min_station_separation_m) {
        ok = false;
        break;
      }
    if (ok) station_xy.emplace_back(x, y);
  }
  for (const auto& [x, y] : station_xy) {
    osm::StationRecord rec;
    rec.city = spec.city;
    rec.position = b.at(x, y);
    rec.external_id = "s" + std::to_string(city.stations.size() + 1);
    city.stations.push_back(rec);
  }

  auto& objects = city.objects;

  // Commerce clusters. Stations carry full-strength clusters; decoy centres
  // away from any station carry weaker ones, so nearby cells genuinely
  // overlap with station cells in feature space.
  auto emit_cluster = [&](double cx, double cy, double strength) {
    const double radius = 460.0;
    const int n_shop = static_cast<int>(
        strength * (6.0 + static_cast<double>(b.rng.next_below(5))));
    for (int i = 0; i < n_shop; ++i) {
      const auto [x, y] = b.in_disc(cx, cy, radius);
      objects.push_back(
          b.point(x, y, "shop", kClusterShopValues[b.rng.next_below(6)]));
    }
    const int n_sust = static_cast<int>(
        strength * (3.0 + static_cast<double>(b.rng.next_below(4))));
    for (int i = 0; i < n_sust; ++i) {
      const auto [x, y] = b.in_disc(cx, cy, radius);
      objects.push_back(
          b.point(x, y, "amenity", kSustenanceValues[b.rng.next_below(5)]));
    }
    const int n_trans = static_cast<int>(
        strength * (2.0 + static_cast<double>(b.rng.next_below(3))));
    for (int i = 0; i < n_trans; ++i) {
      const auto [x, y] = b.in_disc(cx, cy, radius);
      objects.push_back(b.point(x, y, "public_transport", "platform"));
    }
    if (b.rng.next_below(3) == 0) {
      const auto [x, y] = b.in_disc(cx, cy, radius);
      objects.push_back(b.point(x, y, "amenity", "school"));
    }
    for (std::uint64_t i = 0, n = b.rng.next_below(3); i < n; ++i) {
      const auto [x, y] = b.in_disc(cx, cy, radius);
      objects.push_back(
          b.point(x, y, "leisure", kLeisureValues[b.rng.next_below(4)]));
    }
    const auto [bx, by] = b.in_disc(cx, cy, 200.0);
    objects.push_back(b.square(bx, by, 25.0, "building", "retail"));
  };

  // Clusters sit near, not on, their station, so the peak density often
  // falls on a neighbouring cell.
  for (const auto& [sx, sy] : station_xy) {
    const auto [cx, cy] = b.in_disc(sx, sy, 230.0);
    emit_cluster(cx, cy, 1.0);
  }

  // Decoy districts beyond the station disc: groups of station-law clusters
  // with no station, so only the class prior separates them there.
  const int districts = 8;
  for (int i = 0; i < districts; ++i) {
    const double a = b.rng.uniform(0.0, 2.0 * kPi);
    const double r = b.rng.uniform(spec.station_disc_radius_m + 350.0, 2300.0);
    const double dx = r * std::cos(a), dy = r * std::sin(a);
    for (int c = 0; c < 3; ++c) {
      const auto [cx, cy] = b.in_disc(dx, dy, 420.0);
      emit_cluster(cx, cy, 1.0);
    }
  }

  // Background town: commerce thinning away from the centre.
  const double town_area_km2 =
      kPi * spec.town_radius_m * spec.town_radius_m / 1e6;
  const int background_points = static_cast<int>(town_area_km2 * 28.0);
  for (int i = 0; i < background_points; ++i) {
    const auto [x, y] = b.in_disc(0.0, 0.0, spec.town_radius_m);
    const double d = std::hypot(x, y);
    // Keep with probability falling off with distance from the centre.
    if (b.rng.next_double() > 0.75 * std::exp(-d / 1600.0) + 0.10) continue;
    const std::uint64_t kind = b.rng.next_below(4);
    if (kind == 0)
      objects.push_back(b.point(x, y, "shop", "convenience"));
    else if (kind == 1)
      objects.push_back(b.point(x, y, "amenity", "cafe"));
    else if (kind == 2)
      objects.push_back(b.point(x, y, "amenity", "parking"));
    else
      objects.push_back(b.point(x, y, "leisure", "park"));
  }

  // Residential buildings everywhere.
  const int building_count = static_cast<int>(town_area_km2 * 12.0);
  for (int i = 0; i < building_count; ++i) {
    const auto [x, y] = b.in_disc(0.0, 0.0, spec.town_radius_m);
    objects.push_back(
        b.square(x, y, b.rng.uniform(10.0, 22.0), "building", "residential"));
  }

  // Street grid every 300 m.
  const double extent = spec.town_radius_m;
  for (double x = -extent; x <= extent; x += 300.0) {
    objects.push_back(
        b.line({{x, -extent}, {x, 0.0}, {x, extent}}, "highway", "residential"));
  }
  for (double y = -extent; y <= extent; y += 300.0) {
    objects.push_back(
        b.line({{-extent, y}, {0.0, y}, {extent, y}}, "highway", "residential"));
  }
  // Ring road and two radial cycleways.
  std::vector<std::pair<double, double>> ring;
  for (int i = 0; i <= 36; ++i) {
    const double a = 2.0 * kPi * i / 36.0;
    ring.emplace_back(2000.0 * std::cos(a), 2000.0 * std::sin(a));
  }
  objects.push_back(b.line(ring, "highway", "primary"));
  objects.push_back(
      b.line({{-extent, 150.0}, {extent, 150.0}}, "highway", "cycleway"));
  objects.push_back(
      b.line({{150.0, -extent}, {150.0, extent}}, "highway", "cycleway"));

  // A river strip across the northern part of town.
  GeoObject river;
  river.id = "way/" + std::to_string(b.next_id++);
  river.geometry.type = GeometryType::Polygon;
  river.geometry.polygons.push_back({{b.at(-extent, 1250.0),
                                      b.at(extent, 1250.0),
                                      b.at(extent, 1420.0),
                                      b.at(-extent, 1420.0)}});
  river.tags["natural"] = "water";
  objects.push_back(std::move(river));

  return city;
}

FixtureSpec fixture_spec_a(std::uint64_t seed) {
  FixtureSpec spec;
  spec.city = "fixture_a";
  spec.center = LatLng{51.11, 17.03};
  spec.seed = seed;
  return spec;
}

FixtureSpec fixture_spec_b(std::uint64_t seed) {
  FixtureSpec spec;
  spec.city = "fixture_b";
  spec.center = LatLng{52.23, 21.01};
  spec.station_count = 18;
  spec.seed = derive_seed(seed, 0xB0B);
  return spec;
}

void write_fixture_store(const std::filesystem::path& root,
                         std::uint64_t seed) {
  for (const auto& spec : {fixture_spec_a(seed), fixture_spec_b(seed)}) {
    const FixtureCity city = make_fixture_city(spec);
    osm::CityStore store(root, city.city);
    store.write_objects(city.objects, "fixture:" + std::to_string(seed));
    store.write_stations(city.stations);
  }
}

}  // namespace hexstation::fixture
