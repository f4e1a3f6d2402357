#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hexstation/errors.hpp"
#include "support/oracles.hpp"

using namespace hexstation;
using namespace hexstation::hexgrid;

namespace {
const LatLng kWroclaw{51.11, 17.03};
const LatLng kHelsinki{60.17, 24.94};
}  // namespace

TEST_CASE("cell_of round-trips through centroid") {
  Rng rng(101);
  for (const int res : {9, 10, 11}) {
    for (int i = 0; i < 300; ++i) {
      const auto c = oracles::random_cell(rng, kWroclaw, Resolution{res});
      CHECK(cell_of(centroid(c), Resolution{res}) == c);
    }
  }
  // Grid arithmetic works on the full 0-15 range too.
  for (const int res : {0, 3, 15}) {
    const auto c = cell_of(kWroclaw, Resolution{res});
    CHECK(cell_of(centroid(c), Resolution{res}) == c);
  }
}

TEST_CASE("nearby points share a cell") {
  Rng rng(102);
  for (int i = 0; i < 50; ++i) {
    const auto c = oracles::random_cell(rng, kWroclaw, Resolution{9});
    const LatLng ctr = centroid(c);
    // ~1 m apart, both in the cell interior.
    const LatLng a{ctr.lat + 0.5 / 111320.0, ctr.lon};
    const LatLng b{ctr.lat - 0.5 / 111320.0, ctr.lon};
    CHECK(cell_of(a, Resolution{9}) == c);
    CHECK(cell_of(b, Resolution{9}) == c);
  }
}

TEST_CASE("invalid coordinates are rejected") {
  CHECK_THROWS_AS(cell_of(LatLng{95.0, 0.0}, Resolution{9}), input_error);
  CHECK_THROWS_AS(cell_of(LatLng{0.0 / 0.0, 0.0}, Resolution{9}), input_error);
  CHECK_THROWS_AS(validate_resolution(Resolution{16}), input_error);
  CHECK_THROWS_AS(validate_resolution(Resolution{-1}), input_error);
}

TEST_CASE("mean res-9 cell area matches the published value") {
  Rng rng(103);
  double sum = 0.0;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    const auto c = oracles::random_cell(rng, kWroclaw, Resolution{9});
    sum += oracles::polygon_area_local(cell_boundary(c), centroid(c));
  }
  const double mean_ha = sum / n / 1e4;
  CHECK(mean_ha == doctest::Approx(10.53).epsilon(0.15));
}

TEST_CASE("ring cardinalities") {
  const auto c = cell_of(kWroclaw, Resolution{9});
  CHECK(ring(c, 0) == std::vector<CellId>{c});
  CHECK(ring(c, 1).size() == 6);
  CHECK(ring(c, 3).size() == 18);
  CHECK_THROWS_AS(ring(c, -1), input_error);
}

TEST_CASE("disk cardinalities and nesting") {
  Rng rng(104);
  const auto c = oracles::random_cell(rng, kWroclaw, Resolution{10});
  CHECK(disk(c, 0) == std::vector<CellId>{c});
  CHECK(disk(c, 2).size() == 19);
  for (int k = 1; k <= 6; ++k) {
    const auto d = disk(c, k);
    CHECK(d.size() == static_cast<std::size_t>(3 * k * k + 3 * k + 1));
    CHECK(ring(c, k).size() == static_cast<std::size_t>(6 * k));
    const auto prev = disk(c, k - 1);
    CHECK(std::includes(d.begin(), d.end(), prev.begin(), prev.end()));
  }
}

TEST_CASE("grid distance: identity, adjacency, BFS agreement") {
  Rng rng(105);
  const auto c = oracles::random_cell(rng, kWroclaw, Resolution{9});
  CHECK(grid_distance(c, c) == 0);
  for (const auto& n : ring(c, 1)) CHECK(grid_distance(c, n) == 1);

  for (int i = 0; i < 100; ++i) {
    const auto a = oracles::random_cell(rng, kWroclaw, Resolution{10}, 0.002);
    const auto d = disk(a, 10);
    const auto b = d[rng.next_below(d.size())];
    CHECK(grid_distance(a, b) == oracles::bfs_grid_distance(a, b, 12));
  }
}

TEST_CASE("grid distance is a metric") {
  Rng rng(106);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracles::random_cell(rng, kWroclaw, Resolution{9}, 0.01);
    const auto b = oracles::random_cell(rng, kWroclaw, Resolution{9}, 0.01);
    const auto c = oracles::random_cell(rng, kWroclaw, Resolution{9}, 0.01);
    CHECK(grid_distance(a, b) == grid_distance(b, a));
    CHECK((grid_distance(a, b) == 0) == (a == b));
    CHECK(grid_distance(a, c) <= grid_distance(a, b) + grid_distance(b, c));
  }
}

TEST_CASE("mixed resolutions are rejected") {
  const auto a = cell_of(kWroclaw, Resolution{9});
  const auto b = cell_of(kWroclaw, Resolution{10});
  CHECK_THROWS_AS(grid_distance(a, b), input_error);
}

TEST_CASE("cells_within_radius basics") {
  CHECK(cells_within_radius(kWroclaw, 0.0, Resolution{9}) ==
        std::vector<CellId>{cell_of(kWroclaw, Resolution{9})});
  CHECK_THROWS_AS(cells_within_radius(kWroclaw, -5.0, Resolution{9}),
                  input_error);

  const auto cells = cells_within_radius(kWroclaw, 2000.0, Resolution{9});
  CHECK(cells.size() >= 100);
  CHECK(cells.size() <= 170);
  // The equal-area construction keeps this latitude-independent.
  const auto north = cells_within_radius(kHelsinki, 2000.0, Resolution{9});
  CHECK(north.size() >= 100);
  CHECK(north.size() <= 170);
}

TEST_CASE("cells_within_radius equals the brute-force disk filter") {
  Rng rng(107);
  for (int i = 0; i < 10; ++i) {
    const LatLng p{kWroclaw.lat + rng.uniform(-0.1, 0.1),
                   kWroclaw.lon + rng.uniform(-0.1, 0.1)};
    const double radius = rng.uniform(100.0, 2500.0);
    CHECK(cells_within_radius(p, radius, Resolution{9}) ==
          oracles::brute_force_cells_within_radius(p, radius, Resolution{9}));
  }
}

TEST_CASE("cells_within_radius is monotone in the radius") {
  Rng rng(108);
  for (int i = 0; i < 10; ++i) {
    const LatLng p{kWroclaw.lat + rng.uniform(-0.1, 0.1),
                   kWroclaw.lon + rng.uniform(-0.1, 0.1)};
    const double r1 = rng.uniform(0.0, 1500.0);
    const double r2 = r1 + rng.uniform(0.0, 1500.0);
    const auto small = cells_within_radius(p, r1, Resolution{10});
    const auto large = cells_within_radius(p, r2, Resolution{10});
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST_CASE("cell boundary: six CCW vertices containing the centroid") {
  Rng rng(109);
  for (const int res : {9, 10, 11}) {
    const auto c = oracles::random_cell(rng, kWroclaw, Resolution{res});
    const auto boundary = cell_boundary(c);
    REQUIRE(boundary.size() == 6);
    CHECK_FALSE(is_pentagon(c));

    const LatLng ctr = centroid(c);
    AzimuthalEquidistant proj(ctr);
    std::vector<study::XY> xy;
    for (const auto& v : boundary) {
      const auto q = proj.forward(v);
      xy.push_back({q.x, q.y});
    }
    CHECK(study::ring_area_signed(xy) > 0.0);  // counterclockwise
    CHECK(study::point_in_convex({0.0, 0.0}, xy));

    const double area = std::fabs(study::ring_area_signed(xy));
    CHECK(area == doctest::Approx(cell_area_m2(Resolution{res})).epsilon(0.2));
  }
}

TEST_CASE("cell ids serialize as 15 lowercase hex characters") {
  Rng rng(110);
  for (int i = 0; i < 100; ++i) {
    const auto c = oracles::random_cell(rng, kWroclaw, Resolution{11});
    const std::string s = c.to_string();
    CHECK(s.size() == 15);
    for (const char ch : s)
      CHECK(((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f')));
    CHECK(CellId::from_string(s) == c);
  }
  CHECK_THROWS_AS(CellId::from_string("zz"), parse_error);
  CHECK_THROWS_AS(CellId::from_string("gggggggggggggg0"), parse_error);
  CHECK_THROWS_AS(CellId::from_raw(~0ull), input_error);
}

TEST_CASE("envelope enumeration over-approximates") {
  Rng rng(111);
  for (int i = 0; i < 10; ++i) {
    const LatLng lo{kWroclaw.lat + rng.uniform(-0.05, 0.0),
                    kWroclaw.lon + rng.uniform(-0.05, 0.0)};
    const LatLng hi{lo.lat + rng.uniform(0.001, 0.02),
                    lo.lon + rng.uniform(0.001, 0.02)};
    const auto cells = cells_overlapping_envelope(lo, hi, Resolution{9});
    // Every corner's cell must be present.
    for (const LatLng p : {lo, hi, LatLng{lo.lat, hi.lon}, LatLng{hi.lat, lo.lon}})
      CHECK(std::binary_search(cells.begin(), cells.end(),
                               cell_of(p, Resolution{9})));
  }
}
