#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "hexstation/buckets.hpp"
#include "hexstation/clip.hpp"
#include "hexstation/geo.hpp"
#include "hexstation/hexgrid.hpp"
#include "hexstation/rng.hpp"

namespace oracles {

using hexstation::LatLng;
using hexstation::Rng;
namespace hexgrid = hexstation::hexgrid;

// Breadth-first search over ring-1 adjacency; the reference for
// grid_distance.
inline int bfs_grid_distance(hexgrid::CellId from, hexgrid::CellId to,
                             int max_depth) {
  if (from == to) return 0;
  std::set<hexgrid::CellId> seen{from};
  std::deque<std::pair<hexgrid::CellId, int>> queue{{from, 0}};
  while (!queue.empty()) {
    const auto [cell, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    for (const auto& n : hexgrid::ring(cell, 1)) {
      if (n == to) return depth + 1;
      if (seen.insert(n).second) queue.emplace_back(n, depth + 1);
    }
  }
  return -1;
}

// Brute-force disk filter for cells_within_radius. The disk radius follows
// the radius/(edge*sqrt(3)) estimate padded for the grid's worst-case shape
// distortion over the test areas.
inline std::vector<hexgrid::CellId> brute_force_cells_within_radius(
    const LatLng& p, double radius_m, hexgrid::Resolution r) {
  const auto origin = hexgrid::cell_of(p, r);
  if (radius_m <= 0.0) return {origin};
  const double edge = hexgrid::cell_edge_m(r);
  const int k_safe =
      static_cast<int>(std::ceil(2.0 * radius_m / (edge * std::sqrt(3.0)))) + 2;
  std::vector<hexgrid::CellId> out;
  for (const auto& c : hexgrid::disk(origin, k_safe)) {
    if (c == origin ||
        hexstation::great_circle_m(p, hexgrid::centroid(c)) <= radius_m)
      out.push_back(c);
  }
  return out;
}

// Uniform random cell near a point (random offsets within a bounding box).
inline hexgrid::CellId random_cell(Rng& rng, const LatLng& around,
                                   hexgrid::Resolution r,
                                   double half_deg = 0.15) {
  const double lat = around.lat + rng.uniform(-half_deg, half_deg);
  const double lon = around.lon + rng.uniform(-half_deg, half_deg);
  return hexgrid::cell_of(LatLng{lat, lon}, r);
}

// Shoelace area of a latitide/longitude ring measured in a local azimuthal
// equidistant plane; independent of the clipping path.
inline double polygon_area_local(const std::vector<LatLng>& ring,
                                 const LatLng& center) {
  hexstation::AzimuthalEquidistant proj(center);
  std::vector<hexstation::study::XY> xy;
  for (const auto& v : ring) {
    const auto q = proj.forward(v);
    xy.push_back({q.x, q.y});
  }
  return std::fabs(hexstation::study::ring_area_signed(xy));
}

// Monte-Carlo split of a polygon's area over cells: samples uniformly in the
// ring's bounding box, keeps inside points, assigns them by cell_of.
inline std::map<hexgrid::CellId, double> mc_polygon_area_by_cell(
    const std::vector<LatLng>& ring, hexgrid::Resolution res,
    const LatLng& center, std::size_t samples, Rng& rng, double* total_out) {
  hexstation::AzimuthalEquidistant proj(center);
  std::vector<hexstation::study::XY> xy;
  for (const auto& v : ring) {
    const auto q = proj.forward(v);
    xy.push_back({q.x, q.y});
  }
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& p : xy) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  auto inside = [&](const hexstation::study::XY& p) {
    // Even-odd rule; fine for the simple test polygons.
    bool in = false;
    const std::size_t n = xy.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      if ((xy[i].y > p.y) != (xy[j].y > p.y) &&
          p.x < (xy[j].x - xy[i].x) * (p.y - xy[i].y) / (xy[j].y - xy[i].y) +
                    xy[i].x)
        in = !in;
    }
    return in;
  };
  const double box_area = (xmax - xmin) * (ymax - ymin);
  std::map<hexgrid::CellId, double> hits;
  std::size_t in_count = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const hexstation::study::XY p{rng.uniform(xmin, xmax),
                                  rng.uniform(ymin, ymax)};
    if (!inside(p)) continue;
    ++in_count;
    hits[hexgrid::cell_of(proj.inverse({p.x, p.y}), res)] += 1.0;
  }
  const double per_sample = box_area / static_cast<double>(samples);
  for (auto& [cell, v] : hits) v *= per_sample;
  if (total_out) *total_out = static_cast<double>(in_count) * per_sample;
  return hits;
}

// Monte-Carlo split of a polyline's length over cells: samples uniformly
// along the arc length.
inline std::map<hexgrid::CellId, double> mc_line_length_by_cell(
    const std::vector<LatLng>& line, hexgrid::Resolution res,
    const LatLng& center, std::size_t samples, Rng& rng, double* total_out) {
  hexstation::AzimuthalEquidistant proj(center);
  std::vector<hexstation::study::XY> xy;
  for (const auto& v : line) {
    const auto q = proj.forward(v);
    xy.push_back({q.x, q.y});
  }
  std::vector<double> cum{0.0};
  for (std::size_t i = 1; i < xy.size(); ++i)
    cum.push_back(cum.back() +
                  std::hypot(xy[i].x - xy[i - 1].x, xy[i].y - xy[i - 1].y));
  const double total = cum.back();
  std::map<hexgrid::CellId, double> lengths;
  for (std::size_t s = 0; s < samples; ++s) {
    const double t = rng.next_double() * total;
    const auto it = std::upper_bound(cum.begin(), cum.end(), t);
    const auto i = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cum.begin(), cum.size() - 1));
    const double seg = cum[i] - cum[i - 1];
    const double f = seg > 0.0 ? (t - cum[i - 1]) / seg : 0.0;
    const hexstation::study::XY p{xy[i - 1].x + f * (xy[i].x - xy[i - 1].x),
                                  xy[i - 1].y + f * (xy[i].y - xy[i - 1].y)};
    lengths[hexgrid::cell_of(proj.inverse({p.x, p.y}), res)] +=
        total / static_cast<double>(samples);
  }
  if (total_out) *total_out = total;
  return lengths;
}

}  // namespace oracles
