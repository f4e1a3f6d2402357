#include "hexstation/hexgrid.hpp"

#include <algorithm>
#include <array>
#include <cinttypes>
#include <cmath>
#include <cstdio>

#include "hexstation/errors.hpp"

namespace hexstation::hexgrid {

namespace {

// Mean hexagon area at level 9; successive levels scale by 1/7, mirroring the
// aperture of hierarchical hexagonal grids.
constexpr double kAreaRes9M2 = 105300.0;

// Grid plane: Lambert azimuthal equal-area centred on Europe. Cells are
// regular pointy-top hexagons in this plane, so every cell has exactly the
// nominal spherical area; shape distortion stays below ~10% across Europe
// and the projection degenerates only near the antipode (South Pacific).
constexpr double kCenterLat = 52.0;
constexpr double kCenterLon = 10.0;

constexpr double kSqrt3 = 1.7320508075688772;

// Axial coordinates are stored biased by kAxialBias in 28-bit fields.
constexpr std::int64_t kAxialBias = 1ll << 27;
constexpr std::int64_t kAxialMax = (1ll << 27) - 1;

struct Axial {
  std::int64_t q;
  std::int64_t r;
};

constexpr std::array<Axial, 6> kDirections = {{
    {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1},
}};

double size_table[kMaxResolution + 1];
double area_table[kMaxResolution + 1];

const bool tables_ready = [] {
  for (int r = 0; r <= kMaxResolution; ++r) {
    area_table[r] = kAreaRes9M2 * std::pow(7.0, 9 - r);
    size_table[r] = std::sqrt(2.0 * area_table[r] / (3.0 * kSqrt3));
  }
  return true;
}();

PlanePoint axial_center(Resolution res, Axial a) {
  const double s = size_table[res.value];
  return PlanePoint{s * kSqrt3 * (static_cast<double>(a.q) + a.r / 2.0),
                    s * 1.5 * static_cast<double>(a.r)};
}

Axial plane_to_axial(Resolution res, const PlanePoint& p) {
  const double s = size_table[res.value];
  const double qf = (kSqrt3 / 3.0 * p.x - p.y / 3.0) / s;
  const double rf = (2.0 / 3.0 * p.y) / s;
  // Cube rounding.
  const double sf = -qf - rf;
  double q = std::round(qf), r = std::round(rf), cs = std::round(sf);
  const double dq = std::fabs(q - qf), dr = std::fabs(r - rf),
               ds = std::fabs(cs - sf);
  if (dq > dr && dq > ds) {
    q = -r - cs;
  } else if (dr > ds) {
    r = -q - cs;
  }
  return Axial{static_cast<std::int64_t>(q), static_cast<std::int64_t>(r)};
}

std::int64_t hex_distance(Axial a, Axial b) {
  const std::int64_t dq = a.q - b.q;
  const std::int64_t dr = a.r - b.r;
  return (std::llabs(dq) + std::llabs(dr) + std::llabs(dq + dr)) / 2;
}

Axial axial_of(CellId c) { return Axial{c.axial_q(), c.axial_r()}; }

}  // namespace

void validate_resolution(Resolution r) {
  if (r.value < kMinResolution || r.value > kMaxResolution)
    throw input_error("resolution out of range 0-15: " +
                      std::to_string(r.value));
}

double cell_area_m2(Resolution r) {
  validate_resolution(r);
  return area_table[r.value];
}

double cell_edge_m(Resolution r) {
  validate_resolution(r);
  return size_table[r.value];
}

const LambertAzimuthalEqualArea& grid_projection() {
  static const LambertAzimuthalEqualArea proj(kCenterLat, kCenterLon);
  return proj;
}

Resolution CellId::res() const {
  return Resolution{static_cast<int>((id_ >> 56) & 0xF)};
}

std::int64_t CellId::axial_q() const {
  return static_cast<std::int64_t>((id_ >> 28) & 0xFFFFFFF) - kAxialBias;
}

std::int64_t CellId::axial_r() const {
  return static_cast<std::int64_t>(id_ & 0xFFFFFFF) - kAxialBias;
}

CellId CellId::from_axial(Resolution r, std::int64_t q, std::int64_t rr) {
  validate_resolution(r);
  if (q < -kAxialBias || q > kAxialMax || rr < -kAxialBias || rr > kAxialMax)
    throw input_error("cell coordinates out of representable range");
  CellId c;
  c.id_ = (static_cast<std::uint64_t>(r.value) << 56) |
          (static_cast<std::uint64_t>(q + kAxialBias) << 28) |
          static_cast<std::uint64_t>(rr + kAxialBias);
  return c;
}

CellId CellId::from_raw(std::uint64_t id) {
  if (id >> 60)
    throw input_error("invalid cell id: high bits set");
  CellId c;
  c.id_ = id;
  validate_resolution(c.res());
  return c;
}

std::string CellId::to_string() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%015" PRIx64, id_);
  return std::string(buf, 15);
}

CellId CellId::from_string(std::string_view s) {
  if (s.size() != 15)
    throw parse_error("cell id must be 15 hexadecimal characters, got '" +
                      std::string(s) + "'");
  std::uint64_t v = 0;
  for (char ch : s) {
    v <<= 4;
    if (ch >= '0' && ch <= '9')
      v |= static_cast<std::uint64_t>(ch - '0');
    else if (ch >= 'a' && ch <= 'f')
      v |= static_cast<std::uint64_t>(ch - 'a' + 10);
    else
      throw parse_error("cell id contains non-hex character: '" +
                        std::string(s) + "'");
  }
  return from_raw(v);
}

CellId cell_of(const LatLng& p, Resolution r) {
  if (!valid_latlng(p)) throw input_error("invalid coordinates");
  validate_resolution(r);
  const Axial a = plane_to_axial(r, grid_projection().forward(p));
  return CellId::from_axial(r, a.q, a.r);
}

LatLng centroid(CellId c) {
  return grid_projection().inverse(axial_center(c.res(), axial_of(c)));
}

std::vector<CellId> ring(CellId c, int k) {
  if (k < 0) throw input_error("ring radius must be non-negative");
  if (k == 0) return {c};
  const Resolution res = c.res();
  std::vector<CellId> out;
  out.reserve(static_cast<std::size_t>(6 * k));
  Axial cur{c.axial_q() + kDirections[4].q * k,
            c.axial_r() + kDirections[4].r * k};
  for (const Axial& dir : kDirections) {
    for (int step = 0; step < k; ++step) {
      out.push_back(CellId::from_axial(res, cur.q, cur.r));
      cur.q += dir.q;
      cur.r += dir.r;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CellId> disk(CellId c, int k) {
  if (k < 0) throw input_error("disk radius must be non-negative");
  const Resolution res = c.res();
  const Axial center = axial_of(c);
  std::vector<CellId> out;
  out.reserve(static_cast<std::size_t>(3 * k * (k + 1) + 1));
  for (std::int64_t dq = -k; dq <= k; ++dq) {
    const std::int64_t lo = std::max<std::int64_t>(-k, -dq - k);
    const std::int64_t hi = std::min<std::int64_t>(k, -dq + k);
    for (std::int64_t dr = lo; dr <= hi; ++dr)
      out.push_back(CellId::from_axial(res, center.q + dq, center.r + dr));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int grid_distance(CellId a, CellId b) {
  if (a.res() != b.res())
    throw input_error("grid_distance requires cells of the same resolution");
  return static_cast<int>(hex_distance(axial_of(a), axial_of(b)));
}

std::vector<CellId> cells_within_radius(const LatLng& p, double radius_m,
                                        Resolution r) {
  if (!valid_latlng(p)) throw input_error("invalid coordinates");
  if (!(radius_m >= 0.0)) throw input_error("radius must be non-negative");
  validate_resolution(r);

  const CellId origin = cell_of(p, r);
  if (radius_m == 0.0) return {origin};

  // Worst-case map stretch of a ground distance at p: the tangential scale of
  // the equal-area projection, sec(theta/2), theta = angular distance from
  // the grid centre.
  const double theta =
      great_circle_m(p, LatLng{kCenterLat, kCenterLon}) / kEarthRadiusM;
  const double half = std::min(theta / 2.0, 1.5);
  const double stretch = 1.0 / std::cos(half);

  // Centres at grid distance k are at least 1.5*size*k apart in the plane.
  const double size = size_table[r.value];
  const int k =
      static_cast<int>(std::ceil(radius_m * stretch / (1.5 * size))) + 2;

  std::vector<CellId> out;
  for (const CellId& c : disk(origin, k)) {
    if (c == origin || great_circle_m(p, centroid(c)) <= radius_m)
      out.push_back(c);
  }
  return out;  // disk() is sorted, filtering preserves order
}

std::vector<LatLng> cell_boundary(CellId c) {
  const Resolution res = c.res();
  const double s = size_table[res.value];
  const PlanePoint ctr = axial_center(res, axial_of(c));
  std::vector<LatLng> verts;
  verts.reserve(6);
  // Pointy-top vertices at 30, 90, ..., 330 degrees; counterclockwise.
  for (int i = 0; i < 6; ++i) {
    const double ang = kPi / 180.0 * (60.0 * i + 30.0);
    verts.push_back(grid_projection().inverse(
        PlanePoint{ctr.x + s * std::cos(ang), ctr.y + s * std::sin(ang)}));
  }
  return verts;
}

bool is_pentagon(CellId) { return false; }

std::vector<CellId> cells_overlapping_envelope(const LatLng& lo,
                                               const LatLng& hi,
                                               Resolution r) {
  if (!valid_latlng(lo) || !valid_latlng(hi))
    throw input_error("invalid envelope coordinates");
  validate_resolution(r);

  const auto& proj = grid_projection();
  // The envelope is tiny at city scale; sampling its corners and edge
  // midpoints bounds its image in the plane.
  const double lats[3] = {lo.lat, (lo.lat + hi.lat) / 2.0, hi.lat};
  const double lons[3] = {lo.lon, (lo.lon + hi.lon) / 2.0, hi.lon};
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (double lat : lats)
    for (double lon : lons) {
      const PlanePoint q = proj.forward(LatLng{lat, lon});
      xmin = std::min(xmin, q.x);
      xmax = std::max(xmax, q.x);
      ymin = std::min(ymin, q.y);
      ymax = std::max(ymax, q.y);
    }
  const double s = size_table[r.value];
  xmin -= 2.0 * s;
  xmax += 2.0 * s;
  ymin -= 2.0 * s;
  ymax += 2.0 * s;

  const auto rlo = static_cast<std::int64_t>(std::floor(ymin / (1.5 * s))) - 1;
  const auto rhi = static_cast<std::int64_t>(std::ceil(ymax / (1.5 * s))) + 1;
  std::vector<CellId> out;
  for (std::int64_t rr = rlo; rr <= rhi; ++rr) {
    const auto qlo = static_cast<std::int64_t>(
        std::floor(xmin / (kSqrt3 * s) - rr / 2.0)) - 1;
    const auto qhi = static_cast<std::int64_t>(
        std::ceil(xmax / (kSqrt3 * s) - rr / 2.0)) + 1;
    for (std::int64_t q = qlo; q <= qhi; ++q)
      out.push_back(CellId::from_axial(r, q, rr));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hexstation::hexgrid
