#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hexstation/geo.hpp"

namespace hexstation::hexgrid {

// Grid level. Levels 0-15 are valid grid arithmetic; the station pipeline
// restricts itself to 9-11.
struct Resolution {
  int value = 9;

  bool operator==(const Resolution&) const = default;
};

inline constexpr int kMinResolution = 0;
inline constexpr int kMaxResolution = 15;

void validate_resolution(Resolution r);

// Mean cell area in square metres at a resolution. Cells of this grid all
// have exactly this spherical area (the tiling lives in an equal-area plane).
double cell_area_m2(Resolution r);

// Hexagon circumradius (= edge length) in the projection plane, metres.
double cell_edge_m(Resolution r);

// Identifier of one hexagonal cell. Packs resolution and axial coordinates
// into the low 60 bits of a 64-bit value, so the canonical text form is a
// 15-character lowercase hexadecimal string.
class CellId {
 public:
  CellId() = default;

  std::uint64_t id() const { return id_; }
  Resolution res() const;

  auto operator<=>(const CellId&) const = default;

  std::string to_string() const;
  static CellId from_string(std::string_view s);

  // Raw constructor; validates layout and coordinate ranges.
  static CellId from_raw(std::uint64_t id);

  static CellId from_axial(Resolution r, std::int64_t q, std::int64_t rr);
  std::int64_t axial_q() const;
  std::int64_t axial_r() const;

 private:
  std::uint64_t id_ = 0;
};

// The unique cell at resolution r containing p.
CellId cell_of(const LatLng& p, Resolution r);

// Geographic centre of a cell. cell_of(centroid(c), res(c)) == c.
LatLng centroid(CellId c);

// Cells at exactly grid distance k from c, sorted. ring(c, 0) == {c}.
std::vector<CellId> ring(CellId c, int k);

// Cells at grid distance <= k from c, sorted. |disk(c,k)| = 3k^2+3k+1.
std::vector<CellId> disk(CellId c, int k);

// Minimal number of adjacency steps between two cells of the same resolution.
int grid_distance(CellId a, CellId b);

// All cells at resolution r whose centroid lies within great-circle distance
// radius_m of p; always contains cell_of(p, r). Sorted.
std::vector<CellId> cells_within_radius(const LatLng& p, double radius_m,
                                        Resolution r);

// Closed boundary ring of a cell: 6 vertices, counterclockwise, first vertex
// not repeated. This grid realises the contract with zero pentagons.
std::vector<LatLng> cell_boundary(CellId c);

bool is_pentagon(CellId c);

// Cells whose hexagon could intersect the given lat/lon envelope
// (over-approximating superset, sorted). Envelope must not cross the
// antimeridian.
std::vector<CellId> cells_overlapping_envelope(const LatLng& lo,
                                               const LatLng& hi, Resolution r);

// Projection shared by the whole grid.
const LambertAzimuthalEqualArea& grid_projection();

}  // namespace hexstation::hexgrid
