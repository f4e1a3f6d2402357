#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hexstation::study {

struct XY {
  double x = 0.0;
  double y = 0.0;
};

// Signed shoelace area of a ring given without a closing duplicate vertex.
double ring_area_signed(const std::vector<XY>& ring);

double polyline_length(const std::vector<XY>& pts);

// Point-in-polygon for a convex CCW ring (boundary counts as inside).
bool point_in_convex(const XY& p, const std::vector<XY>& ring);

// Sutherland-Hodgman: clips an arbitrary subject ring against a convex CCW
// ring. Returns the clipped ring (possibly empty).
std::vector<XY> clip_ring_convex(const std::vector<XY>& subject,
                                 const std::vector<XY>& clip);

// Parametric clip of segment a->b against a convex CCW ring: the contained
// part is a+(b-a)t for t in [first, second]. nullopt when disjoint.
std::optional<std::pair<double, double>> clip_segment_convex(
    const XY& a, const XY& b, const std::vector<XY>& clip);

}  // namespace hexstation::study
