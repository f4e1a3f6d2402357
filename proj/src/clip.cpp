#include "hexstation/clip.hpp"

#include <cmath>

namespace hexstation::study {

namespace {

double cross(const XY& o, const XY& a, const XY& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

XY intersect_lines(const XY& s, const XY& e, const XY& a, const XY& b) {
  const double dx1 = e.x - s.x, dy1 = e.y - s.y;
  const double dx2 = b.x - a.x, dy2 = b.y - a.y;
  const double den = dx1 * dy2 - dy1 * dx2;
  if (den == 0.0) return e;  // parallel; caller only asks at genuine crossings
  const double t = ((a.x - s.x) * dy2 - (a.y - s.y) * dx2) / den;
  return XY{s.x + t * dx1, s.y + t * dy1};
}

}  // namespace

double ring_area_signed(const std::vector<XY>& ring) {
  const std::size_t n = ring.size();
  if (n < 3) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const XY& p = ring[i];
    const XY& q = ring[(i + 1) % n];
    sum += p.x * q.y - q.x * p.y;
  }
  return 0.5 * sum;
}

double polyline_length(const std::vector<XY>& pts) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    len += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
  return len;
}

bool point_in_convex(const XY& p, const std::vector<XY>& ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i)
    if (cross(ring[i], ring[(i + 1) % n], p) < 0.0) return false;
  return true;
}

std::vector<XY> clip_ring_convex(const std::vector<XY>& subject,
                                 const std::vector<XY>& clip) {
  std::vector<XY> output = subject;
  const std::size_t n = clip.size();
  for (std::size_t i = 0; i < n && !output.empty(); ++i) {
    const XY& a = clip[i];
    const XY& b = clip[(i + 1) % n];
    std::vector<XY> input;
    input.swap(output);
    const std::size_t m = input.size();
    for (std::size_t j = 0; j < m; ++j) {
      const XY& s = input[j];
      const XY& e = input[(j + 1) % m];
      const bool s_in = cross(a, b, s) >= 0.0;
      const bool e_in = cross(a, b, e) >= 0.0;
      if (e_in) {
        if (!s_in) output.push_back(intersect_lines(s, e, a, b));
        output.push_back(e);
      } else if (s_in) {
        output.push_back(intersect_lines(s, e, a, b));
      }
    }
  }
  return output;
}

std::optional<std::pair<double, double>> clip_segment_convex(
    const XY& a, const XY& b, const std::vector<XY>& clip) {
  double t0 = 0.0, t1 = 1.0;
  const std::size_t n = clip.size();
  for (std::size_t i = 0; i < n; ++i) {
    const XY& v = clip[i];
    const XY& w = clip[(i + 1) % n];
    // Inward normal of CCW edge v->w.
    const double nx = -(w.y - v.y);
    const double ny = w.x - v.x;
    const double num = nx * (a.x - v.x) + ny * (a.y - v.y);
    const double den = nx * (b.x - a.x) + ny * (b.y - a.y);
    if (den == 0.0) {
      if (num < 0.0) return std::nullopt;
      continue;
    }
    const double t = -num / den;
    if (den > 0.0)
      t0 = std::max(t0, t);
    else
      t1 = std::min(t1, t);
    if (t0 > t1) return std::nullopt;
  }
  return std::make_pair(t0, t1);
}

}  // namespace hexstation::study
