#pragma once

#include <cmath>

#include "hexstation/errors.hpp"

namespace hexstation {

// Authalic sphere radius in metres; the same sphere model is used for
// distances, projections and areas so they stay mutually consistent.
inline constexpr double kEarthRadiusM = 6371007.180918475;

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

struct LatLng {
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, (-180, 180]

  bool operator==(const LatLng&) const = default;
};

inline bool valid_latlng(const LatLng& p) {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 &&
         p.lat <= 90.0 && p.lon > -180.0 && p.lon <= 180.0;
}

inline LatLng normalized_latlng(double lat, double lon) {
  if (!std::isfinite(lat) || !std::isfinite(lon))
    throw input_error("coordinates must be finite");
  if (lat < -90.0 || lat > 90.0)
    throw input_error("latitude out of range [-90, 90]");
  while (lon <= -180.0) lon += 360.0;
  while (lon > 180.0) lon -= 360.0;
  return LatLng{lat, lon};
}

// Great-circle distance in metres (haversine).
double great_circle_m(const LatLng& a, const LatLng& b);

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

// Lambert azimuthal equal-area projection on the authalic sphere. Equal-area
// everywhere; distortion grows with distance from the centre.
class LambertAzimuthalEqualArea {
 public:
  LambertAzimuthalEqualArea(double center_lat_deg, double center_lon_deg);

  PlanePoint forward(const LatLng& p) const;
  LatLng inverse(const PlanePoint& q) const;

 private:
  double lat0_, lon0_;  // radians
  double sin0_, cos0_;
};

// Azimuthal equidistant projection used for local planar measures (lengths,
// areas) around a city centre. Near the centre, planar distances match
// great-circle distances to second order.
class AzimuthalEquidistant {
 public:
  explicit AzimuthalEquidistant(const LatLng& center);

  PlanePoint forward(const LatLng& p) const;
  LatLng inverse(const PlanePoint& q) const;

 private:
  double lat0_, lon0_;
  double sin0_, cos0_;
};

}  // namespace hexstation
