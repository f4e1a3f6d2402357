#include "hexstation/geo.hpp"

#include <algorithm>

namespace hexstation {

double great_circle_m(const LatLng& a, const LatLng& b) {
  const double la = deg2rad(a.lat), lb = deg2rad(b.lat);
  const double dlat = lb - la;
  const double dlon = deg2rad(b.lon - a.lon);
  const double s1 = std::sin(dlat / 2.0), s2 = std::sin(dlon / 2.0);
  const double h = s1 * s1 + std::cos(la) * std::cos(lb) * s2 * s2;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

LambertAzimuthalEqualArea::LambertAzimuthalEqualArea(double center_lat_deg,
                                                     double center_lon_deg)
    : lat0_(deg2rad(center_lat_deg)),
      lon0_(deg2rad(center_lon_deg)),
      sin0_(std::sin(lat0_)),
      cos0_(std::cos(lat0_)) {}

PlanePoint LambertAzimuthalEqualArea::forward(const LatLng& p) const {
  const double lat = deg2rad(p.lat);
  const double dlon = deg2rad(p.lon) - lon0_;
  const double sinl = std::sin(lat), cosl = std::cos(lat);
  const double cosd = std::cos(dlon);
  double denom = 1.0 + sin0_ * sinl + cos0_ * cosl * cosd;
  // Degenerates only at the antipode of the projection centre.
  denom = std::max(denom, 1e-12);
  const double k = std::sqrt(2.0 / denom);
  return PlanePoint{kEarthRadiusM * k * cosl * std::sin(dlon),
                    kEarthRadiusM * k * (cos0_ * sinl - sin0_ * cosl * cosd)};
}

LatLng LambertAzimuthalEqualArea::inverse(const PlanePoint& q) const {
  const double rho = std::hypot(q.x, q.y);
  if (rho < 1e-9) return LatLng{rad2deg(lat0_), rad2deg(lon0_)};
  const double arg = std::clamp(rho / (2.0 * kEarthRadiusM), -1.0, 1.0);
  const double c = 2.0 * std::asin(arg);
  const double sinc = std::sin(c), cosc = std::cos(c);
  const double lat =
      std::asin(std::clamp(cosc * sin0_ + q.y * sinc * cos0_ / rho, -1.0, 1.0));
  const double lon = lon0_ + std::atan2(q.x * sinc,
                                        rho * cos0_ * cosc - q.y * sin0_ * sinc);
  return normalized_latlng(rad2deg(lat), rad2deg(lon));
}

AzimuthalEquidistant::AzimuthalEquidistant(const LatLng& center)
    : lat0_(deg2rad(center.lat)),
      lon0_(deg2rad(center.lon)),
      sin0_(std::sin(lat0_)),
      cos0_(std::cos(lat0_)) {}

PlanePoint AzimuthalEquidistant::forward(const LatLng& p) const {
  const double lat = deg2rad(p.lat);
  const double dlon = deg2rad(p.lon) - lon0_;
  const double sinl = std::sin(lat), cosl = std::cos(lat);
  const double cosd = std::cos(dlon);
  const double cosc = std::clamp(sin0_ * sinl + cos0_ * cosl * cosd, -1.0, 1.0);
  const double c = std::acos(cosc);
  if (c < 1e-12) return PlanePoint{0.0, 0.0};
  const double k = c / std::sin(c);
  return PlanePoint{kEarthRadiusM * k * cosl * std::sin(dlon),
                    kEarthRadiusM * k * (cos0_ * sinl - sin0_ * cosl * cosd)};
}

LatLng AzimuthalEquidistant::inverse(const PlanePoint& q) const {
  const double rho = std::hypot(q.x, q.y);
  if (rho < 1e-9) return LatLng{rad2deg(lat0_), rad2deg(lon0_)};
  const double c = rho / kEarthRadiusM;
  const double sinc = std::sin(c), cosc = std::cos(c);
  const double lat =
      std::asin(std::clamp(cosc * sin0_ + q.y * sinc * cos0_ / rho, -1.0, 1.0));
  const double lon = lon0_ + std::atan2(q.x * sinc,
                                        rho * cos0_ * cosc - q.y * sin0_ * sinc);
  return normalized_latlng(rad2deg(lat), rad2deg(lon));
}

}  // namespace hexstation
