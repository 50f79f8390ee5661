#include "conflictgrid/geo.hpp"

#include <algorithm>
#include <cmath>

namespace conflictgrid {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
}

bool valid_lat_lon(const LatLon& p) {
  return p.lat_deg >= -90.0 && p.lat_deg <= 90.0 && p.lon_deg >= -180.0 && p.lon_deg < 180.0;
}

double great_circle_km(const LatLon& p, const LatLon& q) {
  if (p == q) return 0.0;
  const double phi_p = p.lat_deg * kDegToRad;
  const double phi_q = q.lat_deg * kDegToRad;
  const double half_dphi = (q.lat_deg - p.lat_deg) * kDegToRad / 2.0;
  const double half_dlam = (q.lon_deg - p.lon_deg) * kDegToRad / 2.0;
  const double s_lat = std::sin(half_dphi);
  const double s_lon = std::sin(half_dlam);
  const double h = s_lat * s_lat + std::cos(phi_p) * std::cos(phi_q) * s_lon * s_lon;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace conflictgrid
