#pragma once

namespace conflictgrid {

// All distances in this project are great-circle distances on a sphere of
// this radius. Fixed so that results are reproducible bit for bit.
inline constexpr double kEarthRadiusKm = 6371.0;

struct LatLon {
  double lat_deg = 0.0;  // [-90, 90]
  double lon_deg = 0.0;  // [-180, 180)

  friend bool operator==(const LatLon&, const LatLon&) = default;
};

bool valid_lat_lon(const LatLon& p);

// Haversine distance in km. Symmetric, nonnegative, exactly zero for p == q.
double great_circle_km(const LatLon& p, const LatLon& q);

}  // namespace conflictgrid
