#pragma once

#include <numbers>

namespace collabmkt {

/// Geographic coordinate in decimal degrees.
struct GeoPoint {
    double lat = 0.0; // [-90, 90]
    double lon = 0.0; // [-180, 180]

    bool operator==(const GeoPoint&) const = default;
};

/// True when both coordinates are finite and within range.
bool geo_point_valid(const GeoPoint& p);

inline constexpr double earth_radius_km = 6371.0;

/// Farthest possible surface separation: half the great circle.
inline constexpr double half_circumference_km = std::numbers::pi * earth_radius_km;

/// Great-circle distance in kilometers on the R = 6371 km sphere
/// (haversine). Bit-for-bit symmetric in its arguments; result lies in
/// [0, half_circumference_km].
double great_circle_km(const GeoPoint& a, const GeoPoint& b);

} // namespace collabmkt
