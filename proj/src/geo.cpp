#include "collabmkt/geo.hpp"

#include <algorithm>
#include <cmath>

namespace collabmkt {

bool geo_point_valid(const GeoPoint& p) {
    return std::isfinite(p.lat) && std::isfinite(p.lon) &&
           p.lat >= -90.0 && p.lat <= 90.0 &&
           p.lon >= -180.0 && p.lon <= 180.0;
}

namespace {
constexpr double deg = std::numbers::pi / 180.0;
}

double great_circle_km(const GeoPoint& a, const GeoPoint& b) {
    // Absolute deltas keep the formula exactly symmetric under argument
    // swap; the remaining products are commutative in IEEE arithmetic.
    const double dphi = std::fabs(b.lat - a.lat) * deg;
    const double dlam = std::fabs(b.lon - a.lon) * deg;
    const double sp = std::sin(dphi / 2.0);
    const double sl = std::sin(dlam / 2.0);
    const double h =
        sp * sp + std::cos(a.lat * deg) * std::cos(b.lat * deg) * sl * sl;
    // h can creep above 1 by rounding near the antipode; clamp before asin.
    return 2.0 * earth_radius_km * std::asin(std::sqrt(std::min(h, 1.0)));
}

} // namespace collabmkt
