#include "morphkern/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace morphkern {

bool is_finite(const GeoPoint& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double euclid_dist(const GeoPoint& a, const GeoPoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

int feature_dimension(std::span<const LabeledSample> samples) {
    if (samples.empty()) throw EmptySamples();
    const int d = static_cast<int>(samples.front().feature.size());
    if (d < 1) throw DimensionMismatch("feature dimension must be >= 1");
    for (const auto& s : samples) {
        if (!is_finite(s.location)) throw InvalidArgument("sample location is not finite");
        if (static_cast<int>(s.feature.size()) != d)
            throw DimensionMismatch("samples mix feature dimensions");
        if (!s.feature.allFinite()) throw InvalidArgument("sample feature is not finite");
    }
    return d;
}

double Polygon::area() const {
    const size_t n = ring.size();
    if (n < 3) return 0.0;
    double twice = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const GeoPoint& a = ring[i];
        const GeoPoint& b = ring[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(twice);
}

namespace {

bool on_segment(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
    const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross != 0.0) return false;
    const double dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    return dot >= 0.0 && dot <= len2;
}

bool on_ring(const GeoPoint& p, const Polygon& poly) {
    const size_t n = poly.ring.size();
    for (size_t i = 0; i < n; ++i) {
        if (on_segment(p, poly.ring[i], poly.ring[(i + 1) % n])) return true;
    }
    return false;
}

// Even-odd ray cast; boundary points are not handled here.
bool ring_interior(const GeoPoint& p, const Polygon& poly) {
    const size_t n = poly.ring.size();
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const GeoPoint& a = poly.ring[i];
        const GeoPoint& b = poly.ring[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

// Even-odd over the whole ring set, boundary inclusive.
bool region_contains(const Region& region, const GeoPoint& p) {
    bool parity = false;
    for (const auto& poly : region.polygons) {
        if (poly.ring.size() < 3) continue;
        if (on_ring(p, poly)) return true;
        if (ring_interior(p, poly)) parity = !parity;
    }
    return parity;
}

}  // namespace

bool Polygon::contains(const GeoPoint& p) const {
    if (ring.size() < 3) return false;
    return on_ring(p, *this) || ring_interior(p, *this);
}

RegionPartition make_region_partition(Bounds bounds, std::vector<Region> regions) {
    if (!(bounds.width() > 0.0) || !(bounds.height() > 0.0))
        throw InvalidArgument("partition bounds must have positive extent");
    std::set<int> ids;
    for (const auto& region : regions) {
        if (!ids.insert(region.id).second)
            throw InvalidArgument("duplicate region id " + std::to_string(region.id));
        if (region.polygons.empty())
            throw InvalidArgument("region " + std::to_string(region.id) + " has no polygons");
        for (const auto& poly : region.polygons) {
            if (poly.ring.size() < 3)
                throw InvalidArgument("polygon ring needs at least 3 vertices");
            if (!(poly.area() > 0.0)) throw InvalidArgument("polygon ring has zero area");
            for (const auto& v : poly.ring) {
                if (!is_finite(v)) throw InvalidArgument("polygon vertex is not finite");
                if (!bounds.contains(v))
                    throw InvalidArgument("polygon vertex lies outside the domain bounds");
            }
        }
    }
    std::sort(regions.begin(), regions.end(),
              [](const Region& a, const Region& b) { return a.id < b.id; });
    return RegionPartition{bounds, std::move(regions)};
}

std::optional<int> region_of(const RegionPartition& partition, const GeoPoint& p) {
    if (!is_finite(p)) throw InvalidArgument("query point is not finite");
    for (const auto& region : partition.regions) {
        if (region_contains(region, p)) return region.id;
    }
    return std::nullopt;
}

}  // namespace morphkern
