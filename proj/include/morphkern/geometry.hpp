#pragma once

#include <Eigen/Core>
#include <optional>
#include <span>
#include <vector>

#include "morphkern/errors.hpp"

namespace morphkern {

using FeatureVec = Eigen::VectorXd;

// Planar location in meters (east, north). Callers project geographic
// coordinates beforehand.
struct GeoPoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const GeoPoint&) const = default;
};

bool is_finite(const GeoPoint& p);

double euclid_dist(const GeoPoint& a, const GeoPoint& b);

struct LabeledSample {
    GeoPoint location;
    FeatureVec feature;
    std::optional<int> source_class;  // diagnostic only
};

// Checks finiteness and that every sample shares one dimension; returns d.
int feature_dimension(std::span<const LabeledSample> samples);

struct Bounds {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool contains(const GeoPoint& p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    bool operator==(const Bounds&) const = default;
};

// Simple polygon as a closed vertex ring; the edge from back() to front() is
// implicit. Additional rings on one region act as even-odd holes.
struct Polygon {
    std::vector<GeoPoint> ring;

    double area() const;                     // shoelace, absolute value
    bool contains(const GeoPoint& p) const;  // even-odd rule, boundary inclusive
};

struct Region {
    int id = 0;
    int class_id = 0;
    std::vector<Polygon> polygons;
};

struct RegionPartition {
    Bounds bounds;
    std::vector<Region> regions;  // sorted by ascending id
};

// Validates invariants (unique ids, rings with >= 3 vertices and nonzero
// area, vertices inside bounds) and sorts regions by id.
RegionPartition make_region_partition(Bounds bounds, std::vector<Region> regions);

// Id of the first region (ascending id) whose polygon set contains p under
// the even-odd rule; boundary points count as inside. nullopt outside all.
std::optional<int> region_of(const RegionPartition& partition, const GeoPoint& p);

}  // namespace morphkern
