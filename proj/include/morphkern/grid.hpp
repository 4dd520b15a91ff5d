#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "morphkern/geometry.hpp"

namespace morphkern {

// Raster over the study area. Cell (ix, iy) has its center at
// origin + ((ix + 0.5), (iy + 0.5)) * cell_size; storage is row-major with y
// as the outer index.
struct GridGeometry {
    GeoPoint origin;
    double cell_size = 1.0;
    int width = 0;
    int height = 0;

    std::int64_t cell_count() const { return static_cast<std::int64_t>(width) * height; }
    std::int64_t index_of(int ix, int iy) const {
        return static_cast<std::int64_t>(iy) * width + ix;
    }
    GeoPoint cell_center(std::int64_t index) const {
        const int iy = static_cast<int>(index / width);
        const int ix = static_cast<int>(index % width);
        return {origin.x + (ix + 0.5) * cell_size, origin.y + (iy + 0.5) * cell_size};
    }
    bool operator==(const GridGeometry&) const = default;
};

GridGeometry make_grid_geometry(GeoPoint origin, double cell_size, int width, int height);

// All cell centers in storage order.
std::vector<GeoPoint> grid_cells(const GridGeometry& geom);

// Dense feature map; column i holds cell i's feature vector.
struct FeatureGrid {
    GridGeometry geom;
    Eigen::MatrixXd values;  // d x cell_count
};

// Dense class-id map.
struct ClassGrid {
    GridGeometry geom;
    std::vector<int> labels;  // cell_count entries
};

}  // namespace morphkern
