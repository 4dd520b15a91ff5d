#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "morphkern/geometry.hpp"

namespace morphkern {

// Node set for the region-prior graph: the sample locations themselves, or a
// lattice laid over the study area.
struct NodeSet {
    enum class Kind { samples, mesh };

    Kind kind = Kind::samples;
    double mesh_spacing = 0.0;  // set for Kind::mesh
    std::vector<GeoPoint> nodes;

    int size() const { return static_cast<int>(nodes.size()); }
};

NodeSet nodes_from_points(std::vector<GeoPoint> points);
NodeSet nodes_from_samples(std::span<const LabeledSample> samples);

// Lattice nodes at bounds.min + (i, j) * spacing in row-major order (y
// outer); the max edge is included when it lands exactly on the lattice.
NodeSet build_mesh_nodes(const Bounds& bounds, double spacing);

// w_ij = 1 iff i != j and both nodes resolve to the same region; nodes
// outside every region stay isolated.
Eigen::MatrixXd build_adjacency(const NodeSet& nodes, const RegionPartition& partition);

struct LaplacianMatrix {
    Eigen::MatrixXd W;  // symmetric 0/1, zero diagonal
    Eigen::MatrixXd L;  // D - W, rows sum to zero

    int n() const { return static_cast<int>(L.rows()); }
};

// L = D - W with d_ii = sum_j w_ij. Rejects W that is not square, symmetric,
// 0/1, and zero on the diagonal.
LaplacianMatrix build_laplacian(Eigen::MatrixXd W);

}  // namespace morphkern
