#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <span>
#include <vector>

#include "morphkern/geometry.hpp"
#include "morphkern/laplacian.hpp"

namespace morphkern {

// Diagonal-covariance bandwidth of the Gaussian kernel, in meters per axis.
struct Bandwidth {
    double sigma_x = 1.0;
    double sigma_y = 1.0;

    bool operator==(const Bandwidth&) const = default;
};

Bandwidth make_bandwidth(double sigma_x, double sigma_y);

// exp(-[(ax-bx)^2/sx^2 + (ay-by)^2/sy^2]); in (0, 1], symmetric.
double gaussian_kernel(const GeoPoint& a, const GeoPoint& b, const Bandwidth& bw);

// K_ij = gaussian_kernel(node_i, node_j); symmetric with unit diagonal.
Eigen::MatrixXd kernel_matrix(const NodeSet& nodes, const Bandwidth& bw);

// Condition estimates above this abort the operator build.
inline constexpr double kMaxConditionEstimate = 1e12;

// Region-prior deformation of the Gaussian kernel,
//
//   k~(x, x') = k(x, x') - k_x^T (I + g L K)^{-1} g L k_x'
//
// with K and L assembled over one node set and (I + g L K) factorized once by
// pivoted LU. Immutable after construction; queries are reentrant.
class MorphOperator {
public:
    MorphOperator(NodeSet nodes, const RegionPartition& partition, const Bandwidth& bw,
                  double gamma);

    // Morphed kernel value for one query pair.
    double operator()(const GeoPoint& x, const GeoPoint& x2) const;

    // Base-kernel evaluations of x against every node.
    Eigen::VectorXd base_vector(const GeoPoint& x) const;

    // (I + g L K)^{-1} rhs, any number of right-hand sides.
    Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const;

    const NodeSet& nodes() const { return nodes_; }
    const Bandwidth& bandwidth() const { return bw_; }
    double gamma() const { return gamma_; }
    const Eigen::MatrixXd& kernel() const { return K_; }
    const LaplacianMatrix& laplacian() const { return lap_; }
    const Eigen::MatrixXd& gamma_laplacian() const { return gammaL_; }
    double condition_estimate() const { return cond_; }

private:
    NodeSet nodes_;
    Bandwidth bw_;
    double gamma_;
    Eigen::MatrixXd K_;
    LaplacianMatrix lap_;
    Eigen::MatrixXd gammaL_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double cond_ = 0.0;
};

MorphOperator build_morph_operator(NodeSet nodes, const RegionPartition& partition,
                                   const Bandwidth& bw, double gamma);

double morphed_kernel(const MorphOperator& op, const GeoPoint& x, const GeoPoint& x2);

// Morphed kernel against a fixed sample set with the solve hoisted out of the
// query loop: a dense sweep costs one base-vector build plus one mat-vec per
// query point.
class MorphedSampleKernel {
public:
    MorphedSampleKernel(const MorphOperator& op, std::span<const GeoPoint> sample_points);

    // w_i = k~(l, s_i) for every sample point.
    Eigen::VectorXd weights(const GeoPoint& l) const;

    const MorphOperator& op() const { return *op_; }

private:
    const MorphOperator* op_;
    std::vector<GeoPoint> samples_;
    Eigen::MatrixXd V_;  // node count x sample count
};

}  // namespace morphkern
