#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "morphkern/grid.hpp"
#include "morphkern/kernels.hpp"

namespace morphkern {

enum class Method { idw, gaussian, smsk, smmk };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct InterpolatorSpec {
    Method method = Method::idw;
    std::optional<Bandwidth> bandwidth;  // required for kernel methods
    double gamma = 100.0;                // morph strength, >= 0
    double mesh_spacing = 5.0;           // SMMK lattice step
};

struct InterpolationDiagnostics {
    std::int64_t degenerate_query_count = 0;  // NW denominator under guard
    std::int64_t exact_hit_count = 0;         // IDW zero-distance branch
    double condition_estimate = 0.0;          // morph operator, when one was built
};

// Relative guard under which the NW denominator counts as degenerate.
inline constexpr double kNwDenominatorGuard = 1e-12;

// Inverse distance weighting with normalized weights 1/d; an exact location
// match returns that sample's feature (lowest index wins).
FeatureVec idw_interpolate(std::span<const LabeledSample> samples, const GeoPoint& l,
                           InterpolationDiagnostics* diag = nullptr);

using WeightFn = std::function<double(const GeoPoint& query, const GeoPoint& sample)>;

// Nadaraya-Watson weighted mean under an arbitrary kernel. A degenerate
// denominator falls back to the Euclidean-nearest sample's feature.
FeatureVec nw_interpolate(std::span<const LabeledSample> samples, const GeoPoint& l,
                          const WeightFn& weight_fn, InterpolationDiagnostics* diag = nullptr);

// sigma in {1, 2, 5, 10, 20, 50} m, all (sigma_x, sigma_y) pairs.
std::vector<Bandwidth> default_bandwidth_grid();

// Sum over samples of the squared leave-one-out NW-Gaussian residual.
double loocv_error(std::span<const LabeledSample> samples, const Bandwidth& bw);

// Candidate minimizing loocv_error; ties go to smaller sigma_x then sigma_y.
Bandwidth tune_bandwidth_loocv(std::span<const LabeledSample> samples,
                               std::span<const Bandwidth> candidates);

struct DenseMapResult {
    FeatureGrid grid;
    InterpolationDiagnostics diagnostics;
};

// Evaluates the chosen interpolator at every cell center. SMSK/SMMK build one
// MorphOperator and reuse it for the whole sweep; cells may be evaluated in
// parallel and the output is independent of the worker count.
DenseMapResult dense_feature_map(std::span<const LabeledSample> samples,
                                 const InterpolatorSpec& spec, const GridGeometry& geom,
                                 const RegionPartition* partition = nullptr);

}  // namespace morphkern
