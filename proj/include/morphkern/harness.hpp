#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morphkern/classify.hpp"
#include "morphkern/interp.hpp"
#include "morphkern/rng.hpp"

namespace morphkern {

enum class PartitionLayout { three_strip, voronoi3 };

const char* layout_name(PartitionLayout layout);

// Synthetic benchmark configuration. Defaults reproduce the stock protocol:
// a 100 m x 100 m domain split into three regions, 1 m output cells, 20
// trials per density.
struct ScenarioConfig {
    Bounds domain{0.0, 0.0, 100.0, 100.0};
    PartitionLayout layout = PartitionLayout::three_strip;
    int images_per_region = 1;
    int feature_dim = 16;
    int class_count = 45;
    double feature_noise_sigma = 0.1;
    std::uint64_t rng_seed = 42;
    int trials = 20;
    std::vector<int> densities{1, 2, 3, 5, 10};
    double gamma = 100.0;
    double mesh_spacing = 5.0;
    std::vector<Bandwidth> bandwidth_grid = default_bandwidth_grid();
};

// One unit-norm feature vector per class, pairwise dot products <= 0.9.
struct PrototypeBank {
    Eigen::MatrixXd prototypes;  // d x C, unit-norm columns

    int dim() const { return static_cast<int>(prototypes.rows()); }
    int class_count() const { return static_cast<int>(prototypes.cols()); }
};

PrototypeBank make_prototype_bank(int feature_dim, int class_count, Rng& rng);

// Nearest-prototype head: weights row c = prototype_c, zero bias.
LinearClassifier make_synth_classifier(const PrototypeBank& bank);

// Three-strip or Voronoi partition carrying three distinct class ids drawn
// from [0, class_count).
RegionPartition make_partition(const ScenarioConfig& config, Rng& rng);

// images_per_region locations uniform inside each region; feature = region
// prototype + Gaussian noise, renormalized to unit norm.
std::vector<LabeledSample> sample_scenario(const RegionPartition& partition,
                                           const ScenarioConfig& config,
                                           const PrototypeBank& bank, Rng& rng);

// 1 m cells covering the domain.
GridGeometry benchmark_grid(const Bounds& domain);

// Ground-truth class per cell center via region_of.
ClassGrid rasterize_truth(const RegionPartition& partition, const GridGeometry& geom);

struct TrialResult {
    int density = 0;
    int trial = 0;
    Method method = Method::idw;
    bool ok = false;
    std::string error;
    double miou = 0.0;
    double noise_pct = 0.0;
    std::int64_t degenerate_queries = 0;
    std::int64_t exact_hits = 0;
    double wall_ms = 0.0;  // diagnostic only, never serialized
};

struct BenchmarkReport {
    ScenarioConfig config;
    std::vector<Method> methods;
    std::vector<TrialResult> results;  // density-major, then trial, then method

    double mean_miou(Method m, int density) const;
    double mean_noise(Method m, int density) const;

    // density rows x method {miou, noise} columns, 9 significant digits.
    std::string summary_csv() const;
    // one row per (density, trial, method).
    std::string trials_csv() const;
    // pretty table in the familiar mIoU-percent / noise-percent layout.
    std::string table_text() const;
};

// Full sweep: per density and trial, regenerate the scenario, tune the
// bandwidth by LOOCV, run all four methods on the 1 m grid, classify, and
// score against the rasterized ground truth. Failed trials are recorded, not
// fatal. Deterministic for a fixed config, serial or parallel.
BenchmarkReport run_benchmark(const ScenarioConfig& config);

}  // namespace morphkern
