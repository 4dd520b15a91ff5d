#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "morphkern/classify.hpp"
#include "morphkern/geometry.hpp"
#include "morphkern/grid.hpp"

namespace morphkern {

// All writers are atomic (write temp file, rename) and format doubles with 9
// significant digits, so write -> read -> write reproduces files byte for
// byte.

// Regions JSON:
//   {"bounds": [xmin, ymin, xmax, ymax],
//    "regions": [{"id": 1, "class": 7, "polygons": [[[x, y], ...], ...]}]}
RegionPartition read_regions(const std::filesystem::path& path);
void write_regions(const std::filesystem::path& path, const RegionPartition& partition);

// Samples CSV with header x,y,f0,...,f{d-1}[,class].
std::vector<LabeledSample> read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path, std::span<const LabeledSample> samples);

// Classifier CSV with header class_id,w0,...,w{d-1},bias.
LinearClassifier read_classifier(const std::filesystem::path& path);
void write_classifier(const std::filesystem::path& path, const LinearClassifier& clf);

// Class raster: plain-text PGM (P2) with class ids as pixel values, northmost
// row first, plus a sidecar JSON at <path>.json holding grid placement and
// the class legend.
void write_class_raster(const std::filesystem::path& path, const ClassGrid& grid,
                        const std::map<int, std::string>& legend = {});
ClassGrid read_class_raster(const std::filesystem::path& path);

// Feature raster: row-major float32 payload (cell-major, d floats per cell)
// plus a sidecar JSON header at <path>.json.
void write_feature_raster(const std::filesystem::path& path, const FeatureGrid& grid);
FeatureGrid read_feature_raster(const std::filesystem::path& path);

void write_file_atomic(const std::filesystem::path& path, const std::string& data);
std::string read_file(const std::filesystem::path& path);

// %.9g, shared by every CSV writer.
std::string format_double(double v);

}  // namespace morphkern
