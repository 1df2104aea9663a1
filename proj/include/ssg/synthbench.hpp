#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ssg/image.hpp"
#include "ssg/lst.hpp"

namespace ssg {

enum class Shape { step, gaussian, ramp };

std::string shape_name(Shape shape);
Shape shape_from_name(const std::string& name);

/// Recipe for one synthetic benchmark image. noise_pct is the additive
/// Gaussian standard deviation as a percentage of the clean image maximum.
struct SyntheticSpec {
    Shape shape = Shape::step;
    int size = 64;
    double amplitude = 255.0;
    double noise_pct = 0.0;
    std::uint64_t seed = 0;
};

/// Where the true edge lives: a step column (evaluated per row), a radius
/// around a center (evaluated per ray), or nowhere (ramp).
struct EdgeTruth {
    enum class Kind { step_column, radial, none };
    Kind kind = Kind::none;
    double position = 0.0;  // column index, or radius in pixels
    double center_x = 0.0;
    double center_y = 0.0;
};

struct ShapeSample {
    Image image;
    EdgeTruth truth;
};

/// Noise-free test shape plus its ground truth.
///   step:     columns [0, N/2) = 0, [N/2, N) = amplitude; truth column N/2
///   gaussian: amplitude * exp(-((x-c)^2+(y-c)^2) / (2 s^2)), c = N/2,
///             s = N/8; truth radius s (max radial intensity gradient)
///   ramp:     amplitude * x / (N-1); no localized edge
ShapeSample make_shape(const SyntheticSpec& spec);

/// Adds i.i.d. Gaussian noise, sigma = (noise_pct/100) * max(img).
/// Deterministic given the seed. Output is not clamped.
Image add_noise(const Image& img, double noise_pct, std::uint64_t seed);

struct LocalizationMetrics {
    double rate = 0.0;        // fraction of rows/rays localized within tolerance
    double mean_error = 0.0;  // mean |argmax - truth| in pixels
    double contrast = 0.0;    // mean response near truth / mean response elsewhere
};

/// Per-row argmax for step truth, per-ray argmax (bilinear radial sampling)
/// for radial truth; ties resolve to the lowest index. Throws
/// IncompatibleTruth for truths without a localized edge.
LocalizationMetrics localization_metrics(const ResponseMap& resp,
                                         const EdgeTruth& truth,
                                         int tolerance_px);

struct BenchRow {
    std::string method;
    Shape shape = Shape::step;
    double noise_pct = 0.0;
    std::uint64_t seed = 0;
    double loc_rate = 0.0;
    double mean_error = 0.0;
    double contrast = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// Mean/stddev over seeds for one (method, shape, noise) cell.
struct AggregateRow {
    std::string method;
    Shape shape = Shape::step;
    double noise_pct = 0.0;
    int cells = 0;
    double mean_rate = 0.0;
    double std_rate = 0.0;
    double mean_error = 0.0;
    double mean_contrast = 0.0;
};

struct BenchOptions {
    int tolerance_px = 2;
    LstConfig lst;
    /// When set, per-cell response rasters are written here as PGMs.
    std::filesystem::path dump_dir;
};

/// Cartesian product of method x spec x seed (seeds spec.seed + i for
/// i < seeds_per_cell). The noisy image for a (spec, seed) pair is shared
/// across methods. Per-cell operator failures are reported on stderr and
/// skipped without aborting the remaining cells. Ramp cells carry a
/// uniformity contrast (mean/max of the response) and zero localization
/// fields, since a linear ramp has no localized edge.
BenchReport run_bench(const std::vector<std::string>& methods,
                      const std::vector<SyntheticSpec>& specs,
                      int seeds_per_cell, const BenchOptions& options = {});

std::vector<AggregateRow> aggregate(const BenchReport& report);

/// CSV with header: method,shape,noise_pct,seed,loc_rate,mean_err,contrast
void write_report_csv(const BenchReport& report,
                      const std::filesystem::path& path);
std::string report_to_csv(const BenchReport& report);

/// Splitmix64 of (base, stream); the library's sub-seed derivation.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace ssg
