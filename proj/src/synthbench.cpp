#include "ssg/synthbench.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "ssg/errors.hpp"
#include "ssg/io.hpp"
#include "ssg/methods.hpp"

namespace ssg {

namespace {

constexpr int kNumRays = 64;

// Bilinear sample; callers keep coordinates inside the raster.
double sample_bilinear(const Image& img, double x, double y) {
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0;
    const double fy = y - y0;
    const double v00 = img.at_clamped(x0, y0);
    const double v10 = img.at_clamped(x0 + 1, y0);
    const double v01 = img.at_clamped(x0, y0 + 1);
    const double v11 = img.at_clamped(x0 + 1, y0 + 1);
    return v00 * (1 - fx) * (1 - fy) + v10 * fx * (1 - fy) +
           v01 * (1 - fx) * fy + v11 * fx * fy;
}

LocalizationMetrics step_metrics(const Image& resp, double truth_col,
                                 int tolerance_px) {
    const int w = resp.width();
    const int h = resp.height();
    LocalizationMetrics m;
    double err_sum = 0.0;
    int hits = 0;
    double in_sum = 0.0, out_sum = 0.0;
    std::size_t in_n = 0, out_n = 0;

    for (int y = 0; y < h; ++y) {
        int argmax = 0;
        for (int x = 1; x < w; ++x) {
            if (resp.at(x, y) > resp.at(argmax, y)) argmax = x;
        }
        const double err = std::abs(argmax - truth_col);
        err_sum += err;
        if (err <= tolerance_px) ++hits;
        for (int x = 0; x < w; ++x) {
            if (std::abs(x - truth_col) <= tolerance_px) {
                in_sum += resp.at(x, y);
                ++in_n;
            } else {
                out_sum += resp.at(x, y);
                ++out_n;
            }
        }
    }

    m.rate = static_cast<double>(hits) / h;
    m.mean_error = err_sum / h;
    const double in_mean = in_n ? in_sum / in_n : 0.0;
    const double out_mean = out_n ? out_sum / out_n : 0.0;
    m.contrast = out_mean > 0.0
                     ? in_mean / out_mean
                     : std::numeric_limits<double>::infinity();
    return m;
}

LocalizationMetrics radial_metrics(const Image& resp, const EdgeTruth& truth,
                                   int tolerance_px) {
    const int w = resp.width();
    const int h = resp.height();
    const double cx = truth.center_x;
    const double cy = truth.center_y;
    const int r_max = static_cast<int>(std::floor(std::min(
                          std::min(cx, cy),
                          std::min(w - 1 - cx, h - 1 - cy)))) - 1;
    if (r_max < 2) throw IncompatibleTruth("radial truth center too close to border");

    LocalizationMetrics m;
    double err_sum = 0.0;
    int hits = 0;
    double in_sum = 0.0, out_sum = 0.0;
    std::size_t in_n = 0, out_n = 0;

    for (int ray = 0; ray < kNumRays; ++ray) {
        const double theta = 2.0 * std::numbers::pi * ray / kNumRays;
        const double dx = std::cos(theta);
        const double dy = std::sin(theta);
        int arg_r = 1;
        double best = -1.0;
        for (int r = 1; r <= r_max; ++r) {
            const double v = sample_bilinear(resp, cx + r * dx, cy + r * dy);
            if (v > best) {
                best = v;
                arg_r = r;
            }
            if (std::abs(r - truth.position) <= tolerance_px) {
                in_sum += v;
                ++in_n;
            } else {
                out_sum += v;
                ++out_n;
            }
        }
        const double err = std::abs(arg_r - truth.position);
        err_sum += err;
        if (err <= tolerance_px) ++hits;
    }

    m.rate = static_cast<double>(hits) / kNumRays;
    m.mean_error = err_sum / kNumRays;
    const double in_mean = in_n ? in_sum / in_n : 0.0;
    const double out_mean = out_n ? out_sum / out_n : 0.0;
    m.contrast = out_mean > 0.0
                     ? in_mean / out_mean
                     : std::numeric_limits<double>::infinity();
    return m;
}

// Contrast stand-in for shapes without a localized edge: mean/max of the
// response, 1.0 for a perfectly flat (or all-zero) map.
LocalizationMetrics uniformity_metrics(const Image& resp) {
    LocalizationMetrics m;
    const double hi = resp.max_value();
    if (hi <= 0.0) {
        m.contrast = 1.0;
        return m;
    }
    double sum = 0.0;
    for (double v : resp.pixels()) sum += v;
    m.contrast = sum / static_cast<double>(resp.size()) / hi;
    return m;
}

}  // namespace

std::string shape_name(Shape shape) {
    switch (shape) {
        case Shape::step: return "step";
        case Shape::gaussian: return "gaussian";
        case Shape::ramp: return "ramp";
    }
    return "?";
}

Shape shape_from_name(const std::string& name) {
    if (name == "step") return Shape::step;
    if (name == "gaussian") return Shape::gaussian;
    if (name == "ramp") return Shape::ramp;
    throw Error("unknown shape '" + name + "' (expected step|gaussian|ramp)");
}

ShapeSample make_shape(const SyntheticSpec& spec) {
    if (spec.size < 16) throw Error("SyntheticSpec.size must be >= 16");
    if (spec.noise_pct < 0.0 || spec.noise_pct > 100.0) {
        throw Error("SyntheticSpec.noise_pct must lie in [0, 100]");
    }
    const int n = spec.size;
    Image img(n, n);
    EdgeTruth truth;

    switch (spec.shape) {
        case Shape::step: {
            const int col = n / 2;
            for (int y = 0; y < n; ++y) {
                for (int x = 0; x < n; ++x) {
                    img.at(x, y) = x < col ? 0.0 : spec.amplitude;
                }
            }
            truth = {EdgeTruth::Kind::step_column, static_cast<double>(col), 0, 0};
            break;
        }
        case Shape::gaussian: {
            const int c = n / 2;
            const double s = n / 8.0;
            for (int y = 0; y < n; ++y) {
                for (int x = 0; x < n; ++x) {
                    const double dx = x - c;
                    const double dy = y - c;
                    img.at(x, y) =
                        spec.amplitude * std::exp(-(dx * dx + dy * dy) / (2 * s * s));
                }
            }
            truth = {EdgeTruth::Kind::radial, s, static_cast<double>(c),
                     static_cast<double>(c)};
            break;
        }
        case Shape::ramp: {
            for (int y = 0; y < n; ++y) {
                for (int x = 0; x < n; ++x) {
                    img.at(x, y) = spec.amplitude * x / (n - 1);
                }
            }
            truth = {EdgeTruth::Kind::none, 0, 0, 0};
            break;
        }
    }
    return ShapeSample{std::move(img), truth};
}

Image add_noise(const Image& img, double noise_pct, std::uint64_t seed) {
    if (noise_pct < 0.0) throw Error("noise_pct must be >= 0");
    if (noise_pct == 0.0 || img.empty()) return img;
    const double sigma = noise_pct / 100.0 * img.max_value();
    if (sigma <= 0.0) return img;

    Image out = img;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, sigma);
    for (double& v : out.pixels()) v += dist(rng);
    return out;
}

LocalizationMetrics localization_metrics(const ResponseMap& resp,
                                         const EdgeTruth& truth,
                                         int tolerance_px) {
    if (tolerance_px < 1) throw Error("tolerance_px must be >= 1");
    switch (truth.kind) {
        case EdgeTruth::Kind::step_column:
            return step_metrics(resp.values, truth.position, tolerance_px);
        case EdgeTruth::Kind::radial:
            return radial_metrics(resp.values, truth, tolerance_px);
        case EdgeTruth::Kind::none:
            break;
    }
    throw IncompatibleTruth("truth carries no localized edge");
}

BenchReport run_bench(const std::vector<std::string>& methods,
                      const std::vector<SyntheticSpec>& specs,
                      int seeds_per_cell, const BenchOptions& options) {
    if (methods.empty() || specs.empty() || seeds_per_cell < 1) {
        throw Error("run_bench needs methods, specs and seeds_per_cell >= 1");
    }

    BenchReport report;
    report.rows.reserve(methods.size() * specs.size() * seeds_per_cell);

    for (const SyntheticSpec& spec : specs) {
        const ShapeSample sample = make_shape(spec);
        for (int i = 0; i < seeds_per_cell; ++i) {
            const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(i);
            const Image noisy = add_noise(sample.image, spec.noise_pct, seed);
            for (const std::string& method : methods) {
                BenchRow row{method, spec.shape, spec.noise_pct, seed, 0, 0, 0};
                try {
                    const ResponseMap resp = apply_method(method, noisy, options.lst);
                    const LocalizationMetrics m =
                        sample.truth.kind == EdgeTruth::Kind::none
                            ? uniformity_metrics(resp.values)
                            : localization_metrics(resp, sample.truth,
                                                   options.tolerance_px);
                    row.loc_rate = m.rate;
                    row.mean_error = m.mean_error;
                    row.contrast = m.contrast;
                    if (!options.dump_dir.empty()) {
                        std::ostringstream name;
                        name << method << "_" << shape_name(spec.shape) << "_n"
                             << spec.noise_pct << "_s" << seed << ".pgm";
                        write_pgm(resp.values, options.dump_dir / name.str(),
                                  /*normalize=*/true);
                    }
                } catch (const Error& e) {
                    std::cerr << "bench cell failed (" << method << ", "
                              << shape_name(spec.shape) << ", noise "
                              << spec.noise_pct << ", seed " << seed
                              << "): " << e.what() << "\n";
                    continue;
                }
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

std::vector<AggregateRow> aggregate(const BenchReport& report) {
    std::vector<AggregateRow> result;
    auto find_cell = [&](const BenchRow& row) -> AggregateRow& {
        for (AggregateRow& agg : result) {
            if (agg.method == row.method && agg.shape == row.shape &&
                agg.noise_pct == row.noise_pct) {
                return agg;
            }
        }
        result.push_back(AggregateRow{row.method, row.shape, row.noise_pct,
                                      0, 0, 0, 0, 0});
        return result.back();
    };

    // First pass: means.
    for (const BenchRow& row : report.rows) {
        AggregateRow& agg = find_cell(row);
        agg.cells += 1;
        agg.mean_rate += row.loc_rate;
        agg.mean_error += row.mean_error;
        agg.mean_contrast += std::isfinite(row.contrast) ? row.contrast : 0.0;
    }
    for (AggregateRow& agg : result) {
        agg.mean_rate /= agg.cells;
        agg.mean_error /= agg.cells;
        agg.mean_contrast /= agg.cells;
    }
    // Second pass: stddev of the localization rate.
    for (const BenchRow& row : report.rows) {
        AggregateRow& agg = find_cell(row);
        const double d = row.loc_rate - agg.mean_rate;
        agg.std_rate += d * d;
    }
    for (AggregateRow& agg : result) {
        agg.std_rate = agg.cells > 1 ? std::sqrt(agg.std_rate / (agg.cells - 1)) : 0.0;
    }
    return result;
}

std::string report_to_csv(const BenchReport& report) {
    std::string out = "method,shape,noise_pct,seed,loc_rate,mean_err,contrast\n";
    for (const BenchRow& row : report.rows) {
        out += row.method;
        out += ',';
        out += shape_name(row.shape);
        out += ',';
        out += format_double(row.noise_pct);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        out += format_double(row.loc_rate);
        out += ',';
        out += format_double(row.mean_error);
        out += ',';
        out += format_double(row.contrast);
        out += '\n';
    }
    return out;
}

void write_report_csv(const BenchReport& report,
                      const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << report_to_csv(report);
    if (!out) throw IoFailure("write failed: " + path.string());
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 step over base advanced by the stream index.
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace ssg
