#include "ssg/otsu.hpp"

#include <array>
#include <cmath>

#include "ssg/errors.hpp"

namespace ssg {

double otsu_threshold(const Image& raster) {
    if (raster.empty()) throw EmptyInput("otsu_threshold: empty raster");
    const double lo = raster.min_value();
    const double hi = raster.max_value();
    if (hi == lo) {
        throw DegenerateHistogram("constant raster, value " + std::to_string(lo));
    }

    std::array<double, 256> hist{};
    const double scale = 255.0 / (hi - lo);
    for (double v : raster.pixels()) {
        long bin = std::lround((v - lo) * scale);
        if (bin < 0) bin = 0;
        if (bin > 255) bin = 255;
        hist[static_cast<std::size_t>(bin)] += 1.0;
    }

    const double total = static_cast<double>(raster.size());
    double total_mean = 0.0;
    for (int b = 0; b < 256; ++b) total_mean += b * hist[b];
    total_mean /= total;

    int best_bin = 0;
    double best_variance = -1.0;
    double w0 = 0.0;
    double sum0 = 0.0;
    for (int t = 0; t < 256; ++t) {
        w0 += hist[t] / total;
        sum0 += t * hist[t] / total;
        if (w0 <= 0.0 || w0 >= 1.0) continue;
        const double w1 = 1.0 - w0;
        const double mu0 = sum0 / w0;
        const double mu1 = (total_mean - sum0) / w1;
        const double variance = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (variance > best_variance) {
            best_variance = variance;
            best_bin = t;
        }
    }

    return lo + (best_bin + 0.5) * (hi - lo) / 255.0;
}

BinaryMap binarize(const ResponseMap& resp) {
    BinaryMap out;
    out.width = resp.values.width();
    out.height = resp.values.height();
    out.bits.assign(resp.values.size(), 0);

    double threshold = 0.0;
    try {
        threshold = otsu_threshold(resp.values);
    } catch (const DegenerateHistogram&) {
        out.degenerate = true;
        return out;
    }

    const auto& values = resp.values.pixels();
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.bits[i] = values[i] > threshold ? 1 : 0;
    }
    return out;
}

}  // namespace ssg
