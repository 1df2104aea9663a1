// Shared test utilities and independent reference implementations. The
// references are deliberately written as plain scalar loops, separate from
// the library code paths they check.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "ssg/image.hpp"

namespace testutil {

inline ssg::Image random_image(int w, int h, std::uint64_t seed, double lo = 0.0,
                               double hi = 255.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    ssg::Image img(w, h);
    for (double& v : img.pixels()) v = dist(rng);
    return img;
}

inline ssg::Image random_integer_image(int w, int h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    ssg::Image img(w, h);
    for (double& v : img.pixels()) v = static_cast<double>(dist(rng));
    return img;
}

// Counter-clockwise quarter turn: (x, y) -> (y, w-1-x).
inline ssg::Image rotate90(const ssg::Image& img) {
    ssg::Image out(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out.at(y, img.width() - 1 - x) = img.at(x, y);
        }
    }
    return out;
}

inline double max_abs_diff(const ssg::Image& a, const ssg::Image& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.pixels().size(); ++i) {
        worst = std::max(worst, std::abs(a.pixels()[i] - b.pixels()[i]));
    }
    return worst;
}

// Reference central-difference gradient, double loops, no shared code with
// ssg::gradient.
inline void ref_gradient(const ssg::Image& img, ssg::Image& gx, ssg::Image& gy) {
    const int w = img.width();
    const int h = img.height();
    gx = ssg::Image(w, h);
    gy = ssg::Image(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (x == 0) {
                gx.at(x, y) = img.at(1, y) - img.at(0, y);
            } else if (x == w - 1) {
                gx.at(x, y) = img.at(w - 1, y) - img.at(w - 2, y);
            } else {
                gx.at(x, y) = (img.at(x + 1, y) - img.at(x - 1, y)) / 2.0;
            }
            if (y == 0) {
                gy.at(x, y) = img.at(x, 1) - img.at(x, 0);
            } else if (y == h - 1) {
                gy.at(x, y) = img.at(x, h - 1) - img.at(x, h - 2);
            } else {
                gy.at(x, y) = (img.at(x, y + 1) - img.at(x, y - 1)) / 2.0;
            }
        }
    }
}

// Scalar reference of the whole local-stimuli pipeline.
inline ssg::Image ref_local_stimuli(const ssg::Image& img, double k,
                                    double floor_value) {
    const int w = img.width();
    const int h = img.height();
    ssg::Image bright(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            bright.at(x, y) = k * std::log10(std::max(img.at(x, y), floor_value));
        }
    }
    ssg::Image gx, gy;
    ref_gradient(bright, gx, gy);
    ssg::Image out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double vx = gx.at(x, y) * std::exp(-std::abs(gx.at(x, y)));
            const double vy = gy.at(x, y) * std::exp(-std::abs(gy.at(x, y)));
            out.at(x, y) = std::sqrt(vx * vx + vy * vy);
        }
    }
    return out;
}

// Exhaustive 256-candidate Otsu scan over the documented binning rule.
// Returns the winning bin; raster-unit conversion is up to the caller.
inline int ref_otsu_bin(const ssg::Image& raster) {
    const double lo = *std::min_element(raster.pixels().begin(), raster.pixels().end());
    const double hi = *std::max_element(raster.pixels().begin(), raster.pixels().end());
    std::array<double, 256> hist{};
    for (double v : raster.pixels()) {
        long bin = std::lround((v - lo) * 255.0 / (hi - lo));
        bin = std::clamp(bin, 0L, 255L);
        hist[static_cast<std::size_t>(bin)] += 1.0;
    }
    const double total = static_cast<double>(raster.pixels().size());

    int best = 0;
    double best_var = -1.0;
    for (int t = 0; t < 256; ++t) {
        double n0 = 0, n1 = 0, s0 = 0, s1 = 0;
        for (int b = 0; b <= t; ++b) {
            n0 += hist[b];
            s0 += b * hist[b];
        }
        for (int b = t + 1; b < 256; ++b) {
            n1 += hist[b];
            s1 += b * hist[b];
        }
        if (n0 == 0 || n1 == 0) continue;
        const double w0 = n0 / total;
        const double w1 = n1 / total;
        const double mu0 = s0 / n0;
        const double mu1 = s1 / n1;
        const double var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (var > best_var) {
            best_var = var;
            best = t;
        }
    }
    return best;
}

// Trapezoidal ROC integral over the genuine/impostor score sets, with
// "score <= threshold" accept rule (small scores are genuine-like).
inline double ref_auc_trapezoid(std::vector<double> genuine,
                                std::vector<double> impostor) {
    std::vector<double> thresholds = genuine;
    thresholds.insert(thresholds.end(), impostor.begin(), impostor.end());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                     thresholds.end());

    auto frac_leq = [](const std::vector<double>& v, double t) {
        std::size_t n = 0;
        for (double x : v) n += x <= t ? 1 : 0;
        return static_cast<double>(n) / static_cast<double>(v.size());
    };

    double auc = 0.0;
    double prev_fpr = 0.0, prev_tpr = 0.0;
    for (double t : thresholds) {
        const double tpr = frac_leq(genuine, t);
        const double fpr = frac_leq(impostor, t);
        auc += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0;
        prev_fpr = fpr;
        prev_tpr = tpr;
    }
    auc += (1.0 - prev_fpr) * (1.0 + prev_tpr) / 2.0;
    return auc;
}

// Minimal scratch directory per test, removed on destruction.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("ssg_test_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

}  // namespace testutil
