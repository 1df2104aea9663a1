#pragma once

#include <array>

#include "ssg/image.hpp"

namespace ssg {

/// 3x3 convolution mask, stored row-major in correlation orientation.
struct Kernel3x3 {
    std::array<double, 9> coefficients;

    /// kx, ky in {-1, 0, 1}.
    double at(int kx, int ky) const noexcept {
        return coefficients[static_cast<std::size_t>(ky + 1) * 3 + (kx + 1)];
    }
};

/// Correlation (no kernel flip) with edge-replicate padding.
Image convolve3x3(const Image& img, const Kernel3x3& kern);

ResponseMap sobel(const Image& img);
ResponseMap prewitt(const Image& img);

/// Max magnitude over the eight compass masks (5/-3 coefficients).
ResponseMap kirsch(const Image& img);

/// Simple image statistics detector: per pixel the larger of the absolute
/// central differences along x and y (replicate at borders).
ResponseMap sis(const Image& img);

/// Unsmoothed Laplacian zero-crossing detector. A pixel is marked when the
/// Laplacian changes sign against its right or bottom neighbour and the
/// response difference across the crossing exceeds the threshold.
BinaryMap laplacian_zero_cross(const Image& img, double threshold);

}  // namespace ssg
