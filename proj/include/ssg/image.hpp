#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ssg {

/// Row-major raster of double-precision intensities.
///
/// Grayscale images use the nominal [0, 255] range; derived rasters
/// (brightness maps, edge responses, noisy images) are unconstrained reals.
class Image {
public:
    Image() = default;
    Image(int width, int height, double fill = 0.0);
    Image(int width, int height, std::vector<double> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }
    bool empty() const noexcept { return pixels_.empty(); }

    double& at(int x, int y) noexcept { return pixels_[index(x, y)]; }
    double at(int x, int y) const noexcept { return pixels_[index(x, y)]; }

    /// Read with edge-replicate semantics for out-of-range coordinates.
    double at_clamped(int x, int y) const noexcept;

    std::vector<double>& pixels() noexcept { return pixels_; }
    const std::vector<double>& pixels() const noexcept { return pixels_; }

    double min_value() const;
    double max_value() const;
    bool all_finite() const noexcept;
    bool same_shape(const Image& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    Image transposed() const;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> pixels_;
};

/// Paired per-pixel directional derivatives, same shape as the source.
struct GradientField {
    Image gx;
    Image gy;
};

/// Non-negative per-pixel edge response plus the id of the producing operator.
struct ResponseMap {
    Image values;
    std::string method;
};

/// Row-major boolean edge map. `degenerate` is set by binarize() when the
/// response histogram had no spread and the map was forced all-false.
struct BinaryMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;
    bool degenerate = false;

    bool get(int x, int y) const noexcept {
        return bits[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool v) noexcept {
        bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }
    double fraction_true() const;
};

/// Central-difference gradient; one-sided first differences at the borders
/// (forward at index 0, backward at the last index). Exact for affine images.
/// Throws ImageTooSmall unless width and height are both >= 3.
GradientField gradient(const Image& img);

}  // namespace ssg
