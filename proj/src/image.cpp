#include "ssg/image.hpp"

#include <algorithm>
#include <cmath>

#include "ssg/errors.hpp"

namespace ssg {

Image::Image(int width, int height, double fill)
    : width_(width), height_(height),
      pixels_(static_cast<std::size_t>(width) * height, fill) {
    if (width < 0 || height < 0) {
        throw Error("Image dimensions must be non-negative");
    }
}

Image::Image(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 0 || height < 0 ||
        pixels_.size() != static_cast<std::size_t>(width) * height) {
        throw Error("pixel count does not match width*height");
    }
}

double Image::at_clamped(int x, int y) const noexcept {
    x = std::clamp(x, 0, width_ - 1);
    y = std::clamp(y, 0, height_ - 1);
    return at(x, y);
}

double Image::min_value() const {
    if (pixels_.empty()) throw EmptyInput("min_value of empty image");
    return *std::min_element(pixels_.begin(), pixels_.end());
}

double Image::max_value() const {
    if (pixels_.empty()) throw EmptyInput("max_value of empty image");
    return *std::max_element(pixels_.begin(), pixels_.end());
}

bool Image::all_finite() const noexcept {
    return std::all_of(pixels_.begin(), pixels_.end(),
                       [](double v) { return std::isfinite(v); });
}

Image Image::transposed() const {
    Image out(height_, width_);
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            out.at(y, x) = at(x, y);
        }
    }
    return out;
}

double BinaryMap::fraction_true() const {
    if (bits.empty()) return 0.0;
    std::size_t n = 0;
    for (std::uint8_t b : bits) n += b ? 1 : 0;
    return static_cast<double>(n) / static_cast<double>(bits.size());
}

GradientField gradient(const Image& img) {
    const int w = img.width();
    const int h = img.height();
    if (w < 3 || h < 3) {
        throw ImageTooSmall("gradient requires width and height >= 3, got " +
                            std::to_string(w) + "x" + std::to_string(h));
    }

    GradientField field{Image(w, h), Image(w, h)};
    for (int y = 0; y < h; ++y) {
        field.gx.at(0, y) = img.at(1, y) - img.at(0, y);
        for (int x = 1; x < w - 1; ++x) {
            field.gx.at(x, y) = (img.at(x + 1, y) - img.at(x - 1, y)) / 2.0;
        }
        field.gx.at(w - 1, y) = img.at(w - 1, y) - img.at(w - 2, y);
    }
    for (int x = 0; x < w; ++x) {
        field.gy.at(x, 0) = img.at(x, 1) - img.at(x, 0);
        for (int y = 1; y < h - 1; ++y) {
            field.gy.at(x, y) = (img.at(x, y + 1) - img.at(x, y - 1)) / 2.0;
        }
        field.gy.at(x, h - 1) = img.at(x, h - 1) - img.at(x, h - 2);
    }
    return field;
}

}  // namespace ssg
