#include "ssg/baselines.hpp"

#include <cmath>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

void require_size(const Image& img, const char* op) {
    if (img.width() < 3 || img.height() < 3) {
        throw ImageTooSmall(std::string(op) + " requires width and height >= 3, got " +
                            std::to_string(img.width()) + "x" +
                            std::to_string(img.height()));
    }
}

ResponseMap magnitude_pair(const Image& img, const Kernel3x3& kx,
                           const Kernel3x3& ky, const char* method) {
    const Image gx = convolve3x3(img, kx);
    const Image gy = convolve3x3(img, ky);
    ResponseMap out{Image(img.width(), img.height()), method};
    auto& dst = out.values.pixels();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        const double a = gx.pixels()[i];
        const double b = gy.pixels()[i];
        dst[i] = std::sqrt(a * a + b * b);
    }
    return out;
}

constexpr Kernel3x3 kSobelX{{-1, 0, 1, -2, 0, 2, -1, 0, 1}};
constexpr Kernel3x3 kSobelY{{-1, -2, -1, 0, 0, 0, 1, 2, 1}};
constexpr Kernel3x3 kPrewittX{{-1, 0, 1, -1, 0, 1, -1, 0, 1}};
constexpr Kernel3x3 kPrewittY{{-1, -1, -1, 0, 0, 0, 1, 1, 1}};
constexpr Kernel3x3 kLaplacian{{0, 1, 0, 1, -4, 1, 0, 1, 0}};

constexpr std::array<Kernel3x3, 8> kKirschMasks{{
    {{5, 5, 5, -3, 0, -3, -3, -3, -3}},    // N
    {{5, 5, -3, 5, 0, -3, -3, -3, -3}},    // NW
    {{5, -3, -3, 5, 0, -3, 5, -3, -3}},    // W
    {{-3, -3, -3, 5, 0, -3, 5, 5, -3}},    // SW
    {{-3, -3, -3, -3, 0, -3, 5, 5, 5}},    // S
    {{-3, -3, -3, -3, 0, 5, -3, 5, 5}},    // SE
    {{-3, -3, 5, -3, 0, 5, -3, -3, 5}},    // E
    {{-3, 5, 5, -3, 0, 5, -3, -3, -3}},    // NE
}};

}  // namespace

Image convolve3x3(const Image& img, const Kernel3x3& kern) {
    require_size(img, "convolve3x3");
    const int w = img.width();
    const int h = img.height();
    Image out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int ky = -1; ky <= 1; ++ky) {
                for (int kx = -1; kx <= 1; ++kx) {
                    acc += kern.at(kx, ky) * img.at_clamped(x + kx, y + ky);
                }
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

ResponseMap sobel(const Image& img) {
    require_size(img, "sobel");
    return magnitude_pair(img, kSobelX, kSobelY, "sobel");
}

ResponseMap prewitt(const Image& img) {
    require_size(img, "prewitt");
    return magnitude_pair(img, kPrewittX, kPrewittY, "prewitt");
}

ResponseMap kirsch(const Image& img) {
    require_size(img, "kirsch");
    ResponseMap out{Image(img.width(), img.height()), "kirsch"};
    for (const Kernel3x3& mask : kKirschMasks) {
        const Image conv = convolve3x3(img, mask);
        auto& dst = out.values.pixels();
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] = std::max(dst[i], std::abs(conv.pixels()[i]));
        }
    }
    return out;
}

ResponseMap sis(const Image& img) {
    require_size(img, "sis");
    const int w = img.width();
    const int h = img.height();
    ResponseMap out{Image(w, h), "sis"};
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double ex = std::abs(img.at_clamped(x + 1, y) - img.at_clamped(x - 1, y));
            const double ey = std::abs(img.at_clamped(x, y + 1) - img.at_clamped(x, y - 1));
            out.values.at(x, y) = std::max(ex, ey);
        }
    }
    return out;
}

BinaryMap laplacian_zero_cross(const Image& img, double threshold) {
    require_size(img, "laplacian_zero_cross");
    const Image lap = convolve3x3(img, kLaplacian);
    const int w = img.width();
    const int h = img.height();

    BinaryMap out;
    out.width = w;
    out.height = h;
    out.bits.assign(static_cast<std::size_t>(w) * h, 0);

    auto crossing = [&](double a, double b) {
        return a * b < 0.0 && std::abs(a - b) > threshold;
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double c = lap.at(x, y);
            if ((x + 1 < w && crossing(c, lap.at(x + 1, y))) ||
                (y + 1 < h && crossing(c, lap.at(x, y + 1)))) {
                out.set(x, y, true);
            }
        }
    }
    return out;
}

}  // namespace ssg
