#include "ssg/lst.hpp"

#include <cmath>

#include "ssg/errors.hpp"

namespace ssg {

double shepard_weight(double g) noexcept {
    return g * std::exp(-std::abs(g));
}

double shepard_weight_alt(double g) noexcept {
    const double a = std::abs(g);
    return a * (1.0 - std::exp(-a));
}

BrightnessMap perceived_brightness(const Image& img, const LstConfig& cfg) {
    BrightnessMap out{Image(img.width(), img.height())};
    const auto& src = img.pixels();
    auto& dst = out.values.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = cfg.k * std::log10(std::max(src[i], cfg.epsilon_floor));
    }
    return out;
}

StimulusField stimulus_field(const Image& img, const LstConfig& cfg) {
    const BrightnessMap bright = perceived_brightness(img, cfg);
    GradientField grad = gradient(bright.values);

    auto weigh = [&](Image& raster) {
        for (double& v : raster.pixels()) {
            v = cfg.alternate_form ? shepard_weight_alt(v) : shepard_weight(v);
        }
    };
    weigh(grad.gx);
    weigh(grad.gy);
    return StimulusField{std::move(grad.gx), std::move(grad.gy)};
}

ResponseMap stimulus_magnitude(const StimulusField& stim,
                               const std::string& method) {
    ResponseMap out{Image(stim.vx.width(), stim.vx.height()), method};
    const auto& vx = stim.vx.pixels();
    const auto& vy = stim.vy.pixels();
    auto& dst = out.values.pixels();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = std::sqrt(vx[i] * vx[i] + vy[i] * vy[i]);
    }
    return out;
}

ResponseMap local_stimuli(const Image& img, const LstConfig& cfg) {
    return stimulus_magnitude(stimulus_field(img, cfg),
                              cfg.alternate_form ? "lst-alt" : "lst");
}

}  // namespace ssg
